#pragma once

#include <optional>
#include <string>

#include "cayley_k0/exact_linalg.hpp"
#include "cayley_k0/graph_model.hpp"

namespace cayley_k0::k_theory {

enum class k0_method { full, reduced, closed_form_j2, closed_form_j3 };

const char* method_name(k0_method m);

struct k0_result {
  exact_linalg::fin_gen_abelian_group group;
  k0_method method;
  std::optional<exact_linalg::smith_decomposition> witnesses;
};

// K0 via the full n x n route: Coker(I_n - A^t) of C_n^j.
k0_result k0_full(long n, long j);

// K0 via the companion-matrix reduction: Coker(M_j^n - I_j), a j x j
// computation.  Requires j >= 2 and n >= j.
k0_result k0_reduced(long n, long j);

// d_3(n) = gcd{ G(n-1), G(n-3), G(n-2) - 1 }.
Int d3(long n);

// d'_3(n) = gcd of the three 2x2-minor combinations
//   G(n-1)G(n-3) - (G(n-2)-1)^2,
//   G(n)G(n-3)   - G(n-1)(G(n-2)-1),
//   G(n-1)^2     - G(n)(G(n-2)-1).
Int dprime3(long n);

// d_2(n) = gcd(F(n-1) - 1, F(n)).
Int d2(long n);

// Z_{d3} + Z_{d3'/d3} + Z_{H3/d3'}; the divisions hard-fail on remainder.
k0_result k0_closed_form_j3(long n);

// Z_{d2} + Z_{H2/d2}; the division hard-fails on remainder.
k0_result k0_closed_form_j2(long n);

// Verifies the reduction proof's matrix identities: PR = M_j^{j-1},
// QR = -I_j and (M_j^{n-j+1} P + Q) R = M_j^n - I_j.
bool companion_reduction_identities(long j, long n);

// True iff the all-ones vector has zero class in Coker(I - A^t).
bool identity_element_check(const graph_model::directed_multigraph& g);

struct kp_certificate_result {
  bool groups_isomorphic = false;
  bool identity_maps_to_identity = false;
  bool determinant_signs_match = false;
  bool valid() const {
    return groups_isomorphic && identity_maps_to_identity &&
           determinant_signs_match;
  }
};

// Builds the realization graph E_n from (d3, d3'/d3, H3/d3') and checks
// the three conditions of the restricted KP criterion against C_n^3:
// isomorphic K0 groups, identity class mapping to identity class, and
// det(I - A^t) negative on both sides.
kp_certificate_result kp_certificate(long n);

// The realization graph E_n itself (4 vertices, j = 3 slots).
graph_model::directed_multigraph realization_graph_for(long n);

// {"n":..,"j":..,"method":"..","torsion":[..],"free_rank":..,"order":..}
// with "order" the exact integer or the string "infinite".
std::string k0_to_json(long n, long j, const k0_result& r);

}  // namespace cayley_k0::k_theory
