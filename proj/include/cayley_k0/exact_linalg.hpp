#pragma once

#include <vector>

#include "cayley_k0/int_matrix.hpp"

namespace cayley_k0::exact_linalg {

// U * M * V = S with U, V unimodular and S = diag(factors), every nonzero
// factor dividing the next, zero factors trailing.  factors keeps the full
// diagonal (leading 1s included); see fin_gen_abelian_group for the
// normalized view.
struct smith_decomposition {
  int_matrix u;
  int_matrix s;
  int_matrix v;
  std::vector<Int> factors;
};

// Canonical finitely generated abelian group: torsion factors each >= 2 in
// a divisibility chain, plus a free rank.
struct fin_gen_abelian_group {
  std::vector<Int> torsion;
  std::size_t free_rank = 0;

  bool infinite() const { return free_rank > 0; }
  Int order() const;  // throws std::logic_error when infinite
  friend bool operator==(const fin_gen_abelian_group&,
                         const fin_gen_abelian_group&) = default;
};

// Builds the canonical group from a raw invariant-factor list: drops 1s,
// counts 0s into free_rank, and rejects lists violating the divisibility
// chain (which would indicate a broken caller).
fin_gen_abelian_group make_group(const std::vector<Int>& factors);

smith_decomposition snf(const int_matrix& m);

// Signed exact determinant via fraction-free (Bareiss) elimination.  Kept
// independent of snf because the Smith form forgets the sign.
Int determinant(const int_matrix& m);

// [alpha_0, ..., alpha_n]: alpha_i = gcd of all i x i minors (nonnegative;
// gcd of an all-zero set is 0).  Full minor enumeration is combinatorial,
// so matrices beyond 8 x 8 are rejected with unsupported_size_error.
std::vector<Int> determinant_divisors(const int_matrix& m);

// Invariant factors via the divisor quotients s_i = alpha_i / alpha_{i-1}.
// Throws zero_divisor_chain_error when some alpha_i = 0.
std::vector<Int> snf_factors_via_divisors(const int_matrix& m);

// Coker(M) = Z^rows / Im(M) in canonical form.
fin_gen_abelian_group cokernel(const int_matrix& m);

// Coordinates of v + Im(M) against the canonical decomposition of
// Coker(M): torsion coordinates reduced into [0, s_i), then free
// coordinates.  All-zero exactly when v lies in the image of M.
std::vector<Int> cokernel_class(const int_matrix& m, const std::vector<Int>& v);

// Exact M^n by binary exponentiation; M^0 = I.
int_matrix mat_pow(const int_matrix& m, unsigned long n);

}  // namespace cayley_k0::exact_linalg
