#include "cayley_k0/k_theory.hpp"

#include <sstream>

#include "cayley_k0/sequences.hpp"

namespace cayley_k0::k_theory {

using exact_linalg::fin_gen_abelian_group;
using exact_linalg::int_matrix;

namespace {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int div_exact(const Int& a, const Int& b, const char* context) {
  if (b == 0 || a % b != 0)
    throw inexact_division_error(std::string(context) +
                                 ": inexact division " + a.get_str() + " / " +
                                 b.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int_matrix i_minus_at(const int_matrix& a) {
  return int_matrix::identity(a.rows()) - a.transpose();
}

}  // namespace

const char* method_name(k0_method m) {
  switch (m) {
    case k0_method::full: return "full";
    case k0_method::reduced: return "reduced";
    case k0_method::closed_form_j2: return "closed_form_j2";
    case k0_method::closed_form_j3: return "closed_form_j3";
  }
  return "?";
}

k0_result k0_full(long n, long j) {
  if (n < 3) throw std::invalid_argument("k0_full: n < 3");
  if (j < 0 || j > n - 1)
    throw std::invalid_argument("k0_full: j out of range [0, n-1]");
  int_matrix m = i_minus_at(graph_model::cayley_graph(n, j).adjacency);
  exact_linalg::smith_decomposition d = exact_linalg::snf(m);
  k0_result r{exact_linalg::make_group(d.factors), k0_method::full,
              std::move(d)};
  return r;
}

k0_result k0_reduced(long n, long j) {
  if (j < 2)
    throw std::invalid_argument("k0_reduced: j < 2 (use the full route)");
  if (n < j) throw std::invalid_argument("k0_reduced: n < j");
  int_matrix mj = sequences::companion_matrix(j);
  int_matrix m = exact_linalg::mat_pow(mj, static_cast<unsigned long>(n)) -
                 int_matrix::identity(static_cast<std::size_t>(j));
  exact_linalg::smith_decomposition d = exact_linalg::snf(m);
  k0_result r{exact_linalg::make_group(d.factors), k0_method::reduced,
              std::move(d)};
  return r;
}

Int d3(long n) {
  if (n < 1) throw std::invalid_argument("d3: n < 1");
  using sequences::narayana;
  return gcd(gcd(narayana(n - 1), narayana(n - 3)), narayana(n - 2) - 1);
}

Int dprime3(long n) {
  if (n < 1) throw std::invalid_argument("dprime3: n < 1");
  using sequences::narayana;
  Int gn = narayana(n), gn1 = narayana(n - 1), gn2 = narayana(n - 2),
      gn3 = narayana(n - 3);
  Int a = gn1 * gn3 - (gn2 - 1) * (gn2 - 1);
  Int b = gn * gn3 - gn1 * (gn2 - 1);
  Int c = gn1 * gn1 - gn * (gn2 - 1);
  return gcd(gcd(a, b), c);
}

Int d2(long n) {
  if (n < 1) throw std::invalid_argument("d2: n < 1");
  return gcd(sequences::fibonacci(n - 1) - 1, sequences::fibonacci(n));
}

k0_result k0_closed_form_j3(long n) {
  if (n < 3) throw std::invalid_argument("k0_closed_form_j3: n < 3");
  Int s1 = d3(n);
  Int dp = dprime3(n);
  Int h = sequences::haselgrove(3, n);
  Int s2 = div_exact(dp, s1, "k0_closed_form_j3");
  Int s3 = div_exact(h, dp, "k0_closed_form_j3");
  return {exact_linalg::make_group({s1, s2, s3}), k0_method::closed_form_j3,
          std::nullopt};
}

k0_result k0_closed_form_j2(long n) {
  if (n < 3) throw std::invalid_argument("k0_closed_form_j2: n < 3");
  Int s1 = d2(n);
  Int h = sequences::h2_closed_form(n);
  Int s2 = div_exact(h, s1, "k0_closed_form_j2");
  return {exact_linalg::make_group({s1, s2}), k0_method::closed_form_j2,
          std::nullopt};
}

bool companion_reduction_identities(long j, long n) {
  if (j < 2) throw std::invalid_argument("companion_reduction_identities: j < 2");
  if (n <= 2 * j)
    throw std::invalid_argument("companion_reduction_identities: need n > 2j");
  const std::size_t d = static_cast<std::size_t>(j);

  int_matrix p(d, d);  // cyclic permutation: e_i -> e_{i+1}
  for (std::size_t i = 0; i + 1 < d; ++i) p(i, i + 1) = 1;
  p(d - 1, 0) = 1;

  int_matrix q(d, d);  // -1 diagonal, +1 superdiagonal
  for (std::size_t i = 0; i < d; ++i) q(i, i) = -1;
  for (std::size_t i = 0; i + 1 < d; ++i) q(i, i + 1) = 1;

  int_matrix r(d, d);  // upper triangular of ones
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i; k < d; ++k) r(i, k) = 1;

  int_matrix mj = sequences::companion_matrix(j);
  int_matrix id = int_matrix::identity(d);

  bool pr = (p * r == exact_linalg::mat_pow(mj, static_cast<unsigned long>(j - 1)));
  int_matrix minus_id(d, d);
  for (std::size_t i = 0; i < d; ++i) minus_id(i, i) = -1;
  bool qr = (q * r == minus_id);
  int_matrix lhs =
      (exact_linalg::mat_pow(mj, static_cast<unsigned long>(n - j + 1)) * p +
       q) * r;
  int_matrix rhs =
      exact_linalg::mat_pow(mj, static_cast<unsigned long>(n)) - id;
  return pr && qr && (lhs == rhs);
}

bool identity_element_check(const graph_model::directed_multigraph& g) {
  int_matrix m = i_minus_at(g.adjacency);
  std::vector<Int> ones(g.n_vertices, 1);
  for (const Int& c : exact_linalg::cokernel_class(m, ones))
    if (c != 0) return false;
  return true;
}

graph_model::directed_multigraph realization_graph_for(long n) {
  if (n < 3) throw std::invalid_argument("realization_graph_for: n < 3");
  Int s1 = d3(n);
  Int dp = dprime3(n);
  Int h = sequences::haselgrove(3, n);
  Int s2 = div_exact(dp, s1, "realization_graph_for");
  Int s3 = div_exact(h, dp, "realization_graph_for");
  return graph_model::realization_graph(3, {s1, s2, s3});
}

kp_certificate_result kp_certificate(long n) {
  if (n < 3) throw std::invalid_argument("kp_certificate: n < 3");
  graph_model::directed_multigraph cn = graph_model::cayley_graph(n, 3 % n);
  graph_model::directed_multigraph en = realization_graph_for(n);

  int_matrix mc = i_minus_at(cn.adjacency);
  int_matrix me = i_minus_at(en.adjacency);

  kp_certificate_result cert;
  cert.groups_isomorphic =
      (exact_linalg::cokernel(mc) == exact_linalg::cokernel(me));
  cert.identity_maps_to_identity =
      identity_element_check(cn) && identity_element_check(en);
  cert.determinant_signs_match = (exact_linalg::determinant(mc) < 0) &&
                                 (exact_linalg::determinant(me) < 0);
  return cert;
}

std::string k0_to_json(long n, long j, const k0_result& r) {
  std::ostringstream out;
  out << "{\"n\":" << n << ",\"j\":" << j << ",\"method\":\""
      << method_name(r.method) << "\",\"torsion\":[";
  for (std::size_t i = 0; i < r.group.torsion.size(); ++i) {
    if (i) out << ',';
    out << r.group.torsion[i].get_str();
  }
  out << "],\"free_rank\":" << r.group.free_rank << ",\"order\":";
  if (r.group.infinite())
    out << "\"infinite\"";
  else
    out << r.group.order().get_str();
  out << '}';
  return out.str();
}

}  // namespace cayley_k0::k_theory
