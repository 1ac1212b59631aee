#include "cayley_k0/exact_linalg.hpp"

#include <algorithm>
#include <optional>

namespace cayley_k0::exact_linalg {

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

// Position of the entry of least |value| among nonzero entries of the
// submatrix with corner (t,t), if any.
std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(
    const int_matrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int& e = m(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

Int fin_gen_abelian_group::order() const {
  if (infinite()) throw std::logic_error("order(): group is infinite");
  Int o = 1;
  for (const Int& t : torsion) o *= t;
  return o;
}

fin_gen_abelian_group make_group(const std::vector<Int>& factors) {
  fin_gen_abelian_group g;
  for (const Int& f : factors) {
    if (f < 0)
      throw std::invalid_argument("make_group: negative factor " +
                                  f.get_str());
    if (f == 0)
      ++g.free_rank;
    else if (g.free_rank > 0)
      throw std::invalid_argument(
          "make_group: nonzero factor after a zero factor");
    else if (f > 1)
      g.torsion.push_back(f);
  }
  for (std::size_t i = 0; i + 1 < g.torsion.size(); ++i)
    if (g.torsion[i + 1] % g.torsion[i] != 0)
      throw std::invalid_argument("make_group: factors violate divisibility: " +
                                  g.torsion[i].get_str() + " does not divide " +
                                  g.torsion[i + 1].get_str());
  return g;
}

smith_decomposition snf(const int_matrix& m) {
  if (m.empty()) throw std::invalid_argument("snf: empty matrix");
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t d = std::min(r, c);

  smith_decomposition out;
  out.s = m;
  out.u = int_matrix::identity(r);
  out.v = int_matrix::identity(c);
  int_matrix& s = out.s;

  for (std::size_t t = 0; t < d; ++t) {
    for (;;) {
      auto pivot = min_abs_pivot(s, t);
      if (!pivot) break;  // submatrix is all zero; trailing factors stay 0
      if (pivot->first != t) {
        s.swap_rows(t, pivot->first);
        out.u.swap_rows(t, pivot->first);
      }
      if (pivot->second != t) {
        s.swap_cols(t, pivot->second);
        out.v.swap_cols(t, pivot->second);
      }

      // Euclidean sweep: knock every other entry of row/column t down by
      // the pivot; a leftover remainder becomes the new (smaller) pivot on
      // the next pass of the loop.
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        if (q != 0) {
          s.add_row_multiple(i, t, -q);
          out.u.add_row_multiple(i, t, -q);
        }
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        if (q != 0) {
          s.add_col_multiple(j, t, -q);
          out.v.add_col_multiple(j, t, -q);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row/column t are clear; enforce that the pivot divides the rest of
      // the submatrix, folding an offending row into row t otherwise.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            out.u.add_row_multiple(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }

  // Sign normalization on the column side so that U carries no spurious
  // sign (cokernel_class reads coordinates through U).
  for (std::size_t t = 0; t < d; ++t)
    if (s(t, t) < 0) {
      s.negate_col(t);
      out.v.negate_col(t);
    }

  out.factors.reserve(d);
  for (std::size_t t = 0; t < d; ++t) out.factors.push_back(s(t, t));
  return out;
}

Int determinant(const int_matrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: non-square matrix");
  if (m.empty()) throw std::invalid_argument("determinant: empty matrix");
  const std::size_t n = m.rows();
  int_matrix w = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      w.swap_rows(k, swap_row);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

std::vector<Int> determinant_divisors(const int_matrix& m) {
  if (!m.square())
    throw std::invalid_argument("determinant_divisors: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    throw std::invalid_argument("determinant_divisors: empty matrix");
  if (n > 8)
    throw unsupported_size_error(
        "determinant_divisors: full minor enumeration limited to 8 x 8 "
        "(got " + std::to_string(n) + ")");

  std::vector<Int> alpha(n + 1);
  alpha[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    auto advance = [&](std::vector<std::size_t>& idx) {
      std::size_t i = k;
      while (i-- > 0) {
        if (idx[i] < n - k + i) {
          ++idx[i];
          for (std::size_t t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      do {
        int_matrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
        g = gcd(g, determinant(sub));
      } while (advance(ci));
    } while (advance(ri));
    alpha[k] = g;
  }
  return alpha;
}

std::vector<Int> snf_factors_via_divisors(const int_matrix& m) {
  std::vector<Int> alpha = determinant_divisors(m);
  for (std::size_t i = 1; i < alpha.size(); ++i)
    if (alpha[i] == 0)
      throw zero_divisor_chain_error(
          "snf_factors_via_divisors: alpha_" + std::to_string(i) + " = 0");
  std::vector<Int> factors;
  factors.reserve(alpha.size() - 1);
  for (std::size_t i = 1; i < alpha.size(); ++i)
    factors.push_back(
        div_exact(alpha[i], alpha[i - 1], "snf_factors_via_divisors"));
  return factors;
}

fin_gen_abelian_group cokernel(const int_matrix& m) {
  smith_decomposition d = snf(m);
  fin_gen_abelian_group g = make_group(d.factors);
  // Coker(M) lives on Z^rows: rows beyond the diagonal are untouched by
  // the image and contribute free summands.
  if (m.rows() > m.cols()) g.free_rank += m.rows() - m.cols();
  return g;
}

std::vector<Int> cokernel_class(const int_matrix& m, const std::vector<Int>& v) {
  if (v.size() != m.rows())
    throw std::invalid_argument("cokernel_class: vector length " +
                                std::to_string(v.size()) + " != rows " +
                                std::to_string(m.rows()));
  smith_decomposition d = snf(m);
  const std::size_t r = m.rows();
  const std::size_t k = d.factors.size();

  std::vector<Int> w(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) w[i] += d.u(i, j) * v[j];

  std::vector<Int> torsion_coords, free_coords;
  for (std::size_t i = 0; i < k; ++i) {
    const Int& s = d.factors[i];
    if (s == 0) {
      free_coords.push_back(w[i]);
    } else if (s > 1) {
      Int c;
      mpz_mod(c.get_mpz_t(), w[i].get_mpz_t(), s.get_mpz_t());
      torsion_coords.push_back(c);
    }
    // s == 1 summands are trivial and dropped from the canonical form.
  }
  for (std::size_t i = k; i < r; ++i) free_coords.push_back(w[i]);

  torsion_coords.insert(torsion_coords.end(), free_coords.begin(),
                        free_coords.end());
  return torsion_coords;
}

int_matrix mat_pow(const int_matrix& m, unsigned long n) {
  if (!m.square()) throw std::invalid_argument("mat_pow: non-square matrix");
  int_matrix result = int_matrix::identity(m.rows());
  int_matrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace cayley_k0::exact_linalg
