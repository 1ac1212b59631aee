#include <cmath>
#include <vector>

#include "cayley_k0/exact_linalg.hpp"
#include "cayley_k0/graph_model.hpp"
#include "cayley_k0/sequences.hpp"
#include "doctest.h"

using namespace cayley_k0;
using exact_linalg::int_matrix;
using exact_linalg::mat_pow;
using namespace sequences;

TEST_CASE("narayana values") {
  const long expected[] = {1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129};
  for (long n = 1; n <= 15; ++n) CHECK(narayana(n) == expected[n - 1]);
  CHECK(narayana(0) == 0);
  CHECK(narayana(-1) == 0);
  CHECK(narayana(-2) == 1);
  CHECK(narayana(-3) == 0);
  CHECK_THROWS_AS(narayana(-4), std::invalid_argument);
  for (long n = 1; n <= 300; ++n)
    CHECK(narayana(n) == narayana(n - 1) + narayana(n - 3));
}

TEST_CASE("fibonacci values") {
  const long expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (long n = 0; n <= 10; ++n) CHECK(fibonacci(n) == expected[n]);
  CHECK(fibonacci(7 + 1) * fibonacci(7 - 1) - fibonacci(7) * fibonacci(7) ==
        -1);
  CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);
}

TEST_CASE("companion matrices") {
  CHECK(companion_matrix(2) == int_matrix{{0, 1}, {1, 1}});
  CHECK(companion_matrix(3) == int_matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 1}});
  CHECK_THROWS_AS(companion_matrix(1), std::invalid_argument);

  // M_j satisfies its characteristic polynomial x^j - x^{j-1} - 1
  for (long j = 2; j <= 6; ++j) {
    int_matrix m = companion_matrix(j);
    std::size_t d = static_cast<std::size_t>(j);
    CHECK(mat_pow(m, static_cast<unsigned long>(j)) ==
          mat_pow(m, static_cast<unsigned long>(j - 1)) +
              int_matrix::identity(d));
  }
}

TEST_CASE("companion matrix characteristic polynomial coefficients") {
  // det(xI - M_j) expanded at j+1 sample points pins a degree-j monic
  // polynomial; p_j(x) = x^j - x^{j-1} - 1 must interpolate them all.
  for (long j = 2; j <= 6; ++j) {
    int_matrix m = companion_matrix(j);
    std::size_t d = static_cast<std::size_t>(j);
    for (long x = -3; x <= 3; ++x) {
      int_matrix xi(d, d);
      for (std::size_t i = 0; i < d; ++i) xi(i, i) = x;
      Int p = 1;  // x^j - x^{j-1} - 1 at x
      for (long t = 0; t < j; ++t) p *= x;
      Int q = 1;
      for (long t = 0; t < j - 1; ++t) q *= x;
      CHECK(exact_linalg::determinant(xi - m) == p - q - 1);
    }
  }
}

TEST_CASE("m3 power closed form") {
  CHECK(m3_power_closed_form(1) == companion_matrix(3));
  CHECK(m3_power_closed_form(5) == int_matrix{{1, 2, 3}, {1, 1, 2}, {2, 3, 4}});
  CHECK(m3_power_closed_form(6) == int_matrix{{2, 3, 4}, {1, 2, 3}, {3, 4, 6}});
  CHECK_THROWS_AS(m3_power_closed_form(0), std::invalid_argument);

  int_matrix m3 = companion_matrix(3);
  for (long n = 1; n <= 200; ++n)
    CHECK(m3_power_closed_form(n) ==
          mat_pow(m3, static_cast<unsigned long>(n)));
}

TEST_CASE("haselgrove values") {
  const long expected[] = {1, 3,  1,  3,  11, 9,   8,  27,
                           37, 33, 67, 117, 131, 192, 341};
  for (long n = 1; n <= 15; ++n) CHECK(haselgrove(3, n) == expected[n - 1]);
  CHECK(haselgrove(5, 6) == 0);
  CHECK(haselgrove(2, 3) == 4);
  CHECK_THROWS_AS(haselgrove(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(haselgrove(-1, 5), std::invalid_argument);
}

TEST_CASE("haselgrove accepts k >= n by wrapping") {
  CHECK(haselgrove(3, 3) == haselgrove(0, 3));
  CHECK(haselgrove(7, 5) == haselgrove(2, 5));
}

TEST_CASE("haselgrove float route") {
  CHECK(haselgrove_float(3, 5) == doctest::Approx(11).epsilon(1e-6));
  CHECK(std::abs(haselgrove_float(5, 6)) < 1e-9);
  CHECK(haselgrove_float(0, 1) == doctest::Approx(1).epsilon(1e-9));
  for (long n = 1; n <= 30; ++n)
    for (long k = 0; k < n; ++k) {
      double exact = haselgrove(k, n).get_d();
      double approx = haselgrove_float(k, n);
      if (exact == 0)
        CHECK(std::abs(approx) < 1e-6);
      else
        CHECK(std::abs(approx - exact) / exact < 1e-6);
    }
}

TEST_CASE("haselgrove zero locus") {
  CHECK(haselgrove_is_zero(5, 6));
  CHECK_FALSE(haselgrove_is_zero(3, 6));
  CHECK(haselgrove_is_zero(11, 12));
  for (long n = 1; n <= 48; ++n)
    for (long k = 0; k < n; ++k)
      CHECK(haselgrove_is_zero(k, n) == (haselgrove(k, n) == 0));
}

TEST_CASE("determinant of I - A^t is never positive") {
  for (long n = 1; n <= 30; ++n)
    for (long k = 0; k < n; ++k) {
      int_matrix a = graph_model::detail::cayley_adjacency(n, k);
      CHECK(exact_linalg::determinant(int_matrix::identity(a.rows()) -
                                      a.transpose()) <= 0);
    }
}

TEST_CASE("h2 closed form") {
  CHECK(h2_closed_form(3) == 4);
  CHECK(h2_closed_form(1) == 1);
  for (long n = 1; n <= 60; ++n) CHECK(h2_closed_form(n) == haselgrove(2, n));
}

TEST_CASE("h3 is a divisibility sequence") {
  for (long n = 1; n <= 45; ++n)
    for (long m = 1; m <= n; ++m)
      if (n % m == 0) CHECK(haselgrove(3, n) % haselgrove(3, m) == 0);
}
