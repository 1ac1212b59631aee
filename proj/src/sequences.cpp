#include "cayley_k0/sequences.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "cayley_k0/exact_linalg.hpp"
#include "cayley_k0/graph_model.hpp"

namespace cayley_k0::sequences {

using exact_linalg::int_matrix;

namespace {

// Shared memo tables; sweeps hit these from several threads.
std::mutex g_mutex;
std::vector<Int> g_cache = {0, 1, 0, 0, 1, 1, 1};  // G(-3) .. G(3)

std::mutex f_mutex;
std::vector<Int> f_cache = {0, 1, 1};  // F(0) .. F(2)

std::mutex h_mutex;
std::map<std::pair<long, long>, Int> h_cache;

}  // namespace

Int narayana(long n) {
  if (n < -3) throw std::invalid_argument("narayana: n < -3");
  std::lock_guard<std::mutex> lock(g_mutex);
  const std::size_t idx = static_cast<std::size_t>(n + 3);
  while (g_cache.size() <= idx) {
    std::size_t m = g_cache.size();
    g_cache.push_back(g_cache[m - 1] + g_cache[m - 3]);
  }
  return g_cache[idx];
}

Int fibonacci(long n) {
  if (n < 0) throw std::invalid_argument("fibonacci: negative index");
  std::lock_guard<std::mutex> lock(f_mutex);
  const std::size_t idx = static_cast<std::size_t>(n);
  while (f_cache.size() <= idx) {
    std::size_t m = f_cache.size();
    f_cache.push_back(f_cache[m - 1] + f_cache[m - 2]);
  }
  return f_cache[idx];
}

int_matrix companion_matrix(long j) {
  if (j < 2) throw std::invalid_argument("companion_matrix: j < 2");
  const std::size_t d = static_cast<std::size_t>(j);
  int_matrix m(d, d);
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1;
  m(0, d - 1) = 1;
  m(d - 1, d - 1) = 1;
  return m;
}

int_matrix m3_power_closed_form(long n) {
  if (n < 1) throw std::invalid_argument("m3_power_closed_form: n < 1");
  int_matrix m(3, 3);
  m(0, 0) = narayana(n - 2);
  m(0, 1) = narayana(n - 1);
  m(0, 2) = narayana(n);
  m(1, 0) = narayana(n - 3);
  m(1, 1) = narayana(n - 2);
  m(1, 2) = narayana(n - 1);
  m(2, 0) = narayana(n - 1);
  m(2, 1) = narayana(n);
  m(2, 2) = narayana(n + 1);
  return m;
}

Int haselgrove(long k, long n) {
  if (n < 1) throw std::invalid_argument("haselgrove: n < 1");
  if (k < 0) throw std::invalid_argument("haselgrove: k < 0");
  const long kr = k % n;  // C_n^k is only defined for 0 <= k <= n-1
  {
    std::lock_guard<std::mutex> lock(h_mutex);
    auto it = h_cache.find({kr, n});
    if (it != h_cache.end()) return it->second;
  }
  int_matrix a = graph_model::detail::cayley_adjacency(n, kr);
  int_matrix m = int_matrix::identity(a.rows()) - a.transpose();
  Int h = abs(exact_linalg::determinant(m));
  std::lock_guard<std::mutex> lock(h_mutex);
  h_cache.emplace(std::make_pair(kr, n), h);
  return h;
}

double haselgrove_float(long k, long n) {
  if (n < 1) throw std::invalid_argument("haselgrove_float: n < 1");
  if (k < 0) throw std::invalid_argument("haselgrove_float: k < 0");
  const double tau = 6.283185307179586476925286766559;
  std::complex<double> prod(1.0, 0.0);
  for (long l = 0; l < n; ++l) {
    std::complex<double> w = std::polar(1.0, tau * double(l) / double(n));
    std::complex<double> wk =
        std::polar(1.0, tau * double(l) * double(k % n) / double(n));
    prod *= (1.0 - w - wk);
  }
  return std::abs(prod);
}

bool haselgrove_is_zero(long k, long n) {
  if (n < 1) throw std::invalid_argument("haselgrove_is_zero: n < 1");
  if (k < 0) throw std::invalid_argument("haselgrove_is_zero: k < 0");
  return (k % 6 == 5) && (n % 6 == 0);
}

Int h2_closed_form(long n) {
  if (n < 1) throw std::invalid_argument("h2_closed_form: n < 1");
  Int sign = (n % 2 == 0) ? 1 : -1;
  return fibonacci(n + 1) + fibonacci(n - 1) - 1 - sign;
}

}  // namespace cayley_k0::sequences
