#include "cayley_k0/verify_suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cayley_k0/exact_linalg.hpp"
#include "cayley_k0/graph_model.hpp"
#include "cayley_k0/k_theory.hpp"
#include "cayley_k0/sequences.hpp"

namespace cayley_k0::verify {

namespace el = exact_linalg;
namespace gm = graph_model;
namespace kt = k_theory;
namespace sq = sequences;

namespace {

std::size_t thread_budget(std::size_t cells) {
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("CAYLEY_K0_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      workers = std::min<std::size_t>(workers, static_cast<std::size_t>(v));
  }
  return std::max<std::size_t>(1, std::min(workers, cells));
}

// A sweep is a flat list of (n, j) cells checked independently; failures
// land in a shared sorted-at-the-end list so the thread schedule never
// shows through.
class sweep {
 public:
  explicit sweep(std::string suite) : suite_(std::move(suite)) {}

  void add_cell(long n, long j) { cells_.emplace_back(n, j); }

  void run(const std::function<void(long, long)>& body) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < cells_.size();) {
        auto [n, j] = cells_[i];
        try {
          body(n, j);
        } catch (const std::exception& e) {
          fail(n, j, "exception", e.what());
        }
      }
    };
    std::size_t workers = thread_budget(cells_.size());
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
    cells_.clear();
  }

  void check(long n, long j, const char* name, bool ok,
             const std::string& detail = "") {
    ++checks_;
    if (!ok) fail(n, j, name, detail);
  }

  void fail(long n, long j, const std::string& name,
            const std::string& detail) {
    std::lock_guard<std::mutex> lock(mu_);
    failures_.push_back({suite_, n, j, name, detail});
  }

  void drain_into(sweep_result& out) {
    out.checks_run += checks_.load();
    out.failures.insert(out.failures.end(), failures_.begin(),
                        failures_.end());
  }

 private:
  std::string suite_;
  std::vector<std::pair<long, long>> cells_;
  std::mutex mu_;
  std::vector<check_failure> failures_;
  std::atomic<long> checks_{0};
};

el::int_matrix i_minus_at(const el::int_matrix& a) {
  return el::int_matrix::identity(a.rows()) - a.transpose();
}

std::string group_str(const el::fin_gen_abelian_group& g) {
  std::ostringstream out;
  out << "torsion[";
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (i) out << ',';
    out << g.torsion[i].get_str();
  }
  out << "] free " << g.free_rank;
  return out.str();
}

void reduction_sweep(sweep_result& out, long n_max, long j_max) {
  sweep s("reduction");
  for (long j = 2; j <= j_max; ++j)
    for (long n = j; n <= n_max; ++n) s.add_cell(n, j);
  s.run([&](long n, long j) {
    el::fin_gen_abelian_group full =
        el::cokernel(i_minus_at(gm::detail::cayley_adjacency(n, j % n)));
    el::int_matrix reduced =
        el::mat_pow(sq::companion_matrix(j), static_cast<unsigned long>(n)) -
        el::int_matrix::identity(static_cast<std::size_t>(j));
    el::fin_gen_abelian_group red = el::cokernel(reduced);
    s.check(n, j, "reduction_agrees", full == red,
            "full " + group_str(full) + " vs reduced " + group_str(red));
  });
  s.drain_into(out);
}

void zeros_sweep(sweep_result& out, long n_max) {
  sweep s("zeros");
  for (long n = 1; n <= n_max; ++n)
    for (long k = 0; k < n; ++k) s.add_cell(n, k);
  s.run([&](long n, long k) {
    Int det = el::determinant(i_minus_at(gm::detail::cayley_adjacency(n, k)));
    bool predicted = (k % 6 == 5) && (n % 6 == 0);
    s.check(n, k, "zero_locus", (det == 0) == predicted,
            "det " + det.get_str());
    s.check(n, k, "det_nonpositive", det <= 0, "det " + det.get_str());
  });
  s.drain_into(out);
}

void j2_sweep(sweep_result& out, long n_max) {
  sweep s("j2");
  for (long n = 3; n <= n_max; ++n) s.add_cell(n, 2);
  s.run([&](long n, long) {
    el::fin_gen_abelian_group closed = kt::k0_closed_form_j2(n).group;
    el::fin_gen_abelian_group full = kt::k0_full(n, 2).group;
    el::fin_gen_abelian_group red = kt::k0_reduced(n, 2).group;
    s.check(n, 2, "closed_equals_full", closed == full,
            group_str(closed) + " vs " + group_str(full));
    s.check(n, 2, "closed_equals_reduced", closed == red,
            group_str(closed) + " vs " + group_str(red));
    s.check(n, 2, "h2_closed_form",
            sq::h2_closed_form(n) == sq::haselgrove(2, n),
            sq::h2_closed_form(n).get_str());
  });
  s.drain_into(out);
}

void fibonacci_identity_sweep(sweep_result& out, long n_max) {
  sweep s("j2");
  for (long n = 1; n <= std::max(n_max, 300L); ++n) s.add_cell(n, -1);
  s.run([&](long n, long) {
    Int lhs = sq::fibonacci(n + 1) * sq::fibonacci(n - 1) -
              sq::fibonacci(n) * sq::fibonacci(n);
    Int rhs = (n % 2 == 0) ? 1 : -1;
    s.check(n, -1, "fibonacci_identity", lhs == rhs, lhs.get_str());
  });
  s.drain_into(out);
}

void j3_sweep(sweep_result& out, long n_max) {
  sweep s("j3");
  for (long n = 3; n <= n_max; ++n) s.add_cell(n, 3);
  s.run([&](long n, long) {
    el::fin_gen_abelian_group closed = kt::k0_closed_form_j3(n).group;
    el::fin_gen_abelian_group full = kt::k0_full(n, 3 % n).group;
    el::fin_gen_abelian_group red = kt::k0_reduced(n, 3).group;
    s.check(n, 3, "closed_equals_full", closed == full,
            group_str(closed) + " vs " + group_str(full));
    s.check(n, 3, "closed_equals_reduced", closed == red,
            group_str(closed) + " vs " + group_str(red));
    el::int_matrix x =
        (el::mat_pow(sq::companion_matrix(3), static_cast<unsigned long>(n)) -
         el::int_matrix::identity(3))
            .transpose();
    std::vector<Int> alpha = el::determinant_divisors(x);
    s.check(n, 3, "d3_is_alpha1", kt::d3(n) == alpha[1], alpha[1].get_str());
    s.check(n, 3, "dprime3_is_alpha2", kt::dprime3(n) == alpha[2],
            alpha[2].get_str());
  });
  s.drain_into(out);
}

void monoid_sweep(sweep_result& out, long n_max) {
  // Enumeration cost grows explosively with n; n <= 6 is the supported
  // exhaustive range (every finite case there fits in the 10^6 budget).
  sweep s("monoid");
  for (long n = 3; n <= std::min(n_max, 6L); ++n)
    for (long j = 0; j < n; ++j)
      if (!sq::haselgrove_is_zero(j, n)) s.add_cell(n, j);
  s.run([&](long n, long j) {
    gm::directed_multigraph g = gm::cayley_graph(n, j);
    gm::graph_monoid m = gm::graph_monoid_enumerate(g, 1000000);
    std::size_t identity = gm::monoid_group_identity(m);
    s.check(n, j, "nonzero_part_is_group", identity != SIZE_MAX);
    Int h = sq::haselgrove(j, n);
    el::fin_gen_abelian_group coker = el::cokernel(i_minus_at(g.adjacency));
    s.check(n, j, "group_order_is_cokernel_order",
            !coker.infinite() &&
                Int(static_cast<long>(m.elements.size()) - 1) == coker.order(),
            std::to_string(m.elements.size() - 1) + " vs " +
                (coker.infinite() ? std::string("infinite")
                                  : coker.order().get_str()));
    s.check(n, j, "group_order_is_haselgrove",
            Int(static_cast<long>(m.elements.size()) - 1) == h, h.get_str());
    if (identity != SIZE_MAX) {
      std::size_t ones = m.zero_index;
      for (std::size_t v = 0; v < g.n_vertices; ++v)
        ones = m.table[ones][m.generator_index[v]];
      s.check(n, j, "all_ones_is_identity", ones == identity);
    }
  });
  s.drain_into(out);
}

void realization_sweep(sweep_result& out, long n_max) {
  sweep s("realization");
  for (long n = 3; n <= n_max; ++n) s.add_cell(n, 3);
  s.run([&](long n, long) {
    gm::directed_multigraph en = kt::realization_graph_for(n);
    s.check(n, 3, "realization_is_pis", gm::is_purely_infinite_simple(en));
    el::fin_gen_abelian_group eg = el::cokernel(i_minus_at(en.adjacency));
    el::fin_gen_abelian_group cg = kt::k0_full(n, 3 % n).group;
    s.check(n, 3, "groups_match", eg == cg,
            group_str(eg) + " vs " + group_str(cg));
    Int det = el::determinant(i_minus_at(en.adjacency));
    s.check(n, 3, "determinant_is_minus_h3",
            det == -sq::haselgrove(3, n) && det < 0, "det " + det.get_str());
    s.check(n, 3, "all_ones_zero_both_sides",
            kt::identity_element_check(en) &&
                kt::identity_element_check(gm::cayley_graph(n, 3 % n)));
    s.check(n, 3, "kp_certificate_valid", kt::kp_certificate(n).valid());
  });
  s.drain_into(out);
}

}  // namespace

sweep_result run_suite(const std::string& suite, long n_max, long j_max) {
  if (n_max < 3) throw std::invalid_argument("run_suite: n_max < 3");
  if (j_max < 2) throw std::invalid_argument("run_suite: j_max < 2");
  sweep_result out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "reduction") reduction_sweep(out, n_max, j_max), known = true;
  if (all || suite == "zeros") zeros_sweep(out, n_max), known = true;
  if (all || suite == "j2") {
    j2_sweep(out, n_max);
    fibonacci_identity_sweep(out, n_max);
    known = true;
  }
  if (all || suite == "j3") j3_sweep(out, n_max), known = true;
  if (all || suite == "monoid") monoid_sweep(out, n_max), known = true;
  if (all || suite == "realization") realization_sweep(out, n_max), known = true;
  if (!known) throw std::invalid_argument("run_suite: unknown suite " + suite);

  std::sort(out.failures.begin(), out.failures.end(),
            [](const check_failure& a, const check_failure& b) {
              return std::tie(a.suite, a.n, a.j, a.check, a.detail) <
                     std::tie(b.suite, b.n, b.j, b.check, b.detail);
            });
  return out;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\', out += c;
    else if (c == '\n')
      out += "\\n";
    else if (static_cast<unsigned char>(c) < 0x20)
      out += ' ';
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string sweep_to_json(const sweep_result& r, const std::string& suite,
                          long n_max, long j_max) {
  std::ostringstream out;
  out << "{\"suite\":\"" << json_escape(suite) << "\",\"n_max\":" << n_max
      << ",\"j_max\":" << j_max << ",\"checks_run\":" << r.checks_run
      << ",\"failures\":[";
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const check_failure& f = r.failures[i];
    if (i) out << ',';
    out << "{\"suite\":\"" << json_escape(f.suite) << "\",\"n\":" << f.n
        << ",\"j\":" << f.j << ",\"check\":\"" << json_escape(f.check)
        << "\",\"detail\":\"" << json_escape(f.detail) << "\"}";
  }
  out << "],\"ok\":" << (r.ok() ? "true" : "false") << '}';
  return out.str();
}

}  // namespace cayley_k0::verify
