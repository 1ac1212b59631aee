#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayley_k0/exact_linalg.hpp"
#include "cayley_k0/graph_model.hpp"
#include "cayley_k0/k_theory.hpp"
#include "cayley_k0/sequences.hpp"
#include "cayley_k0/verify_suites.hpp"
#include "json.hpp"

namespace el = cayley_k0::exact_linalg;
namespace gm = cayley_k0::graph_model;
namespace kt = cayley_k0::k_theory;
namespace sq = cayley_k0::sequences;
namespace vf = cayley_k0::verify;
using cayley_k0::Int;

namespace {

// Exit codes: 0 success, 1 usage or parse error, 2 mathematical
// cross-check failure.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

class timer {
 public:
  timer() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Appends the timing field as the last key so that stripping it leaves a
// byte-deterministic record.
std::string with_timing(std::string json, long ms) {
  json.pop_back();
  return json + ",\"elapsed_ms\":" + std::to_string(ms) + "}";
}

std::string group_display(const el::fin_gen_abelian_group& g) {
  std::string s;
  for (const Int& t : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z_" + t.get_str();
  }
  if (g.free_rank == 1) s += (s.empty() ? "" : " + ") + std::string("Z");
  if (g.free_rank > 1)
    s += (s.empty() ? "" : " + ") + ("Z^" + std::to_string(g.free_rank));
  return s.empty() ? "0" : s;
}

std::string order_display(const el::fin_gen_abelian_group& g) {
  return g.infinite() ? "infinite" : g.order().get_str();
}

// ---- k0 ----

struct k0_options {
  long n = 0;
  long j = 0;
  bool have_n = false;
  bool have_j = false;
  std::string method = "full";
  std::string format = "json";
  std::string graph_file;
  bool force = false;
};

gm::directed_multigraph load_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open graph file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error("graph JSON parse failure: " + std::string(e.what()));
  }
  if (!doc.contains("n") || !doc.contains("adjacency"))
    throw usage_error("graph JSON needs keys \"n\" and \"adjacency\"");
  long n = doc["n"].get<long>();
  const auto& adj = doc["adjacency"];
  if (n < 1 || !adj.is_array() || static_cast<long>(adj.size()) != n)
    throw usage_error("graph JSON: adjacency must be an n x n array");
  el::int_matrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const auto& row = adj[i];
    if (!row.is_array() || static_cast<long>(row.size()) != n)
      throw usage_error("graph JSON: adjacency must be an n x n array");
    for (long k = 0; k < n; ++k) {
      if (!row[k].is_number_integer())
        throw usage_error("graph JSON: adjacency entries must be integers");
      long long e = row[k].get<long long>();
      if (e < 0)
        throw usage_error("graph JSON: adjacency entries must be >= 0");
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
          Int(static_cast<long>(e));
    }
  }
  return {static_cast<std::size_t>(n), std::move(a)};
}

void emit_k0_records(const std::vector<kt::k0_result>& records, long n, long j,
                     const std::vector<long>& times,
                     const std::string& format) {
  if (format == "json") {
    for (std::size_t i = 0; i < records.size(); ++i)
      std::cout << with_timing(kt::k0_to_json(n, j, records[i]), times[i])
                << "\n";
    return;
  }
  std::cout << "n=" << n << " j=" << j << "\n";
  for (const kt::k0_result& r : records)
    std::cout << "  " << kt::method_name(r.method) << ": "
              << group_display(r.group) << "  (order "
              << order_display(r.group) << ")\n";
}

int run_k0(const k0_options& opt) {
  if (!opt.graph_file.empty()) {
    if (opt.method != "full")
      throw usage_error("arbitrary graphs support only --method full");
    gm::directed_multigraph g = load_graph_json(opt.graph_file);
    if (g.n_vertices > 2000 && !opt.force)
      throw usage_error("graph has more than 2000 vertices; pass --force");
    timer t;
    el::smith_decomposition d = el::snf(
        el::int_matrix::identity(g.n_vertices) - g.adjacency.transpose());
    kt::k0_result r{el::make_group(d.factors), kt::k0_method::full,
                    std::move(d)};
    emit_k0_records({r}, static_cast<long>(g.n_vertices), -1, {t.ms()},
                    opt.format);
    return 0;
  }

  if (!opt.have_n || !opt.have_j)
    throw usage_error("k0 needs --n and --j (or --graph FILE)");
  long n = opt.n, j = opt.j;
  if (n < 3) throw usage_error("k0: n must be >= 3");
  if (j < 0) throw usage_error("k0: j must be >= 0");
  long j_graph = j % n;
  if (j >= n)
    std::cerr << "note: j = " << j << " reduced mod n to " << j_graph << "\n";

  bool want_full = opt.method == "full" || opt.method == "all";
  bool want_reduced = opt.method == "reduced" ||
                      (opt.method == "all" && j >= 2 && j <= n);
  bool want_closed =
      opt.method == "closed" || (opt.method == "all" && (j == 2 || j == 3));
  if (!want_full && !want_reduced && !want_closed)
    throw usage_error("k0: unknown method " + opt.method);
  if (want_full && n > 2000 && !opt.force)
    throw usage_error("k0: n > 2000 full-route SNF refused; pass --force");

  std::vector<kt::k0_result> records;
  std::vector<long> times;
  if (want_full) {
    timer t;
    records.push_back(kt::k0_full(n, j_graph));
    times.push_back(t.ms());
  }
  if (want_reduced) {
    if (j < 2 || j > n)
      throw usage_error("k0: reduced route needs 2 <= j <= n");
    timer t;
    records.push_back(kt::k0_reduced(n, j));
    times.push_back(t.ms());
  }
  if (want_closed) {
    if (j != 2 && j != 3)
      throw usage_error("k0: closed form exists only for j = 2 or j = 3");
    timer t;
    records.push_back(j == 2 ? kt::k0_closed_form_j2(n)
                             : kt::k0_closed_form_j3(n));
    times.push_back(t.ms());
  }

  emit_k0_records(records, n, j, times, opt.format);
  for (std::size_t i = 1; i < records.size(); ++i)
    if (!(records[i].group == records[0].group)) {
      std::cerr << "cross-check failure: methods disagree on K0\n";
      return 2;
    }
  return 0;
}

// ---- haselgrove / sequence ----

struct range_options {
  std::string name;
  long k = 0;
  long from = 1;
  long to = 1;
  std::string format = "json";
};

void emit_values(const std::string& head, const std::vector<Int>& values,
                 long from, const range_options& opt, long ms) {
  if (opt.format == "json") {
    std::ostringstream out;
    out << head << ",\"from\":" << opt.from << ",\"to\":" << opt.to
        << ",\"values\":[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out << ',';
      out << values[i].get_str();
    }
    out << "]}";
    std::cout << with_timing(out.str(), ms) << "\n";
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    std::cout << from + static_cast<long>(i) << "\t" << values[i].get_str()
              << "\n";
}

int run_haselgrove(const range_options& opt) {
  if (opt.k < 0) throw usage_error("haselgrove: k must be >= 0");
  if (opt.from < 1 || opt.from > opt.to)
    throw usage_error("haselgrove: need 1 <= from <= to");
  if (opt.k >= opt.from)
    std::cerr << "note: k >= n entries are reduced mod n\n";
  timer t;
  std::vector<Int> values;
  for (long n = opt.from; n <= opt.to; ++n)
    values.push_back(sq::haselgrove(opt.k, n));
  emit_values("{\"k\":" + std::to_string(opt.k), values, opt.from, opt,
              t.ms());
  return 0;
}

int run_sequence(const range_options& opt) {
  Int (*fn)(long) = nullptr;
  long lo = 0;
  if (opt.name == "narayana") {
    fn = sq::narayana;
    lo = -3;
  } else if (opt.name == "fibonacci") {
    fn = sq::fibonacci;
    lo = 0;
  } else if (opt.name == "d3") {
    fn = kt::d3;
    lo = 1;
  } else if (opt.name == "dprime3") {
    fn = kt::dprime3;
    lo = 1;
  } else {
    throw usage_error("sequence: unknown name " + opt.name);
  }
  if (opt.from < lo)
    throw usage_error("sequence: " + opt.name + " starts at index " +
                      std::to_string(lo));
  if (opt.from > opt.to) throw usage_error("sequence: need from <= to");
  timer t;
  std::vector<Int> values;
  for (long n = opt.from; n <= opt.to; ++n) values.push_back(fn(n));
  emit_values("{\"name\":\"" + opt.name + "\"", values, opt.from, opt,
              t.ms());
  return 0;
}

// ---- snf ----

struct snf_options {
  std::string input;
  bool transforms = false;
  bool divisors = false;
};

void emit_matrix(std::ostream& out, const el::int_matrix& m) {
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
}

int run_snf(const snf_options& opt) {
  std::ifstream in(opt.input);
  if (!in) throw usage_error("cannot open matrix file: " + opt.input);
  el::int_matrix m;
  try {
    m = el::int_matrix::parse(in);
  } catch (const std::exception& e) {
    throw usage_error("matrix parse failure: " + std::string(e.what()));
  }
  if (opt.divisors && std::max(m.rows(), m.cols()) > 8)
    throw usage_error("snf: --divisors supports matrices up to 8 x 8");

  timer t;
  el::smith_decomposition d = el::snf(m);
  std::ostringstream out;
  out << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols()
      << ",\"factors\":[";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (i) out << ',';
    out << d.factors[i].get_str();
  }
  out << ']';
  if (opt.transforms) {
    out << ",\"u\":";
    emit_matrix(out, d.u);
    out << ",\"v\":";
    emit_matrix(out, d.v);
  }
  if (opt.divisors) {
    std::vector<Int> alpha = el::determinant_divisors(m);
    out << ",\"divisors\":[";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (i) out << ',';
      out << alpha[i].get_str();
    }
    out << ']';
  }
  out << '}';
  std::cout << with_timing(out.str(), t.ms()) << "\n";
  return 0;
}

// ---- verify / realize ----

int run_verify(const std::string& suite, long n_max, long j_max) {
  timer t;
  vf::sweep_result r;
  try {
    r = vf::run_suite(suite, n_max, j_max);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  std::cout << with_timing(vf::sweep_to_json(r, suite, n_max, j_max), t.ms())
            << "\n";
  return r.ok() ? 0 : 2;
}

int run_realize(long n, long j) {
  if (j != 3) throw usage_error("realize: only j = 3 is supported");
  gm::directed_multigraph g;
  try {
    g = kt::realization_graph_for(n);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  std::ostringstream out;
  out << "{\"n\":" << g.n_vertices << ",\"adjacency\":";
  emit_matrix(out, g.adjacency);
  out << '}';
  std::cout << out.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact K0 of Leavitt path algebras of Cayley graphs C_n^j: full SNF "
      "route, companion-matrix reduction, and closed forms"};
  app.require_subcommand(1);

  k0_options k0_opt;
  CLI::App* k0_cmd = app.add_subcommand(
      "k0", "compute K0 for C_n^j or for a graph JSON file");
  CLI::Option* n_opt = k0_cmd->add_option("--n", k0_opt.n, "cycle length n");
  CLI::Option* j_opt =
      k0_cmd->add_option("--j", k0_opt.j, "second generator j (j >= n wraps)");
  k0_cmd->add_option("--method", k0_opt.method,
                     "full | reduced | closed | all")
      ->check(CLI::IsMember({"full", "reduced", "closed", "all"}));
  k0_cmd->add_option("--format", k0_opt.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  k0_cmd->add_option("--graph", k0_opt.graph_file,
                     "graph JSON file (full route on an arbitrary graph)");
  k0_cmd->add_flag("--force", k0_opt.force, "lift the n > 2000 guardrail");

  range_options h_opt;
  CLI::App* h_cmd =
      app.add_subcommand("haselgrove", "H_k(n) over an inclusive range of n");
  h_cmd->add_option("--k", h_opt.k, "sequence index k")->required();
  h_cmd->add_option("--from", h_opt.from, "first n (default 1)");
  h_cmd->add_option("--to", h_opt.to, "last n")->required();
  h_cmd->add_option("--format", h_opt.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  range_options s_opt;
  CLI::App* s_cmd =
      app.add_subcommand("sequence", "integer sequence over a range");
  s_cmd->add_option("--name", s_opt.name,
                    "narayana | fibonacci | d3 | dprime3")
      ->required();
  s_cmd->add_option("--from", s_opt.from, "first index")->required();
  s_cmd->add_option("--to", s_opt.to, "last index")->required();
  s_cmd->add_option("--format", s_opt.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  snf_options snf_opt;
  CLI::App* snf_cmd =
      app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf_cmd->add_option("--input", snf_opt.input, "matrix text file")
      ->required();
  snf_cmd->add_flag("--transforms", snf_opt.transforms,
                    "include the unimodular U and V");
  snf_cmd->add_flag("--divisors", snf_opt.divisors,
                    "include determinant divisors (dims <= 8)");

  std::string suite;
  long n_max = 60, j_max = 6;
  CLI::App* v_cmd = app.add_subcommand("verify", "run a verification sweep");
  v_cmd->add_option("--suite", suite,
                    "reduction | zeros | j2 | j3 | monoid | realization | all")
      ->required();
  v_cmd->add_option("--n-max", n_max, "sweep bound on n (default 60)");
  v_cmd->add_option("--j-max", j_max, "sweep bound on j (default 6)");

  long r_n = 0, r_j = 3;
  CLI::App* r_cmd = app.add_subcommand(
      "realize", "emit the 4-vertex realization graph for C_n^3");
  r_cmd->add_option("--n", r_n, "cycle length n")->required();
  r_cmd->add_option("--j", r_j, "must be 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  k0_opt.have_n = n_opt->count() > 0;
  k0_opt.have_j = j_opt->count() > 0;

  try {
    if (k0_cmd->parsed()) return run_k0(k0_opt);
    if (h_cmd->parsed()) return run_haselgrove(h_opt);
    if (s_cmd->parsed()) return run_sequence(s_opt);
    if (snf_cmd->parsed()) return run_snf(snf_opt);
    if (v_cmd->parsed()) return run_verify(suite, n_max, j_max);
    if (r_cmd->parsed()) return run_realize(r_n, r_j);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cayley_k0::inexact_division_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
