#include "cayley_k0/graph_model.hpp"

#include <algorithm>
#include <deque>

namespace cayley_k0::graph_model {

using exact_linalg::int_matrix;

namespace detail {

int_matrix cayley_adjacency(long n, long j) {
  const std::size_t nn = static_cast<std::size_t>(n);
  int_matrix a(nn, nn);
  for (std::size_t i = 0; i < nn; ++i) {
    a(i, (i + 1) % nn) += 1;
    a(i, (i + static_cast<std::size_t>(j)) % nn) += 1;
  }
  return a;
}

}  // namespace detail

directed_multigraph cayley_graph(long n, long j) {
  if (n < 3) throw std::invalid_argument("cayley_graph: n < 3");
  if (j < 0 || j > n - 1)
    throw std::invalid_argument("cayley_graph: j out of range [0, n-1]");
  return {static_cast<std::size_t>(n), detail::cayley_adjacency(n, j)};
}

directed_multigraph rose_graph(long m) {
  if (m < 1) throw std::invalid_argument("rose_graph: m < 1");
  int_matrix a(1, 1);
  a(0, 0) = m;
  return {1, a};
}

directed_multigraph realization_graph(long j, const std::vector<Int>& factors) {
  if (j < 2) throw std::invalid_argument("realization_graph: j < 2");
  if (factors.size() != static_cast<std::size_t>(j))
    throw std::invalid_argument("realization_graph: expected " +
                                std::to_string(j) + " factors, got " +
                                std::to_string(factors.size()));
  for (const Int& f : factors)
    if (f < 1)
      throw std::invalid_argument("realization_graph: factors must be >= 1");
  const std::size_t n = static_cast<std::size_t>(j) + 1;
  int_matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) a(i, k) = (i == k) ? 0 : 1;
  a(0, 0) = 2;
  for (std::size_t i = 1; i < n; ++i) a(i, i) = 2 + factors[i - 1];
  return {n, a};
}

int_matrix incidence_matrix(const directed_multigraph& g) {
  return g.adjacency;
}

namespace {

std::vector<std::vector<std::size_t>> successor_lists(
    const directed_multigraph& g) {
  std::vector<std::vector<std::size_t>> succ(g.n_vertices);
  for (std::size_t i = 0; i < g.n_vertices; ++i)
    for (std::size_t j = 0; j < g.n_vertices; ++j)
      if (g.adjacency(i, j) > 0) succ[i].push_back(j);
  return succ;
}

// Tarjan-free SCC via Kosaraju; graphs here are tiny.
std::vector<std::size_t> scc_ids(const directed_multigraph& g) {
  const std::size_t n = g.n_vertices;
  auto succ = successor_lists(g);
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : succ[i]) pred[j].push_back(i);

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // iterative post-order
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < succ[v].size()) {
        std::size_t w = succ[v][next++];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<std::size_t> id(n, n);
  std::size_t comp = 0;
  for (std::size_t k = n; k-- > 0;) {
    std::size_t s = order[k];
    if (id[s] != n) continue;
    std::deque<std::size_t> q{s};
    id[s] = comp;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      for (std::size_t w : pred[v])
        if (id[w] == n) {
          id[w] = comp;
          q.push_back(w);
        }
    }
    ++comp;
  }
  return id;
}

}  // namespace

bool is_purely_infinite_simple(const directed_multigraph& g) {
  const std::size_t n = g.n_vertices;
  if (n == 0) return false;
  auto succ = successor_lists(g);
  auto id = scc_ids(g);

  // A vertex lies on a cycle iff its SCC has an internal edge (covers both
  // self-loops and larger cycles).
  std::vector<bool> cyclic_scc(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : succ[i])
      if (id[i] == id[j]) cyclic_scc[id[i]] = true;
  bool has_cycle = std::any_of(cyclic_scc.begin(), cyclic_scc.end(),
                               [](bool b) { return b; });
  if (!has_cycle) return false;

  // A cycle with no exit is a cycle every vertex of which has out-degree
  // exactly 1; follow the unique-successor chains.
  std::vector<Int> outdeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) outdeg[i] += g.adjacency(i, j);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> on_path(n, false);
    std::size_t v = s;
    while (outdeg[v] == 1) {
      if (on_path[v]) return false;  // closed a cycle without any exit
      on_path[v] = true;
      v = succ[v][0];
    }
  }

  // Cofinality: every vertex must reach every cyclic SCC.
  for (std::size_t c = 0; c < n; ++c) {
    if (!cyclic_scc[c]) continue;
    std::vector<bool> reaches(n, false);
    std::deque<std::size_t> q;
    for (std::size_t v = 0; v < n; ++v)
      if (id[v] == c) {
        reaches[v] = true;
        q.push_back(v);
      }
    while (!q.empty()) {  // walk edges backwards
      std::size_t v = q.front();
      q.pop_front();
      for (std::size_t w = 0; w < n; ++w)
        if (!reaches[w] && g.adjacency(w, v) > 0) {
          reaches[w] = true;
          q.push_back(w);
        }
    }
    if (!std::all_of(reaches.begin(), reaches.end(), [](bool b) { return b; }))
      return false;
  }
  return true;
}

}  // namespace cayley_k0::graph_model
