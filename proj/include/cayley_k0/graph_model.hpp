#pragma once

#include <cstdint>
#include <vector>

#include "cayley_k0/int_matrix.hpp"

namespace cayley_k0::graph_model {

// Finite directed multigraph: adjacency(i, j) = number of edges i -> j.
struct directed_multigraph {
  std::size_t n_vertices = 0;
  exact_linalg::int_matrix adjacency;
};

// Cayley graph C_n^j of Z_n with respect to {1, j}: vertex i emits one
// edge to i+1 and one to i+j (mod n); the two collapse to a double edge
// when j = 1.
directed_multigraph cayley_graph(long n, long j);

// Rose with m petals: a single vertex carrying m loops.
directed_multigraph rose_graph(long m);

// The (j+1)-vertex realization graph: one edge between every ordered pair
// of distinct vertices, 2 loops at vertex 1, and 2 + factors[i] loops at
// vertex i+1.
directed_multigraph realization_graph(long j, const std::vector<Int>& factors);

exact_linalg::int_matrix incidence_matrix(const directed_multigraph& g);

// Standard finite-graph criterion: the graph has a cycle, every cycle has
// an exit, and every vertex connects to every cycle.
bool is_purely_infinite_simple(const directed_multigraph& g);

// Exhaustive enumeration of the graph monoid (free commutative monoid on
// the vertices modulo v = sum of out-edge targets).  Elements are stored
// as canonical vectors (the lexicographically least vector the budgeted
// rewriting search reaches); the addition table is checked to be
// well-defined as an empirical confluence test.
struct graph_monoid {
  std::vector<std::vector<std::uint32_t>> elements;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of a+b
  std::size_t zero_index = 0;
  std::vector<std::size_t> generator_index;  // class of each unit vector
};

// Aborts with budget_exceeded_error once more than cap rewrite states have
// been explored (in particular on every infinite monoid).
graph_monoid graph_monoid_enumerate(const directed_multigraph& g,
                                    std::size_t cap = 10000);

// Index of the identity of the nonzero part when it forms a group under
// the induced addition (closure, associativity, identity, inverses all
// verified from the table); SIZE_MAX when it is not a group.
std::size_t monoid_group_identity(const graph_monoid& m);

namespace detail {
// Adjacency of C_n^j for any n >= 1 (the public constructor restricts to
// n >= 3, but Haselgrove values H_k(1), H_k(2) still need the matrix).
exact_linalg::int_matrix cayley_adjacency(long n, long j);
}  // namespace detail

}  // namespace cayley_k0::graph_model
