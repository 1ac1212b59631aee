#include <algorithm>
#include <set>
#include <vector>

#include "cayley_k0/exact_linalg.hpp"
#include "cayley_k0/graph_model.hpp"
#include "cayley_k0/sequences.hpp"
#include "doctest.h"

using namespace cayley_k0;
using exact_linalg::int_matrix;
using namespace graph_model;

namespace {

std::vector<std::uint32_t> u32(std::initializer_list<std::uint32_t> xs) {
  return {xs};
}

std::size_t all_ones_class(const graph_monoid& m, std::size_t n) {
  std::size_t idx = m.zero_index;
  for (std::size_t v = 0; v < n; ++v) idx = m.table[idx][m.generator_index[v]];
  return idx;
}

}  // namespace

TEST_CASE("cayley graph construction") {
  directed_multigraph c40 = cayley_graph(4, 0);
  CHECK(c40.n_vertices == 4);
  CHECK(c40.adjacency(0, 0) == 1);
  CHECK(c40.adjacency(0, 1) == 1);
  CHECK(c40.adjacency(0, 2) == 0);
  CHECK(c40.adjacency(0, 3) == 0);

  directed_multigraph c42 = cayley_graph(4, 2);
  CHECK(c42.adjacency(0, 0) == 0);
  CHECK(c42.adjacency(0, 1) == 1);
  CHECK(c42.adjacency(0, 2) == 1);
  CHECK(c42.adjacency(0, 3) == 0);

  directed_multigraph c31 = cayley_graph(3, 1);
  CHECK(c31.adjacency(0, 0) == 0);
  CHECK(c31.adjacency(0, 1) == 2);
  CHECK(c31.adjacency(0, 2) == 0);

  CHECK_THROWS_AS(cayley_graph(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(4, -1), std::invalid_argument);
}

TEST_CASE("every cayley vertex emits exactly two edges") {
  for (long n = 3; n <= 12; ++n)
    for (long j = 0; j < n; ++j) {
      directed_multigraph g = cayley_graph(n, j);
      for (std::size_t i = 0; i < g.n_vertices; ++i) {
        Int sum = 0;
        for (std::size_t t = 0; t < g.n_vertices; ++t)
          sum += g.adjacency(i, t);
        CHECK(sum == 2);
      }
    }
}

TEST_CASE("rose graph") {
  CHECK(rose_graph(1).adjacency == int_matrix{{1}});
  CHECK(rose_graph(5).adjacency == int_matrix{{5}});
  CHECK_THROWS_AS(rose_graph(0), std::invalid_argument);

  // K0 of the rose with 5 petals is Z_4
  exact_linalg::fin_gen_abelian_group g = exact_linalg::cokernel(
      int_matrix::identity(1) - rose_graph(5).adjacency.transpose());
  CHECK(g.torsion == std::vector<Int>{4});
  CHECK(g.free_rank == 0);
}

TEST_CASE("realization graph") {
  CHECK(realization_graph(3, {Int(1), Int(1), Int(3)}).adjacency ==
        int_matrix{{2, 1, 1, 1}, {1, 3, 1, 1}, {1, 1, 3, 1}, {1, 1, 1, 5}});
  CHECK(realization_graph(3, {Int(1), Int(1), Int(1)}).adjacency ==
        int_matrix{{2, 1, 1, 1}, {1, 3, 1, 1}, {1, 1, 3, 1}, {1, 1, 1, 3}});

  directed_multigraph e = realization_graph(3, {Int(2), Int(2), Int(2)});
  exact_linalg::fin_gen_abelian_group g = exact_linalg::cokernel(
      int_matrix::identity(4) - e.adjacency.transpose());
  CHECK(g.torsion == std::vector<Int>({Int(2), Int(2), Int(2)}));

  CHECK_THROWS_AS(realization_graph(3, {Int(1), Int(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(realization_graph(1, {Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(realization_graph(2, {Int(0), Int(1)}),
                  std::invalid_argument);
}

TEST_CASE("incidence matrix") {
  CHECK(incidence_matrix(rose_graph(5)) == int_matrix{{5}});

  directed_multigraph c53 = cayley_graph(5, 3);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t t = 0; t < 5; ++t) {
      bool edge = t == (i + 1) % 5 || t == (i + 3) % 5;
      CHECK(incidence_matrix(c53)(i, t) == (edge ? 1 : 0));
    }
}

TEST_CASE("purely infinite simple criterion") {
  CHECK(is_purely_infinite_simple(cayley_graph(3, 2)));
  CHECK_FALSE(is_purely_infinite_simple(
      directed_multigraph{1, int_matrix{{0}}}));  // no cycle
  CHECK_FALSE(is_purely_infinite_simple(rose_graph(1)));  // cycle, no exit

  // cycle with an exit into a sink is not cofinal
  directed_multigraph leaky{2, int_matrix{{2, 1}, {0, 0}}};
  CHECK_FALSE(is_purely_infinite_simple(leaky));

  // two disjoint roses cannot reach each other's cycles
  directed_multigraph split{2, int_matrix{{2, 0}, {0, 2}}};
  CHECK_FALSE(is_purely_infinite_simple(split));
}

TEST_CASE("all cayley graphs are purely infinite simple") {
  for (long n = 3; n <= 40; ++n)
    for (long j = 0; j < n; ++j)
      CHECK(is_purely_infinite_simple(cayley_graph(n, j)));
}

TEST_CASE("realization graphs are purely infinite simple") {
  CHECK(is_purely_infinite_simple(realization_graph(3, {Int(1), Int(1), Int(3)})));
  CHECK(is_purely_infinite_simple(realization_graph(2, {Int(5), Int(10)})));
}

TEST_CASE("monoid of the 5-element example") {
  graph_monoid m = graph_monoid_enumerate(cayley_graph(3, 2));
  CHECK(m.elements.size() == 5);
  CHECK(m.zero_index == 0);
  CHECK(m.elements[0] == u32({0, 0, 0}));

  std::set<std::vector<std::uint32_t>> got(m.elements.begin(),
                                           m.elements.end());
  std::set<std::vector<std::uint32_t>> want = {u32({0, 0, 0}), u32({0, 0, 1}),
                                               u32({0, 1, 0}), u32({0, 1, 1}),
                                               u32({0, 0, 2})};
  CHECK(got == want);

  std::size_t e = monoid_group_identity(m);
  REQUIRE(e != SIZE_MAX);
  CHECK(m.elements.size() - 1 == 4);  // group order = H_2(3)
  CHECK(sequences::haselgrove(2, 3) == 4);
  CHECK(all_ones_class(m, 3) == e);

  // zero really is the monoid zero
  for (std::size_t a = 0; a < m.elements.size(); ++a) {
    CHECK(m.table[m.zero_index][a] == a);
    CHECK(m.table[a][m.zero_index] == a);
  }
}

TEST_CASE("monoid with trivial group part") {
  graph_monoid m = graph_monoid_enumerate(cayley_graph(3, 0));
  std::size_t e = monoid_group_identity(m);
  REQUIRE(e != SIZE_MAX);
  CHECK(m.elements.size() == 2);  // zero + the single group element
  CHECK(all_ones_class(m, 3) == e);
}

TEST_CASE("monoid of the rose") {
  graph_monoid m = graph_monoid_enumerate(rose_graph(5));
  CHECK(m.elements.size() == 5);
  std::size_t e = monoid_group_identity(m);
  REQUIRE(e != SIZE_MAX);
  CHECK(m.elements.size() - 1 == 4);
  // all-ones is v_0, which is not the identity of Z_4 here
  CHECK(all_ones_class(m, 1) != e);
}

TEST_CASE("monoid enumeration respects its budget") {
  CHECK_THROWS_AS(graph_monoid_enumerate(rose_graph(1), 500),
                  budget_exceeded_error);
  CHECK_THROWS_AS(
      graph_monoid_enumerate(directed_multigraph{1, int_matrix{{0}}}, 500),
      budget_exceeded_error);
  // H_5(6) = 0, so this monoid is infinite
  CHECK_THROWS_AS(graph_monoid_enumerate(cayley_graph(6, 5), 2000),
                  budget_exceeded_error);
}

TEST_CASE("monoid enumeration rejects bad adjacency entries") {
  CHECK_THROWS_AS(
      graph_monoid_enumerate(directed_multigraph{1, int_matrix{{-1}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      graph_monoid_enumerate(directed_multigraph{1, int_matrix{{2000000}}}),
      std::invalid_argument);
}

TEST_CASE("monoid group order equals cokernel order") {
  for (long n = 3; n <= 5; ++n)
    for (long j = 0; j < n; ++j) {
      directed_multigraph g = cayley_graph(n, j);
      graph_monoid m = graph_monoid_enumerate(g, 1000000);
      std::size_t e = monoid_group_identity(m);
      REQUIRE(e != SIZE_MAX);
      exact_linalg::fin_gen_abelian_group coker = exact_linalg::cokernel(
          int_matrix::identity(g.n_vertices) - g.adjacency.transpose());
      CHECK(Int(static_cast<long>(m.elements.size()) - 1) == coker.order());
      CHECK(all_ones_class(m, g.n_vertices) == e);
    }
}

TEST_CASE("monoid addition is commutative and associative on samples") {
  graph_monoid m = graph_monoid_enumerate(cayley_graph(4, 2));
  const std::size_t k = m.elements.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      CHECK(m.table[a][b] == m.table[b][a]);
      for (std::size_t c = 0; c < k; ++c)
        CHECK(m.table[m.table[a][b]][c] == m.table[a][m.table[b][c]]);
    }
}

TEST_CASE("internal cayley adjacency covers n below 3") {
  int_matrix a1 = detail::cayley_adjacency(1, 0);
  CHECK(a1 == int_matrix{{2}});
  int_matrix a2 = detail::cayley_adjacency(2, 0);
  CHECK(a2(0, 0) == 1);
  CHECK(a2(0, 1) == 1);
}
