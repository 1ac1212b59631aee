#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cayley_k0/graph_model.hpp"

namespace cayley_k0::graph_model {

namespace {

using vec = std::vector<std::uint32_t>;

struct vec_hash {
  std::size_t operator()(const vec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::uint64_t norm(const vec& v) {
  std::uint64_t s = 0;
  for (std::uint32_t x : v) s += x;
  return s;
}

// The rewriting engine: classifies vectors of N^n up to the symmetric
// closure of the relations e_i ~ row_i (for non-sink i).  A vector is
// canonicalized by descending to the lowest l1-norm level its class
// reaches, then taking the lexicographically least vector of the connected
// component inside the band [0, min_norm + slack].  The band keeps every
// search finite; confluence of the resulting normal forms is validated
// empirically by the caller through the addition table.
class rewriter {
 public:
  rewriter(const directed_multigraph& g, std::size_t cap)
      : n_(g.n_vertices), cap_(cap) {
    std::uint64_t max_row = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      vec row(n_);
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        unsigned long e = g.adjacency(i, j).get_ui();
        row[j] = static_cast<std::uint32_t>(e);
        sum += e;
      }
      if (sum > 0) {
        regular_.push_back(i);
        rows_.push_back(std::move(row));
        max_row = std::max(max_row, sum);
      } else {
        rows_.push_back(std::move(row));
      }
    }
    slack_ = max_row + 4;
  }

  std::size_t classify(const vec& x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return find(it->second);

    std::vector<vec> junk;
    vec m = x;
    std::vector<vec> component;
    for (;;) {
      component.clear();
      std::vector<std::size_t> hits;
      vec lower;
      bool have_lower = false;
      band_bfs(m, component, hits, lower, have_lower);
      junk.insert(junk.end(), component.begin(), component.end());
      if (!hits.empty()) {
        std::size_t cid = hits[0];
        for (std::size_t i = 1; i < hits.size(); ++i)
          cid = merge(cid, hits[i]);
        cid = find(cid);
        for (const vec& v : junk) memo_.emplace(v, cid);
        return cid;
      }
      if (!have_lower) break;
      m = lower;
    }

    const vec* best = &component.front();
    for (const vec& v : component)
      if (v < *best) best = &v;
    std::size_t cid = reps_.size();
    reps_.push_back(*best);
    uf_.push_back(cid);
    for (const vec& v : junk) memo_.emplace(v, cid);
    return cid;
  }

  const vec& rep(std::size_t cid) const { return reps_[cid]; }
  bool merged() const { return merged_; }
  std::size_t find(std::size_t c) {
    while (uf_[c] != c) {
      uf_[c] = uf_[uf_[c]];
      c = uf_[c];
    }
    return c;
  }

 private:
  std::size_t merge(std::size_t a, std::size_t b) {
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return ra;
    merged_ = true;
    if (reps_[rb] < reps_[ra]) std::swap(ra, rb);
    uf_[rb] = ra;
    return ra;
  }

  void count_state() {
    if (++states_ > cap_)
      throw budget_exceeded_error(
          "graph_monoid_enumerate: state budget exceeded (cap " +
          std::to_string(cap_) + "); the monoid is infinite or cap too small");
  }

  // BFS of the component of m within norm <= |m| + slack.  Vectors of
  // strictly lower norm are recorded (lex-least wins) but not expanded:
  // the search restarts anchored there, so the final pass explores the
  // full bottom-level component and nothing above the band.
  void band_bfs(const vec& m, std::vector<vec>& component,
                std::vector<std::size_t>& hits, vec& lower, bool& have_lower) {
    const std::uint64_t base = norm(m);
    const std::uint64_t bound = base + slack_;
    std::unordered_set<vec, vec_hash> seen;
    std::deque<vec> queue;
    seen.insert(m);
    queue.push_back(m);
    count_state();
    std::vector<std::size_t> hit_set;
    while (!queue.empty()) {
      vec v = std::move(queue.front());
      queue.pop_front();
      for (vec& y : neighbors(v)) {
        if (norm(y) > bound) continue;
        if (seen.contains(y)) continue;
        auto mit = memo_.find(y);
        if (mit != memo_.end()) {
          std::size_t root = find(mit->second);
          if (std::find(hit_set.begin(), hit_set.end(), root) == hit_set.end())
            hit_set.push_back(root);
          continue;
        }
        count_state();
        if (norm(y) < base) {
          if (!have_lower || y < lower) lower = y;
          have_lower = true;
          seen.insert(std::move(y));
          continue;
        }
        seen.insert(y);
        queue.push_back(std::move(y));
      }
    }
    component.assign(seen.begin(), seen.end());
    hits = std::move(hit_set);
  }

  std::vector<vec> neighbors(const vec& x) {
    std::vector<vec> out;
    for (std::size_t i : regular_) {
      const vec& row = rows_[i];
      if (x[i] >= 1) {  // forward: x - e_i + row_i
        vec y = x;
        y[i] -= 1;
        for (std::size_t t = 0; t < n_; ++t) y[t] += row[t];
        out.push_back(std::move(y));
      }
      bool ge = true;
      for (std::size_t t = 0; t < n_; ++t)
        if (x[t] < row[t]) {
          ge = false;
          break;
        }
      if (ge) {  // backward: x - row_i + e_i
        vec y = x;
        for (std::size_t t = 0; t < n_; ++t) y[t] -= row[t];
        y[i] += 1;
        out.push_back(std::move(y));
      }
    }
    return out;
  }

  std::size_t n_;
  std::size_t cap_;
  std::uint64_t slack_;
  std::size_t states_ = 0;
  std::vector<std::size_t> regular_;
  std::vector<vec> rows_;
  std::unordered_map<vec, std::size_t, vec_hash> memo_;
  std::vector<vec> reps_;
  std::vector<std::size_t> uf_;
  bool merged_ = false;
};

}  // namespace

graph_monoid graph_monoid_enumerate(const directed_multigraph& g,
                                    std::size_t cap) {
  if (g.n_vertices == 0)
    throw std::invalid_argument("graph_monoid_enumerate: empty graph");
  for (std::size_t i = 0; i < g.n_vertices; ++i)
    for (std::size_t j = 0; j < g.n_vertices; ++j)
      if (g.adjacency(i, j) < 0 || g.adjacency(i, j) > 1000000)
        throw std::invalid_argument(
            "graph_monoid_enumerate: adjacency entries must be small "
            "nonnegative integers");

  rewriter rw(g, cap);
  const std::size_t n = g.n_vertices;

  // Breadth-first closure of the class of 0 under adding generators.
  std::size_t zero_id = rw.classify(vec(n, 0));
  std::vector<std::size_t> order{zero_id};
  std::unordered_map<std::size_t, std::size_t> pos{{zero_id, 0}};
  std::vector<std::pair<std::size_t, std::size_t>> parent{{SIZE_MAX, SIZE_MAX}};
  std::vector<std::vector<std::size_t>> succ;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t ei = queue.front();
    queue.pop_front();
    if (succ.size() <= ei) succ.resize(ei + 1, std::vector<std::size_t>(n));
    vec r = rw.rep(rw.find(order[ei]));
    for (std::size_t gidx = 0; gidx < n; ++gidx) {
      vec v = r;
      v[gidx] += 1;
      std::size_t cid = rw.classify(v);
      auto it = pos.find(cid);
      if (it == pos.end()) {
        it = pos.emplace(cid, order.size()).first;
        order.push_back(cid);
        parent.push_back({ei, gidx});
        queue.push_back(it->second);
        if (order.size() > cap)
          throw budget_exceeded_error(
              "graph_monoid_enumerate: element budget exceeded (cap " +
              std::to_string(cap) + ")");
      }
      succ[ei][gidx] = it->second;
    }
  }
  if (rw.merged())
    throw std::runtime_error(
        "graph_monoid_enumerate: canonicalization merged classes; normal "
        "forms are not confluent on this graph");

  graph_monoid m;
  m.zero_index = 0;
  m.elements.reserve(order.size());
  for (std::size_t cid : order) m.elements.push_back(rw.rep(rw.find(cid)));
  m.generator_index.assign(succ[0].begin(), succ[0].end());

  // table[a][b] built by folding b's generator path onto a; commutativity
  // of the result below is the empirical confluence check (the two fold
  // orders traverse different rewrite paths).
  const std::size_t count = order.size();
  m.table.assign(count, std::vector<std::size_t>(count));
  for (std::size_t a = 0; a < count; ++a) m.table[a][0] = a;
  for (std::size_t b = 1; b < count; ++b) {
    auto [pb, gidx] = parent[b];
    for (std::size_t a = 0; a < count; ++a)
      m.table[a][b] = succ[m.table[a][pb]][gidx];
  }
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (m.table[a][b] != m.table[b][a])
        throw std::runtime_error(
            "graph_monoid_enumerate: addition table is not well-defined "
            "(confluence check failed)");
  return m;
}

std::size_t monoid_group_identity(const graph_monoid& m) {
  const std::size_t count = m.elements.size();
  const std::size_t zero = m.zero_index;
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < count; ++i)
    if (i != zero) nz.push_back(i);
  if (nz.empty()) return SIZE_MAX;

  for (std::size_t a : nz)  // closure: no nonzero pair may sum to zero
    for (std::size_t b : nz)
      if (m.table[a][b] == zero) return SIZE_MAX;

  std::size_t identity = SIZE_MAX;
  for (std::size_t e : nz) {
    bool ok = true;
    for (std::size_t x : nz)
      if (m.table[e][x] != x) {
        ok = false;
        break;
      }
    if (ok) {
      if (identity != SIZE_MAX) return SIZE_MAX;  // not unique
      identity = e;
    }
  }
  if (identity == SIZE_MAX) return SIZE_MAX;

  for (std::size_t x : nz) {
    bool has_inverse = false;
    for (std::size_t y : nz)
      if (m.table[x][y] == identity) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return SIZE_MAX;
  }

  for (std::size_t a = 0; a < count; ++a)  // associativity, table-wide
    for (std::size_t b = 0; b < count; ++b)
      for (std::size_t c = 0; c < count; ++c)
        if (m.table[m.table[a][b]][c] != m.table[a][m.table[b][c]])
          return SIZE_MAX;
  return identity;
}

}  // namespace cayley_k0::graph_model
