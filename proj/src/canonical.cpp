#include "beilab/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

// Branch-and-bound over prefixes of the vertex order. Column j depends only on the
// first j+1 positions, so a prefix whose columns already exceed the incumbent is cut.
// Swapping two twins is an automorphism, so only one member of a twin pair is tried
// at each position.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && (g.neighbors(u) - VertexSet{v}) == (g.neighbors(v) - VertexSet{u}))
          twins_[u].insert(v);
    order_.resize(n_);
    cur_.resize(n_);
  }

  CanonicalLabeling run() {
    search(0, g_.vertices());
    CanonicalLabeling out{Graph(n_), std::vector<int>(n_)};
    for (int p = 0; p < n_; ++p) out.perm[best_order_[p]] = p;
    out.graph = relabel(g_, out.perm);
    return out;
  }

 private:
  void search(int depth, VertexSet unused) {
    if (depth == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    VertexSet tried;
    for (int v : unused) {
      if (!(twins_[v] & tried).empty()) continue;
      tried.insert(v);
      order_[depth] = v;
      std::uint32_t col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
      cur_[depth] = col;
      if (have_best_ && prefix_exceeds_best(depth)) continue;
      search(depth + 1, unused - VertexSet{v});
    }
  }

  bool prefix_exceeds_best(int depth) const {
    for (int i = 0; i <= depth; ++i) {
      if (cur_[i] < best_[i]) return false;
      if (cur_[i] > best_[i]) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, kMaxVertices> twins_{};
  std::vector<int> order_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint32_t> best_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

const std::vector<Graph>& connected_level(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> levels;
  std::lock_guard lock(mu);
  if (auto it = levels.find(n); it != levels.end()) return it->second;

  if (levels.empty()) levels.emplace(1, std::vector<Graph>{Graph(1)});
  for (int k = levels.rbegin()->first + 1; k <= n; ++k) {
    // Every connected graph has a vertex whose removal leaves it connected, so extending
    // each connected graph on k-1 vertices by a vertex with a nonempty neighborhood is complete.
    std::unordered_set<Graph, GraphHash> seen;
    for (const Graph& small : levels.at(k - 1)) {
      const VertexMask full = (VertexMask{1} << (k - 1)) - 1;
      for (VertexMask nb = 1; nb <= full; ++nb) {
        Graph big(k);
        for (auto [a, b] : small.edges()) big.add_edge(a, b);
        for (int a : VertexSet(nb)) big.add_edge(a, k - 1);
        seen.insert(canonical_form(big));
      }
    }
    std::vector<Graph> level(seen.begin(), seen.end());
    std::sort(level.begin(), level.end(), triangle_less);
    levels.emplace(k, std::move(level));
  }
  return levels.at(n);
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {g, {}};
  return CanonicalSearch(g).run();
}

std::vector<std::uint32_t> triangle_columns(const Graph& g) {
  std::vector<std::uint32_t> cols(g.order(), 0);
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) cols[j] = (cols[j] << 1) | (g.adjacent(i, j) ? 1U : 0U);
  return cols;
}

bool triangle_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return triangle_columns(a) < triangle_columns(b);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw SizeError("enumeration order must be in 1.." + std::to_string(kMaxEnumerationOrder) + ", got " +
                    std::to_string(n));
  return connected_level(n);
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  for (const Graph& g : enumerate_connected_graphs(n)) visit(g);
}

}  // namespace beilab
