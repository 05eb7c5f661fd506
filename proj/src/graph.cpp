#include "beilab/graph.hpp"

#include <string>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for a graph on " +
                            std::to_string(g.order()) + " vertices");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw SizeError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("loops are not allowed");
  adj_[u] |= VertexMask{1} << v;
  adj_[v] |= VertexMask{1} << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(VertexMask{1} << v);
  adj_[v] &= ~(VertexMask{1} << u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j : VertexSet(adj_[i] & ~((VertexMask{2} << i) - 1))) out.emplace_back(i, j);
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s)
    if (!(s - VertexSet{v}).is_subset_of(neighbors(v))) return false;
  return true;
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.order()) * 0x9e3779b97f4a7c15ULL;
  for (int v = 0; v < g.order(); ++v)
    h = (h ^ g.neighbors(v).bits()) * 0x100000001b3ULL + (h >> 29);
  return h;
}

EdgeSubgraph::EdgeSubgraph(Graph parent, std::vector<bool> selected)
    : parent_(std::move(parent)), selected_(std::move(selected)) {
  if (static_cast<int>(selected_.size()) != parent_.edge_count())
    throw PreconditionError("edge selection size does not match the parent's edge count");
}

EdgeSubgraph EdgeSubgraph::from_edges(const Graph& parent, const std::vector<Edge>& chosen) {
  auto all = parent.edges();
  std::vector<bool> sel(all.size(), false);
  for (auto [u, v] : chosen) {
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    bool found = false;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (all[k] == e) sel[k] = found = true;
    if (!found) throw PreconditionError("edge is not in the parent graph");
  }
  return EdgeSubgraph(parent, std::move(sel));
}

std::vector<Edge> EdgeSubgraph::edges() const {
  auto all = parent_.edges();
  std::vector<Edge> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (selected_[k]) out.push_back(all[k]);
  return out;
}

int EdgeSubgraph::edge_count() const {
  int c = 0;
  for (bool b : selected_) c += b;
  return c;
}

VertexSet EdgeSubgraph::vertex_support() const {
  VertexSet s;
  for (auto [u, v] : edges()) {
    s.insert(u);
    s.insert(v);
  }
  return s;
}

Graph EdgeSubgraph::to_graph() const { return Graph::from_edges(parent_.order(), edges()); }

std::vector<VertexSet> connected_components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> comps;
  VertexSet left = g.vertices() - removed;
  while (!left.empty()) {
    VertexSet comp{left.min()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next = next | g.neighbors(v);
      next = (next & left) - comp;
      comp = comp | next;
      frontier = next;
    }
    comps.push_back(comp);
    left = left - comp;
  }
  return comps;
}

int component_count(const Graph& g, VertexSet removed) {
  return static_cast<int>(connected_components(g, removed).size());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_simplicial(const Graph& g, int v) {
  check_vertex(g, v);
  return g.is_clique(g.neighbors(v));
}

int iv(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += !is_simplicial(g, v);
  return count;
}

EdgeSubgraph star(const Graph& g, int v) {
  check_vertex(g, v);
  if (g.degree(v) < 2)
    throw PreconditionError("star requires a vertex with at least two neighbors; vertex " +
                            std::to_string(v + 1) + " has degree " + std::to_string(g.degree(v)));
  std::vector<Edge> es;
  for (int a : g.neighbors(v)) es.emplace_back(a, v);
  return EdgeSubgraph::from_edges(g, es);
}

DeletionResult ohtani_delete(const Graph& g, int v) {
  check_vertex(g, v);
  DeletionResult out{Graph(g.order() - 1), std::vector<int>(g.order(), -1)};
  for (int u = 0, next = 0; u < g.order(); ++u)
    if (u != v) out.old_to_new[u] = next++;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) out.graph.add_edge(out.old_to_new[a], out.old_to_new[b]);
  return out;
}

Graph ohtani_saturate(const Graph& g, int v) {
  check_vertex(g, v);
  Graph out = g;
  VertexSet nb = g.neighbors(v);
  for (int a : nb)
    for (int b : nb)
      if (a < b) out.add_edge(a, b);
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw PreconditionError("permutation size mismatch");
  Graph out(g.order());
  for (auto [a, b] : g.edges()) out.add_edge(perm[a], perm[b]);
  return out;
}

Graph restrict_edges(const Graph& g, VertexSet keep) {
  Graph out(g.order());
  for (auto [a, b] : g.edges())
    if (keep.contains(a) && keep.contains(b)) out.add_edge(a, b);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int v : keep) index[v] = next++;
  Graph out(next);
  for (auto [a, b] : g.edges())
    if (index[a] >= 0 && index[b] >= 0) out.add_edge(index[a], index[b]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

namespace families {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star(int m) {
  Graph g(m + 1);
  for (int i = 1; i <= m; ++i) g.add_edge(0, i);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

Graph net() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {4, 5}}); }

}  // namespace families

}  // namespace beilab
