#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace beilab {

inline constexpr int kMaxVertices = 31;

using VertexMask = std::uint32_t;

// Vertices are 0-indexed internally; text formats use 1..n.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(VertexMask rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    VertexMask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(VertexMask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet range(int n) {
    return VertexSet(n >= 32 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1));
  }

  constexpr VertexMask bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int min() const { return std::countr_zero(bits_); }
  void insert(int v) { bits_ |= VertexMask{1} << v; }
  void erase(int v) { bits_ &= ~(VertexMask{1} << v); }
  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet, VertexSet) = default;

 private:
  VertexMask bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as neighbor bitmasks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v] | (VertexMask{1} << v)); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges as (i, j) with i < j, sorted lexicographically. This order indexes edge masks.
  std::vector<Edge> edges() const;

  /// True when `s` induces a complete subgraph.
  bool is_clique(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

/// A subgraph of a parent graph given by a subset of the parent's edges.
class EdgeSubgraph {
 public:
  EdgeSubgraph(Graph parent, std::vector<bool> selected);
  static EdgeSubgraph from_edges(const Graph& parent, const std::vector<Edge>& edges);

  const Graph& parent() const { return parent_; }
  const std::vector<bool>& selection() const { return selected_; }
  std::vector<Edge> edges() const;
  int edge_count() const;
  /// Union of the endpoints of the selected edges.
  VertexSet vertex_support() const;
  /// Same vertex set as the parent, selected edges only.
  Graph to_graph() const;

 private:
  Graph parent_;
  std::vector<bool> selected_;
};

struct DeletionResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for the deleted vertex
};

/// Connected components of G minus `removed`, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet removed = {});
int component_count(const Graph& g, VertexSet removed = {});
bool is_connected(const Graph& g);

bool is_simplicial(const Graph& g, int v);
/// Number of non-simplicial vertices.
int iv(const Graph& g);

/// St_G(v): the edges {a, v} for a in N(v). Requires deg(v) >= 2.
EdgeSubgraph star(const Graph& g, int v);

/// G \ v with the remaining vertices renumbered consecutively.
DeletionResult ohtani_delete(const Graph& g, int v);
/// G_v: N(v) completed to a clique.
Graph ohtani_saturate(const Graph& g, int v);

/// Vertex v of `g` becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, const std::vector<int>& perm);
/// Keeps all n vertices, drops every edge not inside `keep`.
Graph restrict_edges(const Graph& g, VertexSet keep);
/// Induced subgraph on `keep`, renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph disjoint_union(const Graph& a, const Graph& b);

namespace families {
Graph complete(int n);
/// K_{1,m} with center 0.
Graph star(int m);
/// Path 0-1-...-(n-1).
Graph path(int n);
Graph cycle(int n);
/// The net: triangle {1,2,4} (0-based) with a pendant at each corner; 1-based edges 12,23,34,25,35,56.
Graph net();
}  // namespace families

}  // namespace beilab
