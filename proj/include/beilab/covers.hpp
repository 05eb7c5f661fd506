#pragma once

#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

struct StarMember {
  int center = 0;
  VertexSet leaves;

  friend bool operator==(const StarMember&, const StarMember&) = default;
  friend auto operator<=>(const StarMember&, const StarMember&) = default;
};

/// An edge cover of a graph by complete subgraphs (weight 1) and stars K_{1,m}, m >= 2 (weight 2).
struct CoverSolution {
  std::vector<VertexSet> cliques;
  std::vector<StarMember> stars;

  int value() const { return static_cast<int>(cliques.size() + 2 * stars.size()); }
  /// Cover, clique and star validity against `g`.
  bool is_valid_for(const Graph& g) const;
};

/// All maximal cliques (Bron-Kerbosch with pivoting), sorted by their vertex lists.
std::vector<VertexSet> maximal_cliques(const Graph& g);
inline int clique_count(const Graph& g) { return static_cast<int>(maximal_cliques(g).size()); }

/// Minimum of #cliques + 2 #stars over edge covers. Candidates are the maximal cliques,
/// the single edges and the full star at every vertex of degree >= 2. Among optimal
/// covers the one with the lexicographically least clique list is returned.
CoverSolution mixed_cover(const Graph& g);

/// e and f lie in a common clique iff their endpoints together induce a complete subgraph.
bool edges_share_clique(const Graph& g, Edge e, Edge f);

/// Maximum size of an edge set no two of whose edges lie in a common clique.
int eta(const Graph& g);
/// A witness edge set for eta(g).
std::vector<Edge> clique_disjoint_edge_set(const Graph& g);

}  // namespace beilab
