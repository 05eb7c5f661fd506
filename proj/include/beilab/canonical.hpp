#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

// The canonical form of a graph is the relabeling whose upper-triangle bit string,
// read column by column ((0,1), (0,2), (1,2), (0,3), ...), is lexicographically least
// over all vertex permutations.

struct CanonicalLabeling {
  Graph graph;            // relabeled copy in canonical form
  std::vector<int> perm;  // original vertex v becomes perm[v]
};

CanonicalLabeling canonical_labeling(const Graph& g);
inline Graph canonical_form(const Graph& g) { return canonical_labeling(g).graph; }

/// Column j of the upper triangle as a j-bit word, most significant bit = (0, j).
std::vector<std::uint32_t> triangle_columns(const Graph& g);

/// Lexicographic order on upper-triangle bit strings of graphs of equal order.
bool triangle_less(const Graph& a, const Graph& b);

inline constexpr int kMaxEnumerationOrder = 8;

/// One representative (in canonical form) per isomorphism class of connected graphs on n vertices,
/// sorted by triangle bit string. 1 <= n <= 8.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Streaming variant; the callback sees the same sequence as enumerate_connected_graphs.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);

}  // namespace beilab
