#pragma once

#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

/// A vertex set S together with the data of P_G(S): the components of G \ S.
/// The prime itself is never materialized as polynomials.
struct CutSetRecord {
  VertexSet removed;
  int component_count = 0;
  int b_value = 0;
  bool is_cut_set = false;
  int height = 0;  // height of P_G(S); equals b_value

  friend bool operator==(const CutSetRecord&, const CutSetRecord&) = default;
};

/// 2|S| + sum over components C of G \ S of (|C| - 1). Isolated vertices contribute 0.
int b_value(const Graph& g, VertexSet removed);

/// S is empty, or removing any single element from S strictly lowers the component count.
bool is_cut_set(const Graph& g, VertexSet removed);

CutSetRecord cut_set_record(const Graph& g, VertexSet removed);

/// min over all S of b_value(G, S), which is the height of J_G.
int height(const Graph& g);

/// Every vertex set attaining height(G).
std::vector<VertexSet> height_minimizers(const Graph& g);

/// Records for all cut sets (the minimal primes of J_G), sorted by (height, S).
/// A disconnected graph is handled component by component; each record then
/// describes one component's prime.
std::vector<CutSetRecord> minimal_primes(const Graph& g);

}  // namespace beilab
