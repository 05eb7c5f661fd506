#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "beilab/graph.hpp"
#include "beilab/memo.hpp"
#include "beilab/monomial.hpp"

namespace beilab {

/// Upper bound on reg(R/J_G) from the recursion
///   reg(G) <= max{ reg(G \ v), reg(G_v), reg(G_v \ v) + 1 }  for non-simplicial v,
/// minimized over v, bottoming out at disjoint unions of complete graphs
/// (one per component with an edge). Memoized on canonical forms of components.
int ohtani_bound(const Graph& g);

/// Entries in the process-wide recursion memo.
std::size_t ohtani_memo_size();
void clear_ohtani_memo();

struct BoundsReport {
  std::string graph6;
  int reg = 0;
  int height = 0;
  int clique_count = 0;
  int mixed_cover = 0;
  int eta = 0;
  int ohtani = 0;
  /// reg <= each bound, plus the internal orderings ohtani <= height and mixedCover <= c.
  std::map<std::string, bool> verdicts;

  bool all_hold() const;
};

/// Requires n <= 10.
BoundsReport bounds_report(const Graph& g, int p = 2);

/// V(G) = A + B + C with H_1 = G[A u B], H_2 = G[B u C].
struct DecompositionCase {
  Graph graph;
  VertexSet a, b, c;
  Graph h1, h2;  // original labels, all n vertices kept
  std::vector<std::string> violations;
  bool valid = false;
  // filled in only when valid
  std::vector<int> relabeling;  // vertex v -> relabeling[v]: A block, then B, then C
  MonomialIdeal init_g;
  MonomialIdeal init_sum;
  bool init_sum_equal = false;
  int reg_g = 0, reg_h1 = 0, reg_h2 = 0;
  bool reg_inequality_holds = false;

  /// Valid hypotheses with a failing conclusion.
  bool is_counterexample() const { return valid && !(init_sum_equal && reg_inequality_holds); }
};

/// A, B, C must be nonempty and pairwise disjoint (PreconditionError otherwise).
/// `memo` is used for the three regularities when given.
DecompositionCase decomp_check(const Graph& g, VertexSet a, VertexSet b, VertexSet c, int p = 2,
                               RegularityMemo* memo = nullptr);

/// Every ordered triple (A, B, C) of nonempty blocks partitioning V(G) that passes the
/// hypotheses, checked with decomp_check.
std::vector<DecompositionCase> valid_decompositions(const Graph& g, int p = 2, RegularityMemo* memo = nullptr);

}  // namespace beilab
