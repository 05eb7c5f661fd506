#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "beilab/graph.hpp"
#include "beilab/memo.hpp"

namespace beilab {

inline constexpr int kMaxHeightSweepOrder = 7;
inline constexpr int kMaxExhaustiveSplitOrder = 5;
inline constexpr int kMaxSampledSplitOrder = 7;

enum class SplitMode { all, sample };

struct SweepParams {
  int max_n = 6;
  int prime = 2;
  int jobs = 1;
  SplitMode splits = SplitMode::all;
  std::uint64_t samples = 0;  // per graph, sample mode only
  std::uint64_t seed = 0;
  std::string resume_path;  // empty: no cache
};

/// One split E(G) = E(H1) u E(H2). `split` holds one character per edge of G in
/// sorted edge order: '1' (H1 only), '2' (H2 only) or 'b' (both).
struct SweepCase {
  std::string graph6;
  std::string split;
  int reg_g = 0, reg_h1 = 0, reg_h2 = 0;
  bool holds = false;
  friend bool operator==(const SweepCase&, const SweepCase&) = default;
};

struct GraphVerdict {
  std::string graph6;
  int n = 0, m = 0;
  int reg = 0, height = 0;
  std::size_t cases = 0, violations = 0;
  bool reg_le_height() const { return reg <= height; }
  friend bool operator==(const GraphVerdict&, const GraphVerdict&) = default;
};

struct Violation {
  std::string kind;  // "regLeHeight" or "subadditivity"
  SweepCase data;    // split empty for regLeHeight; reg_h1 then carries the height
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct SweepReport {
  std::string command;  // "check-height" or "check-subadditivity"
  SweepParams params;
  std::size_t graph_count = 0;
  std::size_t case_count = 0;
  std::vector<Violation> violations;
  std::vector<GraphVerdict> graphs;  // enumeration order
  double wall_seconds = 0;
  bool holds() const { return violations.empty(); }
};

/// Both H1 and H2 nonempty, and mask(H1) <= mask(H2) with bit k standing for edge k.
bool is_canonical_split(std::string_view split);
/// Every canonical split of a graph with `edge_count` edges, sorted.
std::vector<std::string> canonical_splits(int edge_count);
/// Up to `samples` distinct canonical splits drawn with a generator seeded from
/// `seed` and `graph6`, sorted.
std::vector<std::string> sampled_splits(int edge_count, std::uint64_t samples, std::uint64_t seed,
                                        std::string_view graph6);
/// H1 and H2 on the vertex set of G.
std::pair<Graph, Graph> split_graphs(const Graph& g, std::string_view split);
SweepCase evaluate_split(const Graph& g, std::string_view split, RegularityMemo& memo);

/// reg <= height over every connected graph with 2 <= n <= max_n (max_n <= 7).
SweepReport check_height(const SweepParams& params);
/// reg(G) <= reg(H1) + reg(H2) over canonical splits of every connected graph with
/// 2 <= n <= max_n (max_n <= 5 for all splits, <= 7 when sampling). Also records reg <= height.
SweepReport check_subadditivity(const SweepParams& params);

}  // namespace beilab
