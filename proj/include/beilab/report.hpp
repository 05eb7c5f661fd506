#pragma once

#include <string>

#include "json.hpp"

#include "beilab/bounds.hpp"
#include "beilab/covers.hpp"
#include "beilab/graph.hpp"
#include "beilab/homology.hpp"
#include "beilab/primes.hpp"
#include "beilab/sweep.hpp"

namespace beilab {

/// Insertion-ordered, so emitted keys follow the order they are built in.
using json = nlohmann::ordered_json;

/// 1-based vertex labels, increasing.
json vertex_set_json(VertexSet s);
VertexSet vertex_set_from_json(const json& j);

json to_json(const CutSetRecord& r);         // {S, c, b, cut, height}
json to_json(const CoverSolution& cover);    // {p, q, value, cliques, stars:[{center, leaves}]}
json to_json(const BettiTable& table);       // {p, betti:[[i, j, value]], reg}
json to_json(const BoundsReport& report);
json to_json(const DecompositionCase& ca);
json to_json(const SweepCase& ca);
SweepCase sweep_case_from_json(const json& j);
json to_json(const GraphVerdict& v);
json to_json(const Violation& v);
/// Wall time is left out unless asked for, so reruns compare byte for byte.
json to_json(const SweepReport& report, bool with_timing = false);

/// n, m, iv, c, eta, height, mixedCover and the minimal primes. Requires n <= 10.
json invariants_json(const Graph& g);

/// Header plus one row per element of an array of flat objects; nested values are
/// written as compact JSON in a quoted cell.
std::string csv_table(const json& rows);
/// Header plus a single row.
std::string csv_row(const json& object);

}  // namespace beilab
