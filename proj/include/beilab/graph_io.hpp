#pragma once

#include <string>
#include <string_view>

#include "beilab/graph.hpp"

namespace beilab {

/// Short-form graph6 (single header byte, so n <= 62; graphs here are capped at 31).
/// An optional ">>graph6<<" prefix is accepted. Throws ParseError naming the byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// "n; i j; i j; ..." with 1-based vertex labels.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Edge list if the text contains ';', graph6 otherwise.
Graph parse_graph(std::string_view text);

}  // namespace beilab
