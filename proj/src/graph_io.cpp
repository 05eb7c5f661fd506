#include "beilab/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) {
    text.remove_prefix(kGraph6Prefix.size());
    base = kGraph6Prefix.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("long-form graph6 header is not supported", base);
  if (header < 63 || header > 125) throw ParseError("invalid graph6 header byte", base);
  const int n = header - 63;
  if (n < 1) throw ParseError("graph6 graph must have at least one vertex", base);
  if (n > kMaxVertices)
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds the cap of 31", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) + " bytes, got " +
                         std::to_string(text.size()),
                     base + std::min(text.size(), expected));

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t pos = 1; pos < text.size(); ++pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 data byte", base + pos);
    const int value = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool bit = (value >> b) & 1;
      if (k >= bits) {
        if (bit) throw ParseError("nonzero graph6 padding bits", base + pos);
        continue;
      }
      if (!bit) continue;
      // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
      int j = 1;
      std::size_t start = 0;
      while (start + j <= k) start += j++;
      g.add_edge(static_cast<int>(k - start), j);
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw PreconditionError("graph6 needs at least one vertex");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ';') {
      fields.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    }

  auto read_ints = [](std::string_view field, std::size_t offset) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < field.size()) {
      if (std::isspace(static_cast<unsigned char>(field[i]))) {
        ++i;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data() + i, field.data() + field.size(), value);
      if (ec != std::errc()) throw ParseError("expected an integer in edge list", offset + i);
      i = static_cast<std::size_t>(ptr - field.data());
      out.push_back(value);
    }
    return out;
  };

  auto header = read_ints(fields[0].first, fields[0].second);
  if (header.size() != 1) throw ParseError("edge list must start with the vertex count", fields[0].second);
  const int n = header[0];
  if (n < 1 || n > kMaxVertices)
    throw ParseError("edge list vertex count must be in 1..31", fields[0].second);

  Graph g(n);
  for (std::size_t f = 1; f < fields.size(); ++f) {
    auto [field, offset] = fields[f];
    if (trim(field).empty()) continue;
    auto ends = read_ints(field, offset);
    if (ends.size() != 2) throw ParseError("edge must have exactly two endpoints", offset);
    auto [a, b] = std::pair{ends[0], ends[1]};
    if (a < 1 || b < 1 || a > n || b > n) throw ParseError("edge endpoint out of range", offset);
    if (a == b) throw ParseError("loops are not allowed", offset);
    g.add_edge(a - 1, b - 1);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  for (auto [a, b] : g.edges()) out += "; " + std::to_string(a + 1) + " " + std::to_string(b + 1);
  return out;
}

Graph parse_graph(std::string_view text) {
  text = trim(text);
  if (text.find(';') != std::string_view::npos) return parse_edge_list(text);
  return parse_graph6(text);
}

}  // namespace beilab
