#include "beilab/initial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

// DFS from each start vertex i. A vertex w > i placed in the interior caps every later
// endpoint below w, and a new vertex adjacent to anything but the current tip would
// create a chord, which no extension can remove.
void extend(const Graph& g, std::vector<int>& path, VertexSet on_path, int cap,
            std::vector<AdmissiblePath>& out) {
  const int start = path.front();
  const int tip = path.back();
  for (int w : g.neighbors(tip) - on_path) {
    if (!(g.neighbors(w) & on_path).is_subset_of(VertexSet{tip})) continue;
    path.push_back(w);
    if (w > start && w < cap) out.push_back({path});
    const int next_cap = w > start ? std::min(cap, w) : cap;
    if (next_cap > start + 1) extend(g, path, on_path | VertexSet{w}, next_cap, out);
    path.pop_back();
  }
}

}  // namespace

bool is_admissible(const Graph& g, const AdmissiblePath& p) {
  if (p.length() < 1) return false;
  const int i = p.first(), j = p.last();
  if (i >= j) return false;
  VertexSet seen;
  for (int v : p.vertices) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t a = 0; a < p.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < p.vertices.size(); ++b)
      if (g.adjacent(p.vertices[a], p.vertices[b]) != (b == a + 1)) return false;
  for (int k = 1; k < p.length(); ++k) {
    const int v = p.vertices[k];
    if (!(v < i || v > j)) return false;
  }
  return true;
}

std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
  std::vector<AdmissiblePath> out;
  std::vector<int> path;
  for (int i = 0; i < g.order(); ++i) {
    path.assign(1, i);
    extend(g, path, VertexSet{i}, std::numeric_limits<int>::max(), out);
  }
  std::sort(out.begin(), out.end(), [](const AdmissiblePath& a, const AdmissiblePath& b) {
    return std::tuple(a.first(), a.last(), a.vertices) < std::tuple(b.first(), b.last(), b.vertices);
  });
  return out;
}

Monomial path_leading_monomial(const AdmissiblePath& p, int n) {
  const int i = p.first(), j = p.last();
  Monomial m = x_var(n, i) * y_var(n, j);
  for (int k = 1; k < p.length(); ++k) {
    const int v = p.vertices[k];
    m = m * (v > j ? x_var(n, v) : y_var(n, v));
  }
  return m;
}

MonomialIdeal initial_ideal(const Graph& g) {
  if (2 * g.order() > 64) throw SizeError("initial ideals need 2n <= 64 variables");
  std::vector<Monomial> gens;
  for (const auto& p : admissible_paths(g)) gens.push_back(path_leading_monomial(p, g.order()));
  return MonomialIdeal(2 * g.order(), std::move(gens));
}

}  // namespace beilab
