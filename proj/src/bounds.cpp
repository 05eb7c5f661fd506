#include "beilab/bounds.hpp"

#include <algorithm>
#include <limits>

#include "beilab/canonical.hpp"
#include "beilab/covers.hpp"
#include "beilab/errors.hpp"
#include "beilab/graph_io.hpp"
#include "beilab/homology.hpp"
#include "beilab/initial_ideal.hpp"
#include "beilab/primes.hpp"

namespace beilab {

namespace {

LruCache<Graph, int, GraphHash>& ohtani_memo() {
  static LruCache<Graph, int, GraphHash> memo(1 << 20);
  return memo;
}

int connected_ohtani_bound(const Graph& component) {
  if (component.order() <= 1) return 0;
  if (component.is_clique(component.vertices())) return 1;
  const Graph h = canonical_form(component);
  if (auto hit = ohtani_memo().get(h)) return *hit;

  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < h.order(); ++v) {
    if (is_simplicial(h, v)) continue;
    const Graph saturated = ohtani_saturate(h, v);
    const int deleted = ohtani_bound(ohtani_delete(h, v).graph);
    const int kept = ohtani_bound(saturated);
    const int both = ohtani_bound(ohtani_delete(saturated, v).graph) + 1;
    best = std::min(best, std::max({deleted, kept, both}));
  }
  ohtani_memo().put(h, best);
  return best;
}

int reg_of(const Graph& g, int p, RegularityMemo* memo) {
  if (memo && memo->prime() == p) return memo->regularity(g);
  return reg_binomial_edge(g, p);
}

}  // namespace

int ohtani_bound(const Graph& g) {
  // the recursion splits over components: a vertex only touches its own component
  int total = 0;
  for (VertexSet comp : connected_components(g)) total += connected_ohtani_bound(induced_subgraph(g, comp));
  return total;
}

std::size_t ohtani_memo_size() { return ohtani_memo().size(); }
void clear_ohtani_memo() { ohtani_memo().clear(); }

bool BoundsReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

BoundsReport bounds_report(const Graph& g, int p) {
  if (g.order() > kMaxRegularityOrder)
    throw SizeError("bounds need n <= 10 for the regularity engine; graph has n = " + std::to_string(g.order()));
  BoundsReport r;
  r.graph6 = g.order() > 0 ? emit_graph6(g) : "";
  r.reg = reg_binomial_edge(g, p);
  r.height = height(g);
  r.clique_count = clique_count(g);
  r.mixed_cover = mixed_cover(g).value();
  r.eta = eta(g);
  r.ohtani = ohtani_bound(g);
  r.verdicts = {
      {"regLeHeight", r.reg <= r.height},
      {"regLeC", r.reg <= r.clique_count},
      {"regLeMixedCover", r.reg <= r.mixed_cover},
      {"regLeEta", r.reg <= r.eta},
      {"regLeOhtani", r.reg <= r.ohtani},
      {"ohtaniLeHeight", r.ohtani <= r.height},
      {"mixedCoverLeC", r.mixed_cover <= r.clique_count},
  };
  return r;
}

DecompositionCase decomp_check(const Graph& g, VertexSet a, VertexSet b, VertexSet c, int p, RegularityMemo* memo) {
  if (a.empty() || b.empty() || c.empty()) throw PreconditionError("A, B and C must be nonempty");
  if (!(a & b).empty() || !(b & c).empty() || !(a & c).empty())
    throw PreconditionError("A, B and C must be pairwise disjoint");
  if (!(a | b | c).is_subset_of(g.vertices())) throw PreconditionError("A, B and C must be vertex sets of G");

  DecompositionCase out;
  out.graph = g;
  out.a = a;
  out.b = b;
  out.c = c;
  out.h1 = restrict_edges(g, a | b);
  out.h2 = restrict_edges(g, b | c);

  if ((a | b | c) != g.vertices()) out.violations.push_back("union != V(G)");
  if (!g.is_clique(b)) out.violations.push_back("B not complete");
  if (connected_components(induced_subgraph(g, b)).size() != 1) out.violations.push_back("B not connected");
  bool ac_edge = false;
  for (int v : a) ac_edge = ac_edge || !(g.neighbors(v) & c).empty();
  if (ac_edge) out.violations.push_back("A-C edge present");
  out.valid = out.violations.empty();
  if (!out.valid) return out;

  out.relabeling.assign(g.order(), -1);
  int next = 0;
  for (VertexSet block : {a, b, c})
    for (int v : block) out.relabeling[v] = next++;
  const Graph relabeled = relabel(g, out.relabeling);
  VertexSet a2, b2, c2;
  for (int v : a) a2.insert(out.relabeling[v]);
  for (int v : b) b2.insert(out.relabeling[v]);
  for (int v : c) c2.insert(out.relabeling[v]);
  const Graph h1 = restrict_edges(relabeled, a2 | b2);
  const Graph h2 = restrict_edges(relabeled, b2 | c2);

  out.init_g = initial_ideal(relabeled);
  out.init_sum = initial_ideal(h1) + initial_ideal(h2);
  out.init_sum_equal = out.init_g == out.init_sum;
  out.reg_g = reg_of(relabeled, p, memo);
  out.reg_h1 = reg_of(h1, p, memo);
  out.reg_h2 = reg_of(h2, p, memo);
  out.reg_inequality_holds = out.reg_g <= out.reg_h1 + out.reg_h2;
  return out;
}

std::vector<DecompositionCase> valid_decompositions(const Graph& g, int p, RegularityMemo* memo) {
  std::vector<DecompositionCase> out;
  const int n = g.order();
  std::vector<int> block(n, 0);
  while (true) {
    VertexSet parts[3];
    for (int v = 0; v < n; ++v) parts[block[v]].insert(v);
    if (!parts[0].empty() && !parts[1].empty() && !parts[2].empty() && g.is_clique(parts[1])) {
      bool ac_edge = false;
      for (int v : parts[0]) ac_edge = ac_edge || !(g.neighbors(v) & parts[2]).empty();
      if (!ac_edge) {
        auto ca = decomp_check(g, parts[0], parts[1], parts[2], p, memo);
        if (ca.valid) out.push_back(std::move(ca));
      }
    }
    int k = 0;
    while (k < n && block[k] == 2) block[k++] = 0;
    if (k == n) break;
    ++block[k];
  }
  return out;
}

}  // namespace beilab
