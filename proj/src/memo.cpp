#include "beilab/memo.hpp"

#include "beilab/canonical.hpp"
#include "beilab/homology.hpp"

namespace beilab {

int RegularityMemo::regularity(const Graph& g) {
  VertexSet touched;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) touched.insert(v);
  const Graph key = canonical_form(induced_subgraph(g, touched));
  if (auto hit = cache_.get(key)) return *hit;
  const int reg = reg_binomial_edge(key, prime_);
  cache_.put(key, reg);
  return reg;
}

}  // namespace beilab
