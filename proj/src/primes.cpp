#include "beilab/primes.hpp"

#include <algorithm>
#include <limits>

namespace beilab {

namespace {

// Next k-subset of an n-bit universe in increasing numeric order.
VertexMask next_same_popcount(VertexMask x) {
  const VertexMask low = x & (~x + 1);
  const VertexMask ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

template <typename Visit>
void for_each_subset_of_size(int n, int k, Visit visit) {
  if (k == 0) {
    visit(VertexSet{});
    return;
  }
  if (k > n) return;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;) {
    visit(VertexSet(static_cast<VertexMask>(x)));
    if (x == ((std::uint64_t{1} << k) - 1) << (n - k)) break;
    x = next_same_popcount(static_cast<VertexMask>(x));
  }
}

int b_from_components(int removed_size, const std::vector<VertexSet>& comps) {
  int b = 2 * removed_size;
  for (VertexSet c : comps) b += c.size() - 1;
  return b;
}

}  // namespace

int b_value(const Graph& g, VertexSet removed) {
  return b_from_components(removed.size(), connected_components(g, removed));
}

bool is_cut_set(const Graph& g, VertexSet removed) {
  if (removed.empty()) return true;
  const int c = component_count(g, removed);
  for (int i : removed)
    if (component_count(g, removed - VertexSet{i}) >= c) return false;
  return true;
}

CutSetRecord cut_set_record(const Graph& g, VertexSet removed) {
  auto comps = connected_components(g, removed);
  const int b = b_from_components(removed.size(), comps);
  return {removed, static_cast<int>(comps.size()), b, is_cut_set(g, removed), b};
}

int height(const Graph& g) {
  // b(S) >= 2|S|, so sizes are scanned upward until 2|S| can no longer beat the incumbent.
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k <= g.order() && 2 * k < best; ++k)
    for_each_subset_of_size(g.order(), k, [&](VertexSet s) { best = std::min(best, b_value(g, s)); });
  return g.order() == 0 ? 0 : best;
}

std::vector<VertexSet> height_minimizers(const Graph& g) {
  const int best = height(g);
  std::vector<VertexSet> out;
  for (int k = 0; k <= g.order() && 2 * k <= best; ++k)
    for_each_subset_of_size(g.order(), k, [&](VertexSet s) {
      if (b_value(g, s) == best) out.push_back(s);
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CutSetRecord> minimal_primes(const Graph& g) {
  std::vector<CutSetRecord> out;
  for (VertexSet comp : connected_components(g)) {
    const VertexSet others = g.vertices() - comp;
    const std::vector<int> members = comp.to_vector();
    const auto size = static_cast<VertexMask>(members.size());
    for (VertexMask pick = 0; pick < (VertexMask{1} << size); ++pick) {
      VertexSet s;
      for (int t : VertexSet(pick)) s.insert(members[t]);
      // c(S) is counted inside this component; the other components are held out.
      const int c = component_count(g, s | others);
      bool cut = true;
      for (int i : s)
        if (component_count(g, (s - VertexSet{i}) | others) >= c) cut = false;
      if (!cut) continue;
      auto comps = connected_components(g, s | others);
      const int b = b_from_components(s.size(), comps);
      out.push_back({s, static_cast<int>(comps.size()), b, true, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const CutSetRecord& a, const CutSetRecord& b) {
    return std::pair(a.height, a.removed) < std::pair(b.height, b.removed);
  });
  return out;
}

}  // namespace beilab
