#include "beilab/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

using EdgeMask = std::uint64_t;

constexpr int kMaxCoverEdges = 64;

std::vector<Edge> checked_edges(const Graph& g, const char* what) {
  auto es = g.edges();
  if (static_cast<int>(es.size()) > kMaxCoverEdges)
    throw SizeError(std::string(what) + " supports at most 64 edges, got " + std::to_string(es.size()));
  return es;
}

EdgeMask edges_inside(const std::vector<Edge>& es, VertexSet s) {
  EdgeMask m = 0;
  for (std::size_t k = 0; k < es.size(); ++k)
    if (s.contains(es[k].first) && s.contains(es[k].second)) m |= EdgeMask{1} << k;
  return m;
}

EdgeMask edges_at(const std::vector<Edge>& es, int v) {
  EdgeMask m = 0;
  for (std::size_t k = 0; k < es.size(); ++k)
    if (es[k].first == v || es[k].second == v) m |= EdgeMask{1} << k;
  return m;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p | x) {
    const int k = (p & g.neighbors(u)).size();
    if (k > best) best = k, pivot = u;
  }
  for (int v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r | VertexSet{v}, p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

bool vertex_list_less(VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); }

struct Candidate {
  EdgeMask covers = 0;
  int cost = 1;
  VertexSet clique;  // when cost == 1
  StarMember star;   // when cost == 2
};

class CoverSearch {
 public:
  CoverSearch(const Graph& g) : edges_(checked_edges(g, "mixed cover")) {
    const int m = static_cast<int>(edges_.size());
    full_ = m == 64 ? ~EdgeMask{0} : ((EdgeMask{1} << m) - 1);

    std::vector<VertexSet> cliques = maximal_cliques(g);
    for (auto [a, b] : edges_) {
      VertexSet e{a, b};
      if (std::find(cliques.begin(), cliques.end(), e) == cliques.end()) cliques.push_back(e);
    }
    std::sort(cliques.begin(), cliques.end(), vertex_list_less);
    for (VertexSet c : cliques) pool_.push_back({edges_inside(edges_, c), 1, c, {}});
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) >= 2) pool_.push_back({edges_at(edges_, v), 2, {}, {v, g.neighbors(v)}});

    compatible_.assign(m, 0);
    for (const auto& c : pool_)
      for (int e : bits(c.covers)) compatible_[e] |= c.covers;
  }

  CoverSolution run() {
    best_value_ = static_cast<int>(edges_.size()) + 1;
    std::vector<int> chosen;
    search(0, 0, chosen);
    return best_;
  }

 private:
  static std::vector<int> bits(EdgeMask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  // Greedy family of uncovered edges no two of which fit in one candidate.
  int lower_bound(EdgeMask uncovered) const {
    int count = 0;
    EdgeMask blocked = 0;
    for (EdgeMask m = uncovered; m; m &= m - 1) {
      const int e = std::countr_zero(m);
      if ((blocked >> e) & 1) continue;
      ++count;
      blocked |= compatible_[e];
    }
    return count;
  }

  void search(EdgeMask covered, int cost, std::vector<int>& chosen) {
    const EdgeMask uncovered = full_ & ~covered;
    if (cost + lower_bound(uncovered) > best_value_) return;
    if (uncovered == 0) {
      offer(cost, chosen);
      return;
    }
    const int e = std::countr_zero(uncovered);
    for (int k = 0; k < static_cast<int>(pool_.size()); ++k) {
      if (!((pool_[k].covers >> e) & 1)) continue;
      if (!chosen.empty() && std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
      chosen.push_back(k);
      search(covered | pool_[k].covers, cost + pool_[k].cost, chosen);
      chosen.pop_back();
    }
  }

  void offer(int cost, const std::vector<int>& chosen) {
    CoverSolution sol;
    for (int k : chosen) {
      if (pool_[k].cost == 1)
        sol.cliques.push_back(pool_[k].clique);
      else
        sol.stars.push_back(pool_[k].star);
    }
    std::sort(sol.cliques.begin(), sol.cliques.end(), vertex_list_less);
    std::sort(sol.stars.begin(), sol.stars.end());
    if (cost < best_value_ || (cost == best_value_ && key_less(sol, best_))) {
      best_value_ = cost;
      best_ = std::move(sol);
    }
  }

  static bool key_less(const CoverSolution& a, const CoverSolution& b) {
    auto lists = [](const CoverSolution& s) {
      std::vector<std::vector<int>> out;
      for (VertexSet c : s.cliques) out.push_back(c.to_vector());
      return out;
    };
    auto la = lists(a), lb = lists(b);
    if (la != lb) return la < lb;
    return a.stars < b.stars;
  }

  std::vector<Edge> edges_;
  EdgeMask full_ = 0;
  std::vector<Candidate> pool_;
  std::vector<EdgeMask> compatible_;
  int best_value_ = 0;
  CoverSolution best_;
};

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(std::vector<EdgeMask> conflicts) : conflicts_(std::move(conflicts)) {}

  EdgeMask run() {
    const int m = static_cast<int>(conflicts_.size());
    search(m == 64 ? ~EdgeMask{0} : ((EdgeMask{1} << m) - 1), 0);
    return best_set_;
  }

 private:
  void search(EdgeMask cand, EdgeMask chosen) {
    const int size = std::popcount(chosen);
    if (size + std::popcount(cand) <= best_size_) return;
    if (cand == 0) {
      best_size_ = size;
      best_set_ = chosen;
      return;
    }
    const int v = std::countr_zero(cand);
    const EdgeMask bit = EdgeMask{1} << v;
    search(cand & ~conflicts_[v] & ~bit, chosen | bit);
    if (cand & conflicts_[v]) search(cand & ~bit, chosen);
  }

  std::vector<EdgeMask> conflicts_;
  int best_size_ = -1;
  EdgeMask best_set_ = 0;
};

}  // namespace

bool CoverSolution::is_valid_for(const Graph& g) const {
  Graph covered(g.order());
  for (VertexSet c : cliques) {
    if (c.size() < 2 || !c.is_subset_of(g.vertices()) || !g.is_clique(c)) return false;
    for (int a : c)
      for (int b : c)
        if (a < b) covered.add_edge(a, b);
  }
  for (const StarMember& s : stars) {
    if (s.leaves.size() < 2 || s.leaves.contains(s.center) || !s.leaves.is_subset_of(g.neighbors(s.center)))
      return false;
    for (int a : s.leaves) covered.add_edge(a, s.center);
  }
  return covered == g;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> all;
  bron_kerbosch(g, {}, g.vertices(), {}, all);
  std::vector<VertexSet> out;
  for (VertexSet c : all)
    if (c.size() >= 2) out.push_back(c);
  std::sort(out.begin(), out.end(), vertex_list_less);
  return out;
}

CoverSolution mixed_cover(const Graph& g) {
  CoverSolution sol = CoverSearch(g).run();
  if (!sol.is_valid_for(g)) throw std::logic_error("mixed cover search produced an invalid cover");
  return sol;
}

bool edges_share_clique(const Graph& g, Edge e, Edge f) {
  return g.is_clique(VertexSet{e.first, e.second, f.first, f.second});
}

std::vector<Edge> clique_disjoint_edge_set(const Graph& g) {
  const auto es = checked_edges(g, "eta");
  std::vector<EdgeMask> conflicts(es.size(), 0);
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (edges_share_clique(g, es[a], es[b])) {
        conflicts[a] |= EdgeMask{1} << b;
        conflicts[b] |= EdgeMask{1} << a;
      }
  const EdgeMask picked = IndependentSetSearch(std::move(conflicts)).run();
  std::vector<Edge> out;
  for (std::size_t k = 0; k < es.size(); ++k)
    if ((picked >> k) & 1) out.push_back(es[k]);
  return out;
}

int eta(const Graph& g) { return static_cast<int>(clique_disjoint_edge_set(g).size()); }

}  // namespace beilab
