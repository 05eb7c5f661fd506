#pragma once

// Independent reference computations used only by the tests. None of these call the
// library code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "beilab/graph.hpp"

namespace oracle {

using beilab::Graph;

/// Upper-triangle bit string (column-major) as a vector of bits.
inline std::vector<int> triangle_bits(const Graph& g) {
  std::vector<int> bits;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  return bits;
}

/// Lexicographically least triangle string over all n! permutations.
inline std::vector<int> naive_canonical_bits(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  bool first = true;
  do {
    std::vector<int> bits;
    // position p holds vertex perm[p]
    for (int j = 1; j < g.order(); ++j)
      for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(perm[i], perm[j]) ? 1 : 0);
    if (first || bits < best) best = bits, first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool naive_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<int> seen(g.order(), 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.order(); ++u)
      if (g.adjacent(u, v) && !seen[u]) seen[u] = 1, stack.push_back(u);
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s; });
}

/// Count isomorphism classes of connected graphs on n vertices by brute force.
inline int count_connected_classes(int n) {
  const int slots = n * (n - 1) / 2;
  std::set<std::vector<int>> classes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if ((code >> k) & 1) g.add_edge(i, j);
    if (naive_connected(g)) classes.insert(naive_canonical_bits(g));
  }
  return static_cast<int>(classes.size());
}

/// Components of G minus `removed` by plain DFS over adjacency queries.
inline std::vector<std::vector<int>> naive_components(const Graph& g, std::uint32_t removed) {
  std::vector<int> label(g.order(), -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.order(); ++s) {
    if ((removed >> s) & 1 || label[s] >= 0) continue;
    comps.emplace_back();
    std::vector<int> stack{s};
    label[s] = static_cast<int>(comps.size()) - 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (int u = 0; u < g.order(); ++u)
        if (!((removed >> u) & 1) && label[u] < 0 && g.adjacent(u, v)) {
          label[u] = label[s];
          stack.push_back(u);
        }
    }
  }
  return comps;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Rank of a dense matrix over GF(p) (rows of residues).
inline int dense_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (((m[r][c] % p) + p) % p) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t f = inv(((m[rank][c] % p) + p) % p);
    for (auto& x : m[rank]) x = ((x % p + p) % p) * f % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::int64_t t = ((m[r][c] % p) + p) % p;
      if (!t) continue;
      for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - t * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Graded Betti numbers of S/I from the Taylor complex: in each multidegree a, the
/// subsets T of generators with lcm(T) = a form a complex whose differential keeps only
/// the terms with lcm(T \ t) = a. Returns (i, j) -> beta.
inline std::map<std::pair<int, int>, std::int64_t> taylor_betti(const std::vector<std::uint64_t>& gens,
                                                              std::int64_t p) {
  const int r = static_cast<int>(gens.size());
  std::map<std::uint64_t, std::vector<std::uint32_t>> by_lcm;
  for (std::uint32_t t = 0; t < (1U << r); ++t) {
    std::uint64_t l = 0;
    for (int k = 0; k < r; ++k)
      if ((t >> k) & 1) l |= gens[k];
    by_lcm[l].push_back(t);
  }
  std::map<std::pair<int, int>, std::int64_t> betti;
  for (const auto& [lcm, subsets] : by_lcm) {
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (auto t : subsets) by_size[__builtin_popcount(t)].push_back(t);
    auto rank_of = [&](int i) -> int {  // d_i : C_i -> C_{i-1}
      if (i <= 0 || !by_size.count(i) || !by_size.count(i - 1)) return 0;
      const auto& src = by_size[i];
      const auto& dst = by_size[i - 1];
      std::vector<std::vector<std::int64_t>> m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
      for (std::size_t c = 0; c < src.size(); ++c) {
        int pos = 0;
        for (int k = 0; k < r; ++k) {
          if (!((src[c] >> k) & 1)) continue;
          const std::uint32_t face = src[c] & ~(1U << k);
          auto it = std::find(dst.begin(), dst.end(), face);
          if (it != dst.end()) m[it - dst.begin()][c] = (pos % 2 == 0) ? 1 : p - 1;
          ++pos;
        }
      }
      return dense_rank(m, p);
    };
    const int j = __builtin_popcountll(lcm);
    for (const auto& [i, list] : by_size) {
      const std::int64_t h = static_cast<std::int64_t>(list.size()) - rank_of(i) - rank_of(i + 1);
      if (h) betti[{i, j}] += h;
    }
  }
  return betti;
}

}  // namespace oracle
