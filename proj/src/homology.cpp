#include "beilab/homology.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "beilab/errors.hpp"
#include "beilab/initial_ideal.hpp"

namespace beilab {

namespace {

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

std::vector<std::uint64_t> minimal_sets(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> kept;
  for (std::uint64_t s : sets)
    if (std::none_of(kept.begin(), kept.end(), [s](std::uint64_t k) { return (k & ~s) == 0; })) kept.push_back(s);
  return kept;
}

void check_prime(int p) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  for (; e; e >>= 1, base = base * base % p)
    if (e & 1) result = result * base % p;
  return result;
}

std::int64_t rank_gf2(const std::vector<std::uint64_t>& faces, const std::vector<std::uint64_t>& below) {
  const std::size_t rows = below.size();
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot_cols(rows);
  std::int64_t rank = 0;
  std::vector<std::uint64_t> col(words);
  for (std::uint64_t face : faces) {
    std::fill(col.begin(), col.end(), 0);
    for (std::uint64_t rest = face; rest; rest &= rest - 1) {
      const std::uint64_t facet = face & ~(rest & (~rest + 1));
      const auto r = static_cast<std::size_t>(std::lower_bound(below.begin(), below.end(), facet) - below.begin());
      col[r / 64] ^= std::uint64_t{1} << (r % 64);
    }
    for (std::size_t w = 0; w < words;) {
      if (col[w] == 0) {
        ++w;
        continue;
      }
      const std::size_t r = w * 64 + std::countr_zero(col[w]);
      auto& pivot = pivot_cols[r];
      if (pivot.empty()) {
        pivot = col;
        ++rank;
        break;
      }
      for (std::size_t k = w; k < words; ++k) col[k] ^= pivot[k];
    }
  }
  return rank;
}

std::int64_t rank_gfp(const std::vector<std::uint64_t>& faces, const std::vector<std::uint64_t>& below,
                      std::uint64_t p) {
  const std::size_t rows = below.size();
  std::vector<std::vector<std::uint64_t>> pivot_cols(rows);
  std::int64_t rank = 0;
  std::vector<std::uint64_t> col(rows);
  for (std::uint64_t face : faces) {
    std::fill(col.begin(), col.end(), 0);
    int position = 0;
    for (std::uint64_t rest = face; rest; rest &= rest - 1, ++position) {
      const std::uint64_t facet = face & ~(rest & (~rest + 1));
      const auto r = static_cast<std::size_t>(std::lower_bound(below.begin(), below.end(), facet) - below.begin());
      col[r] = position % 2 == 0 ? 1 : p - 1;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (col[r] == 0) continue;
      auto& pivot = pivot_cols[r];
      if (pivot.empty()) {
        const std::uint64_t inv = inverse_mod(col[r], p);
        for (std::size_t k = r; k < rows; ++k) col[k] = col[k] * inv % p;
        pivot = col;
        ++rank;
        break;
      }
      const std::uint64_t factor = col[r];
      for (std::size_t k = r; k < rows; ++k) col[k] = (col[k] + (p - factor) * pivot[k]) % p;
    }
  }
  return rank;
}

// Subsets whose induced complex is a cone contribute nothing: a vertex of `s` lying in
// no generator inside `s` is a cone point. So only unions of generator supports matter.
bool is_union_of_generators(std::uint64_t s, const std::vector<std::uint64_t>& nonfaces) {
  std::uint64_t covered = 0;
  for (std::uint64_t g : nonfaces)
    if ((g & ~s) == 0) covered |= g;
  return covered == s;
}

std::uint64_t checked_support(const MonomialIdeal& ideal) {
  const std::uint64_t support = ideal.effective_support();
  if (std::popcount(support) > kMaxHomologyVertices)
    throw SizeError("effective support of " + std::to_string(std::popcount(support)) +
                    " variables exceeds the limit of " + std::to_string(kMaxHomologyVertices));
  return support;
}

class SubcomplexHomology {
 public:
  SubcomplexHomology(const SimplicialComplex& k, std::uint64_t within, int p)
      : levels_(k.faces_by_size(within)), p_(p), ranks_(levels_.size() + 1, -1) {}

  int top_size() const { return static_cast<int>(levels_.size()) - 1; }

  // dim H~_{size-1}
  std::int64_t dim(int size) {
    return static_cast<std::int64_t>(levels_[size].size()) - rank(size) - rank(size + 1);
  }

  std::vector<std::int64_t> all_dims() {
    std::vector<std::int64_t> out;
    for (int s = 0; s <= top_size(); ++s) out.push_back(dim(s));
    return out;
  }

 private:
  std::int64_t rank(int size) {
    if (size == 0 || size > top_size()) return 0;
    auto& r = ranks_[size];
    if (r < 0) r = boundary_rank(levels_[size], levels_[size - 1], p_);
    return r;
  }

  std::vector<std::vector<std::uint64_t>> levels_;
  int p_;
  std::vector<std::int64_t> ranks_;
};

}  // namespace

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<std::uint64_t> minimal_nonfaces)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0 || num_vertices > 64) throw SizeError("simplicial complexes support at most 64 vertices");
  for (std::uint64_t s : minimal_nonfaces)
    if (s & ~low_mask(num_vertices)) throw PreconditionError("non-face uses a vertex outside the complex");
  nonfaces_ = minimal_sets(std::move(minimal_nonfaces));
}

SimplicialComplex SimplicialComplex::stanley_reisner(const MonomialIdeal& ideal) {
  std::vector<std::uint64_t> supports;
  for (Monomial g : ideal.generators()) supports.push_back(g.support());
  return SimplicialComplex(ideal.num_vars(), std::move(supports));
}

SimplicialComplex SimplicialComplex::void_complex(int num_vertices) { return SimplicialComplex(num_vertices, {0}); }

SimplicialComplex SimplicialComplex::from_facets(int num_vertices, const std::vector<std::uint64_t>& facets) {
  if (num_vertices > kMaxHomologyVertices) throw SizeError("from_facets supports at most 20 vertices");
  if (facets.empty()) return void_complex(num_vertices);
  auto is_face = [&](std::uint64_t s) {
    return std::any_of(facets.begin(), facets.end(), [s](std::uint64_t f) { return (s & ~f) == 0; });
  };
  std::vector<std::uint64_t> nonfaces;
  for (std::uint64_t s = 1; s <= low_mask(num_vertices); ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::uint64_t rest = s; rest && minimal; rest &= rest - 1)
      minimal = is_face(s & ~(rest & (~rest + 1)));
    if (minimal) nonfaces.push_back(s);
  }
  return SimplicialComplex(num_vertices, std::move(nonfaces));
}

bool SimplicialComplex::is_void() const { return !nonfaces_.empty() && nonfaces_.front() == 0; }

bool SimplicialComplex::is_face(std::uint64_t s) const {
  return std::none_of(nonfaces_.begin(), nonfaces_.end(), [s](std::uint64_t n) { return (n & ~s) == 0; });
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_size(std::uint64_t within) const {
  if (is_void()) return {};
  within &= low_mask(num_vertices_);
  // non-faces inside `within`, bucketed by their highest vertex
  std::vector<std::vector<std::uint64_t>> by_top(64);
  for (std::uint64_t n : nonfaces_)
    if ((n & ~within) == 0) by_top[63 - std::countl_zero(n)].push_back(n);

  std::vector<std::vector<std::uint64_t>> levels{{0}};
  while (true) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : levels.back()) {
      const int top = f == 0 ? -1 : 63 - std::countl_zero(f);
      for (std::uint64_t rest = within & ~low_mask(top + 1); rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::uint64_t g = f | (std::uint64_t{1} << v);
        const auto& blockers = by_top[v];
        if (std::none_of(blockers.begin(), blockers.end(), [g](std::uint64_t n) { return (n & ~g) == 0; }))
          next.push_back(g);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t boundary_rank(const std::vector<std::uint64_t>& faces, const std::vector<std::uint64_t>& facets_below,
                           int p) {
  return p == 2 ? rank_gf2(faces, facets_below) : rank_gfp(faces, facets_below, static_cast<std::uint64_t>(p));
}

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& k, std::uint64_t within, int p) {
  check_prime(p);
  if (std::popcount(within & low_mask(k.num_vertices())) > kMaxHomologyVertices)
    throw SizeError("homology is limited to 20 vertices");
  if (k.is_void()) return {0};
  return SubcomplexHomology(k, within, p).all_dims();
}

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& k, int p) {
  return reduced_homology_dims(k, low_mask(k.num_vertices()), p);
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t value) {
  if (value != 0) entries_[{i, j}] += value;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [ij, v] : entries_)
    if (v != 0) reg = std::max(reg, ij.second - ij.first);
  return reg;
}

BettiTable betti_table(const MonomialIdeal& ideal, int p) {
  check_prime(p);
  const std::uint64_t support = checked_support(ideal);
  const auto complex = SimplicialComplex::stanley_reisner(ideal);
  BettiTable table(p);
  // submasks of the support, the empty set included
  for (std::uint64_t s = support;; s = (s - 1) & support) {
    if (is_union_of_generators(s, complex.minimal_nonfaces())) {
      const int j = std::popcount(s);
      const auto dims = SubcomplexHomology(complex, s, p).all_dims();
      for (int k = 0; k < static_cast<int>(dims.size()); ++k) table.add(j - k, j, dims[k]);  // d = k - 1
    }
    if (s == 0) break;
  }
  return table;
}

int regularity(const MonomialIdeal& ideal, int p) {
  check_prime(p);
  const std::uint64_t support = checked_support(ideal);
  const auto complex = SimplicialComplex::stanley_reisner(ideal);
  int best = 0;
  for (std::uint64_t s = support; s != 0; s = (s - 1) & support) {
    // s is a non-face here, so faces have at most |s| - 1 vertices and d + 1 <= |s| - 1
    if (std::popcount(s) - 1 <= best) continue;
    if (!is_union_of_generators(s, complex.minimal_nonfaces())) continue;
    SubcomplexHomology h(complex, s, p);
    for (int size = h.top_size(); size > best; --size)
      if (h.dim(size) != 0) {
        best = size;
        break;
      }
  }
  return best;
}

int reg_binomial_edge(const Graph& g, int p) {
  if (g.order() > kMaxRegularityOrder)
    throw SizeError("regularity needs 2n <= 20 variables; graph has n = " + std::to_string(g.order()));
  return regularity(initial_ideal(g), p);
}

}  // namespace beilab
