#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "beilab/graph.hpp"
#include "beilab/monomial.hpp"

namespace beilab {

inline constexpr int kMaxHomologyVertices = 20;

/// A simplicial complex given by its minimal non-faces. A set is a face iff it contains
/// no minimal non-face. The void complex (no faces at all) has the empty set as a non-face.
class SimplicialComplex {
 public:
  SimplicialComplex(int num_vertices, std::vector<std::uint64_t> minimal_nonfaces);

  /// Stanley-Reisner complex of a squarefree monomial ideal.
  static SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);
  static SimplicialComplex void_complex(int num_vertices);
  /// Complex generated by the given facets.
  static SimplicialComplex from_facets(int num_vertices, const std::vector<std::uint64_t>& facets);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::uint64_t>& minimal_nonfaces() const { return nonfaces_; }
  bool is_void() const;
  bool is_face(std::uint64_t s) const;

  /// Faces of the induced subcomplex on `within`, grouped by cardinality and sorted.
  std::vector<std::vector<std::uint64_t>> faces_by_size(std::uint64_t within) const;

 private:
  int num_vertices_;
  std::vector<std::uint64_t> nonfaces_;
};

bool is_prime(std::int64_t p);

/// dim of reduced homology over GF(p); entry k is degree k - 1.
/// The void complex gives {0}; the complex {empty set} gives {1}.
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& k, int p);
/// Same for the induced subcomplex on `within`.
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& k, std::uint64_t within, int p);

/// Rank over GF(p) of the simplicial boundary map from faces of size `size` to faces of size - 1.
std::int64_t boundary_rank(const std::vector<std::uint64_t>& faces, const std::vector<std::uint64_t>& facets_below,
                           int p);

/// Graded Betti numbers of R/I with beta(0,0) = 1.
class BettiTable {
 public:
  explicit BettiTable(int prime) : prime_(prime) {}

  int prime() const { return prime_; }
  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t value);
  /// max{ j - i : beta(i,j) != 0 }
  int regularity() const;
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int prime_;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Hochster's formula: beta(i, j) = sum over |s| = j of dim H~_{j-i-1}(Delta|_s).
/// Only subsets of the effective support (at most 20 variables) are visited.
BettiTable betti_table(const MonomialIdeal& ideal, int p = 2);

/// reg(R/I) without building the whole table.
int regularity(const MonomialIdeal& ideal, int p = 2);

inline constexpr int kMaxRegularityOrder = 10;

/// reg(R/J_G) computed as reg(R/in(J_G)). Requires n <= 10.
int reg_binomial_edge(const Graph& g, int p = 2);

}  // namespace beilab
