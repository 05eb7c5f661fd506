#pragma once

#include <vector>

#include "beilab/graph.hpp"
#include "beilab/monomial.hpp"

namespace beilab {

/// Induced path i = v[0], ..., v[l] = j with i < j whose interior vertices are all < i or > j.
struct AdmissiblePath {
  std::vector<int> vertices;

  int first() const { return vertices.front(); }
  int last() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const AdmissiblePath&, const AdmissiblePath&) = default;
};

/// Checks the admissible-path conditions against `g` (adjacency, no chords, interior labels).
bool is_admissible(const Graph& g, const AdmissiblePath& p);

/// Every admissible path of `g` under its own labeling, single edges included.
/// Sorted by (first, last, vertex sequence).
std::vector<AdmissiblePath> admissible_paths(const Graph& g);

/// u_P x_i y_j with u_P = prod_{interior v > j} x_v * prod_{interior v < i} y_v.
Monomial path_leading_monomial(const AdmissiblePath& p, int n);

/// Initial ideal of J_G for lex x_1 > ... > x_n > y_1 > ... > y_n, in 2n variables.
MonomialIdeal initial_ideal(const Graph& g);

}  // namespace beilab
