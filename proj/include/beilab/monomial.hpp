#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace beilab {

/// Squarefree monomial as a variable bitmask. For binomial edge ideals on n vertices,
/// bit i is x_{i+1} (i < n) and bit n+j is y_{j+1}.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t support) : support_(support) {}

  constexpr std::uint64_t support() const { return support_; }
  int degree() const { return std::popcount(support_); }
  constexpr bool divides(Monomial other) const { return (support_ & ~other.support_) == 0; }

  friend constexpr Monomial operator*(Monomial a, Monomial b) { return Monomial(a.support_ | b.support_); }
  friend bool operator==(Monomial, Monomial) = default;
  friend auto operator<=>(Monomial, Monomial) = default;

 private:
  std::uint64_t support_ = 0;
};

inline constexpr Monomial x_var([[maybe_unused]] int n, int i) { return Monomial(std::uint64_t{1} << i); }
inline constexpr Monomial y_var(int n, int j) { return Monomial(std::uint64_t{1} << (n + j)); }

/// "x1*y2" given n vertices (0-based bit i -> x_{i+1}, bit n+j -> y_{j+1}).
std::string to_string(Monomial m, int n);

/// Squarefree monomial ideal with a minimal, canonically sorted generator list.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes and sorts `generators`. Zero monomials (the unit) are rejected.
  MonomialIdeal(int num_vars, std::vector<Monomial> generators);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  /// Union of the generator supports.
  std::uint64_t effective_support() const;

  /// (I + J) in a common ambient.
  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Monomial> gens_;
};

/// Drop generators divisible by another; sort by (degree, support).
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// "(x1*y2, x2*y3)" for ideals in the 2n variables of a graph on n vertices.
std::string to_string(const MonomialIdeal& ideal, int n);

}  // namespace beilab
