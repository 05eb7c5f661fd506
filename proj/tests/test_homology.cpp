#include <random>

#include "beilab/canonical.hpp"
#include "beilab/errors.hpp"
#include "beilab/graph.hpp"
#include "beilab/homology.hpp"
#include "beilab/initial_ideal.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace beilab;

namespace {

std::uint64_t bits(std::initializer_list<int> vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << v;
  return m;
}

std::vector<std::uint64_t> rp2_facets() {
  std::vector<std::uint64_t> out;
  for (auto t : std::vector<std::array<int, 3>>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                               {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}})
    out.push_back(bits({t[0] - 1, t[1] - 1, t[2] - 1}));
  return out;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int vars, int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << vars) - 1);
  std::vector<Monomial> gens;
  const int k = count(rng);
  for (int t = 0; t < k; ++t) gens.emplace_back(mask(rng));
  return MonomialIdeal(vars, gens);
}

}  // namespace

TEST_CASE("reduced homology of basic complexes") {
  using V = std::vector<std::int64_t>;
  const auto hollow = SimplicialComplex(3, {bits({0, 1, 2})});
  CHECK(reduced_homology_dims(hollow, 2) == V{0, 0, 1});
  CHECK(reduced_homology_dims(hollow, 3) == V{0, 0, 1});
  CHECK(reduced_homology_dims(SimplicialComplex(2, {bits({0, 1})}), 2) == V{0, 1});
  for (int k = 1; k <= 6; ++k) {
    const auto simplex = SimplicialComplex(k, {});
    CHECK(reduced_homology_dims(simplex, 2) == V(k + 1, 0));
    CHECK(reduced_homology_dims(simplex, 5) == V(k + 1, 0));
  }
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3), 2) == V{0});
  CHECK(reduced_homology_dims(SimplicialComplex(2, {bits({0}), bits({1})}), 2) == V{1});
  CHECK(reduced_homology_dims(SimplicialComplex(0, {}), 2) == V{1});
  CHECK_THROWS_AS(reduced_homology_dims(hollow, 4), PreconditionError);
  CHECK_THROWS_AS(reduced_homology_dims(SimplicialComplex(21, {}), 2), SizeError);
}

TEST_CASE("projective plane homology depends on the characteristic") {
  const auto rp2 = SimplicialComplex::from_facets(6, rp2_facets());
  using V = std::vector<std::int64_t>;
  CHECK(reduced_homology_dims(rp2, 2) == V{0, 0, 1, 1});
  CHECK(reduced_homology_dims(rp2, 3) == V{0, 0, 0, 0});
  CHECK(reduced_homology_dims(rp2, 7) == V{0, 0, 0, 0});
}

TEST_CASE("boundary ranks agree with dense elimination") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 5;
    std::vector<std::uint64_t> facets;
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 1);
    for (int t = 0; t < 4; ++t) facets.push_back(mask(rng));
    const auto k = SimplicialComplex::from_facets(n, facets);
    const auto levels = k.faces_by_size(~std::uint64_t{0});
    for (int p : {2, 3, 5})
      for (std::size_t s = 1; s < levels.size(); ++s) {
        const auto& src = levels[s];
        const auto& dst = levels[s - 1];
        std::vector<std::vector<std::int64_t>> m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
        for (std::size_t c = 0; c < src.size(); ++c) {
          int pos = 0;
          for (int v = 0; v < n; ++v) {
            if (!((src[c] >> v) & 1)) continue;
            auto r = std::find(dst.begin(), dst.end(), src[c] & ~(std::uint64_t{1} << v)) - dst.begin();
            m[r][c] = pos++ % 2 == 0 ? 1 : -1;
          }
        }
        CHECK(boundary_rank(src, dst, p) == oracle::dense_rank(m, p));
      }
  }
}

TEST_CASE("Betti tables of small ideals") {
  const MonomialIdeal principal(4, {x_var(2, 0) * y_var(2, 1)});
  const auto t1 = betti_table(principal);
  CHECK(t1.at(0, 0) == 1);
  CHECK(t1.at(1, 2) == 1);
  CHECK(t1.entries().size() == 2);
  CHECK(t1.regularity() == 1);

  const auto t2 = betti_table(initial_ideal(families::path(3)));
  CHECK(t2.at(0, 0) == 1);
  CHECK(t2.at(1, 2) == 2);
  CHECK(t2.at(2, 4) == 1);
  CHECK(t2.entries().size() == 3);
  CHECK(t2.regularity() == 2);

  const auto zero = betti_table(MonomialIdeal(6, {}));
  CHECK(zero.entries().size() == 1);
  CHECK(zero.at(0, 0) == 1);
  CHECK(regularity(MonomialIdeal(6, {})) == 0);
}

TEST_CASE("Betti tables match the Taylor complex") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ideal = random_ideal(rng, 2 + trial % 7, 4);
    std::vector<std::uint64_t> gens;
    for (Monomial g : ideal.generators()) gens.push_back(g.support());
    for (int p : {2, 3}) {
      const auto table = betti_table(ideal, p);
      CHECK(table.entries() == oracle::taylor_betti(gens, p));
      CHECK(regularity(ideal, p) == table.regularity());
    }
  }
}

TEST_CASE("complete intersections have regularity sum(d_i - 1)") {
  // every multiset of k <= 4 degrees in 1..3 on disjoint variable blocks
  std::vector<int> degs;
  std::function<void(int)> rec = [&](int min_d) {
    if (!degs.empty()) {
      std::vector<Monomial> gens;
      int next = 0, expected = 0;
      for (int d : degs) {
        std::uint64_t m = 0;
        for (int t = 0; t < d; ++t) m |= std::uint64_t{1} << next++;
        gens.emplace_back(m);
        expected += d - 1;
      }
      const MonomialIdeal ideal(next, gens);
      CHECK(regularity(ideal) == expected);
      CHECK(betti_table(ideal).regularity() == expected);
    }
    if (degs.size() == 4) return;
    for (int d = min_d; d <= 3; ++d) {
      degs.push_back(d);
      rec(d);
      degs.pop_back();
    }
  };
  rec(1);
}

TEST_CASE("regularity of binomial edge ideals of named graphs") {
  CHECK(reg_binomial_edge(families::net()) == 4);
  for (int m = 3; m <= 6; ++m) CHECK(reg_binomial_edge(families::star(m)) == 2);
  for (int n = 2; n <= 6; ++n) CHECK(reg_binomial_edge(families::complete(n)) == 1);
  for (int n = 2; n <= 8; ++n) CHECK(reg_binomial_edge(families::path(n)) == n - 1);
  CHECK(reg_binomial_edge(Graph(4)) == 0);
  CHECK(reg_binomial_edge(Graph(1)) == 0);
  CHECK_THROWS_AS(reg_binomial_edge(families::path(11)), SizeError);
  CHECK_THROWS_AS(reg_binomial_edge(families::net(), 4), PreconditionError);
}

TEST_CASE("regularity is bounded by n - 1 and does not depend on the labeling") {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int reg = reg_binomial_edge(g);
      CHECK(reg <= n - 1);
      CHECK(reg >= 1);
      if (n <= 5)
        for (int t = 0; t < 3; ++t) CHECK(reg_binomial_edge(relabel(g, oracle::random_permutation(n, rng))) == reg);
    }
}

TEST_CASE("regularity is additive over disjoint unions") {
  std::vector<Graph> small;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) small.push_back(g);
  for (const Graph& a : small)
    for (const Graph& b : small) {
      if (a.order() + b.order() > 7) continue;
      CHECK(reg_binomial_edge(disjoint_union(a, b)) == reg_binomial_edge(a) + reg_binomial_edge(b));
    }
}

TEST_CASE("characteristic 2 and 3 agree on small graphs") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) CHECK(reg_binomial_edge(g, 2) == reg_binomial_edge(g, 3));
}
