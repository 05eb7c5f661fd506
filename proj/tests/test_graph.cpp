#include <random>

#include "beilab/canonical.hpp"
#include "beilab/errors.hpp"
#include "beilab/graph.hpp"
#include "beilab/graph_io.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace beilab;

namespace {

// 1-based edge list helper
Graph g1(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
  return g;
}

VertexSet vs1(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v - 1);
  return s;
}

}  // namespace

TEST_CASE("graph6 decoding of hand-encoded strings") {
  CHECK(parse_graph6("A_") == families::complete(2));
  CHECK(parse_graph6("Bw") == families::complete(3));
  CHECK(parse_graph6("B?") == Graph(3));
  CHECK(parse_graph6(">>graph6<<Bw\n") == families::complete(3));
  CHECK(emit_graph6(families::complete(3)) == "Bw");
  CHECK(emit_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 errors name the byte offset") {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 999;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of(" ") == 0);            // header below 63
  CHECK(offset_of("?") == 0);            // zero vertices
  CHECK(offset_of("A") == 1);            // missing data byte
  CHECK(offset_of("A__") == 2);          // one byte too many
  CHECK(offset_of("A`") == 1);           // padding bit set (value 33 = 100001)
  CHECK(offset_of("C\x20") == 1);        // data byte below 63
  CHECK(offset_of("~?@") == 0);          // long form header
  CHECK(offset_of("_") == 0);            // n = 32 exceeds the cap
}

TEST_CASE("edge list input") {
  const Graph net = parse_edge_list("6; 1 2; 2 3; 3 4; 2 5; 3 5; 5 6");
  CHECK(net == families::net());
  CHECK(parse_graph("6; 1 2; 2 3; 3 4; 2 5; 3 5; 5 6") == net);
  CHECK(parse_graph("  Bw  ") == families::complete(3));
  CHECK(parse_edge_list(emit_edge_list(net)) == net);
  CHECK(parse_edge_list("3;") == Graph(3));
  CHECK_THROWS_AS(parse_edge_list("3; 1 4"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3; 1 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3; 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x; 1 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("40; 1 2"), ParseError);
}

TEST_CASE("graph invariants hold for constructed graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    int degree_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      CHECK_FALSE(g.adjacent(v, v));
      degree_sum += g.degree(v);
      for (int u : g.neighbors(v)) CHECK(g.adjacent(u, v));
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(static_cast<int>(g.edges().size()) == g.edge_count());
  }
}

TEST_CASE("connected components") {
  const Graph net = families::net();
  auto comps = connected_components(net, vs1({5}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == vs1({1, 2, 3, 4}));
  CHECK(comps[1] == vs1({6}));
  CHECK(connected_components(families::complete(5)) == std::vector<VertexSet>{VertexSet::range(5)});
  CHECK(connected_components(families::path(3), vs1({2})) == std::vector<VertexSet>{vs1({1}), vs1({3})});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(8, 0.25, rng);
    const auto removed = static_cast<VertexMask>(rng() & 0xff);
    auto expected = oracle::naive_components(g, removed);
    auto got = connected_components(g, VertexSet(removed));
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      VertexSet e;
      for (int v : expected[k]) e.insert(v);
      CHECK(got[k] == e);
    }
  }
}

TEST_CASE("simplicial vertices and iv") {
  const Graph net = families::net();
  CHECK(is_simplicial(net, 0));
  CHECK_FALSE(is_simplicial(net, 4));
  for (int v = 0; v < 5; ++v) CHECK(is_simplicial(families::complete(5), v));
  CHECK(iv(families::complete(5)) == 0);
  CHECK(iv(net) == 3);
  CHECK(iv(families::star(3)) == 1);
  // additive over components
  CHECK(iv(disjoint_union(net, families::star(3))) == 4);
  CHECK(is_simplicial(Graph(1), 0));
}

TEST_CASE("stars") {
  const auto st = star(families::net(), 4);
  CHECK(st.edges() == std::vector<Edge>{{1, 4}, {2, 4}, {4, 5}});
  CHECK(st.vertex_support() == vs1({2, 3, 5, 6}));
  CHECK(star(families::star(4), 0).edge_count() == 4);
  CHECK(star(families::path(3), 1).edge_count() == 2);
  CHECK_THROWS_AS(star(families::path(3), 0), PreconditionError);
  CHECK_THROWS_AS(star(Graph(1), 0), PreconditionError);
}

TEST_CASE("ohtani operations") {
  const Graph net = families::net();
  const Graph sat = ohtani_saturate(net, 4);
  CHECK(sat.edge_count() == net.edge_count() + 2);
  CHECK(sat.adjacent(1, 5));
  CHECK(sat.adjacent(2, 5));
  CHECK(ohtani_saturate(families::complete(5), 2) == families::complete(5));

  const auto del = ohtani_delete(net, 4);
  CHECK(del.old_to_new == std::vector<int>{0, 1, 2, 3, -1, 4});
  CHECK(del.graph == disjoint_union(families::path(4), Graph(1)));
}

TEST_CASE("iv strictly drops under the three ohtani graphs") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int v = 0; v < n; ++v) {
        if (is_simplicial(g, v)) continue;
        const Graph sat = ohtani_saturate(g, v);
        CHECK(iv(ohtani_delete(g, v).graph) < iv(g));
        CHECK(iv(sat) < iv(g));
        CHECK(iv(ohtani_delete(sat, v).graph) < iv(g));
        CHECK(is_simplicial(sat, v));
      }
}

TEST_CASE("saturating at a simplicial vertex keeps it simplicial") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int v = 0; v < n; ++v)
        if (is_simplicial(g, v)) CHECK(is_simplicial(ohtani_saturate(g, v), v));
}

TEST_CASE("canonical labeling agrees with exhaustive permutation search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = oracle::random_graph(n, trial % 2 ? 0.3 : 0.7, rng);
    const auto lab = canonical_labeling(g);
    CHECK(oracle::triangle_bits(lab.graph) == oracle::naive_canonical_bits(g));
    CHECK(relabel(g, lab.perm) == lab.graph);
    const Graph shuffled = relabel(g, oracle::random_permutation(n, rng));
    CHECK(canonical_form(shuffled) == lab.graph);
  }
  // highly symmetric inputs stay fast through twin pruning
  CHECK(canonical_form(families::complete(20)) == families::complete(20));
  CHECK(canonical_form(Graph(25)) == Graph(25));
}

TEST_CASE("connected graph counts match brute-force enumeration") {
  // oracle: every labeled graph, connectivity by DFS, classes by n! minimization
  const int expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    CHECK(oracle::count_connected_classes(n) == expected[n]);
    CHECK(static_cast<int>(enumerate_connected_graphs(n).size()) == expected[n]);
  }
  // published counts beyond the brute-force range
  CHECK(enumerate_connected_graphs(7).size() == 853);
  CHECK(enumerate_connected_graphs(8).size() == 11117);
  CHECK_THROWS_AS(enumerate_connected_graphs(0), SizeError);
  CHECK_THROWS_AS(enumerate_connected_graphs(9), SizeError);
}

TEST_CASE("enumeration output is canonical, connected and round-trips through graph6") {
  for (int n = 1; n <= 8; ++n) {
    const auto graphs = enumerate_connected_graphs(n);
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const Graph& g = graphs[k];
      CHECK(is_connected(g));
      CHECK(parse_graph6(emit_graph6(g)) == g);
      if (n <= 7) CHECK(canonical_form(g) == g);
      if (k) CHECK(triangle_less(graphs[k - 1], g));
    }
  }
}
