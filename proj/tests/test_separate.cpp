#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <htdecomp/separation.hpp>

#include "test_support.hpp"

using namespace htdecomp;
using namespace testsupport;

TEST_CASE("separator spanning everything leaves only covered edges") {
  Hypergraph h = h_cyc4();
  // {e1, e3} spans all four vertices, so e2 and e4 are covered
  auto res = separate(h.make_edge_set({"e2", "e3", "e4"}),
                      h.make_edge_set({"e1", "e3"}), h);
  CHECK(res.components.empty());
  CHECK(res.covered_edges == h.make_edge_set({"e2", "e4"}));
}

TEST_CASE("cutting one cycle edge keeps the rest connected") {
  Hypergraph h = h_cyc4();
  auto res = separate(h.make_edge_set({"e2", "e3", "e4"}),
                      h.make_edge_set({"e1", "e2"}), h);
  REQUIRE(res.components.size() == 1);
  // e3 and e4 stay glued through d, which e1/e2 do not touch
  CHECK(res.components[0] == h.make_edge_set({"e3", "e4"}));
  CHECK(res.covered_edges.empty());
}

TEST_CASE("an empty separator yields the connected groups of the input") {
  Hypergraph h = make_h({{"e1", {"a", "b"}},
                         {"e2", {"b", "c"}},
                         {"e3", {"x", "y"}},
                         {"e4", {"y", "z"}}});
  auto res = separate(h.all_edges(), h.empty_edge_set(), h);
  REQUIRE(res.components.size() == 2);
  CHECK(res.components[0] == h.make_edge_set({"e1", "e2"}));
  CHECK(res.components[1] == h.make_edge_set({"e3", "e4"}));
  CHECK(res.covered_edges.empty());
}

TEST_CASE("components come out ordered by their smallest edge index") {
  Hypergraph h = make_h({{"e1", {"m", "n"}},
                         {"e2", {"p", "q"}},
                         {"e3", {"n", "o"}},
                         {"e4", {"q", "r"}}});
  auto res = separate(h.all_edges(), h.empty_edge_set(), h);
  REQUIRE(res.components.size() == 2);
  CHECK(res.components[0] == h.make_edge_set({"e1", "e3"}));
  CHECK(res.components[1] == h.make_edge_set({"e2", "e4"}));
}

TEST_CASE("separator members never appear in the result") {
  Hypergraph h = h_tri();
  auto res = separate(h.all_edges(), h.make_edge_set({"e2"}), h);
  REQUIRE(res.components.size() == 1);
  CHECK(res.components[0] == h.make_edge_set({"e1", "e3"}));
  CHECK_FALSE(res.covered_edges.contains(*h.edge_index("e2")));
}

TEST_CASE("separator edges outside the input set still cut by their span") {
  Hypergraph h = h_chain();
  // separate only {e1, e3} using e2 as the knife: b and c disappear
  auto res = separate(h.make_edge_set({"e1", "e3"}), h.make_edge_set({"e2"}), h);
  REQUIRE(res.components.size() == 2);
  CHECK(res.components[0] == h.make_edge_set({"e1"}));
  CHECK(res.components[1] == h.make_edge_set({"e3"}));
}

TEST_CASE("matches the union-find oracle on random inputs") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 1000; ++trial) {
    Hypergraph h = make_h(random_edges(rng, 6, 4, 8));
    EdgeSet edges = random_edge_subset(rng, h, 0.7);
    EdgeSet separator = random_edge_subset(rng, h, 0.3);
    auto got = separate(edges, separator, h);
    auto want = oracle_separate(edges, separator, h);
    REQUIRE(separation_matches(got, want));
  }
}

TEST_CASE("partition invariant: every input edge lands in exactly one bucket") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph h = make_h(random_edges(rng, 7, 3, 9));
    EdgeSet edges = random_edge_subset(rng, h, 0.8);
    EdgeSet separator = random_edge_subset(rng, h, 0.25);
    auto res = separate(edges, separator, h);
    EdgeSet rebuilt = res.covered_edges | (edges & separator);
    for (const auto& comp : res.components) {
      REQUIRE((comp & rebuilt).empty());
      rebuilt |= comp;
    }
    REQUIRE(rebuilt == edges);
  }
}
