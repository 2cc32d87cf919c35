#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <htdecomp/parser.hpp>

using namespace htdecomp;

TEST_CASE("plain edge list") {
  Hypergraph h = parse_hypergraph("e1(a,b), e2(b,c), e3(c,a).");
  REQUIRE(h.edge_count() == 3);
  CHECK(h.edge_name(0) == "e1");
  CHECK(h.edge_vertices(2) == h.make_vertex_set({"c", "a"}));
}

TEST_CASE("whitespace and newlines carry no meaning") {
  Hypergraph h = parse_hypergraph("  e1 ( a , b ) ,\n\te2(b,c)\n.\n");
  REQUIRE(h.edge_count() == 2);
  CHECK(h.vertex_count() == 3);
}

TEST_CASE("comments reach to end of line") {
  Hypergraph h = parse_hypergraph(
      "% header comment\n"
      "e1(a, % trailing comment\n"
      "b), e2(b,c). % done\n");
  REQUIRE(h.edge_count() == 2);
  CHECK(h.edge_vertices(0) == h.make_vertex_set({"a", "b"}));
}

TEST_CASE("names may contain letters, digits, underscore and colon") {
  Hypergraph h = parse_hypergraph("r:1(x_2,v3), R2(v3,x_2).");
  CHECK(h.edge_index("r:1") == 0);
  CHECK(h.edge_index("R2") == 1);
  CHECK(h.vertex_index("x_2").has_value());
}

TEST_CASE("a lone period is the empty hypergraph") {
  Hypergraph h = parse_hypergraph(".");
  CHECK(h.edge_count() == 0);
  CHECK(h.vertex_count() == 0);
}

TEST_CASE("missing terminator at end of input") {
  try {
    parse_hypergraph("e1(a,b)");
    FAIL("expected MissingTerminatorError");
  } catch (const MissingTerminatorError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("empty input is missing its terminator") {
  CHECK_THROWS_AS(parse_hypergraph(""), MissingTerminatorError);
  CHECK_THROWS_AS(parse_hypergraph("% just a comment\n"), MissingTerminatorError);
}

TEST_CASE("unexpected character positions are reported") {
  try {
    parse_hypergraph("e1(a,b!");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }

  try {
    parse_hypergraph("e1(a,,b).");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("errors on later lines carry the right line number") {
  try {
    parse_hypergraph("e1(a,b),\ne2(");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("content after the terminator is an error") {
  try {
    parse_hypergraph(". x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_hypergraph("e1(a). e2(b)."), ParseError);
}

TEST_CASE("empty vertex lists parse but fail construction") {
  CHECK_THROWS_AS(parse_hypergraph("e1()."), EmptyEdgeError);
}

TEST_CASE("duplicate edge names surface from the builder") {
  CHECK_THROWS_AS(parse_hypergraph("e1(a,b), e1(c)."), DuplicateEdgeNameError);
}

TEST_CASE("every shipped instance file parses") {
  namespace fs = std::filesystem;
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(HTDECOMP_INSTANCES_DIR)) {
    if (entry.path().extension() != ".hg") continue;
    std::ifstream in(entry.path());
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    Hypergraph h = parse_hypergraph(text.str());
    CHECK(h.edge_count() >= 1);
    ++seen;
  }
  CHECK(seen >= 30);
}
