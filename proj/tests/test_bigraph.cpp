#include <doctest.h>

#include <random>

#include "itriple/bigraph.hpp"
#include "itriple/errors.hpp"
#include "itriple/realize.hpp"

using namespace itriple;

TEST_SUITE("bigraph") {

TEST_CASE("construction and validation") {
  BiGraph single(1, 1, {{0, 0}});
  CHECK(single.edge_count() == 1);
  BiGraph k22(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(k22.edge_count() == 4);
  CHECK_THROWS_AS(BiGraph(2, 2, {{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(BiGraph(2, 2, {{0, 2}}), Error);
  CHECK_THROWS_AS(BiGraph(0, 2, {}), Error);
}

TEST_CASE("neighbors") {
  BiGraph k23 = complete_bipartite(2, 3);
  CHECK(neighbors(k23, Side::eta, 0) == std::vector<std::uint32_t>{0, 1, 2});
  BiGraph path(2, 2, {{0, 0}});
  CHECK(neighbors(path, Side::eta, 1).empty());
  BiGraph hexagon = matching_complement(3); // 6-cycle
  CHECK(neighbors(hexagon, Side::eta, 0) == std::vector<std::uint32_t>{1, 2});
  CHECK_THROWS_AS(neighbors(hexagon, Side::kappa, 3), Error);
}

TEST_CASE("complement") {
  CHECK(complement(complete_bipartite(4, 5)).edge_count() == 0);
  CHECK(complement(BiGraph(3, 3, {})) == complete_bipartite(3, 3));
  BiGraph six = complement(perfect_matching(3));
  CHECK(six.edge_count() == 6);
  CHECK(is_biregular(six, 2, 2));
}

TEST_CASE("complement is an involution") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t a = rng() % 5 + 1, b = rng() % 5 + 1;
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < a; ++i)
      for (std::uint32_t j = 0; j < b; ++j)
        if (rng() & 1) edges.emplace_back(i, j);
    BiGraph g(a, b, std::move(edges));
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() ==
          static_cast<std::uint64_t>(a) * b);
  }
}

TEST_CASE("degree profile") {
  auto [de, dk] = degree_profile(complete_bipartite(2, 3));
  CHECK(de == std::vector<std::uint32_t>{3, 3});
  CHECK(dk == std::vector<std::uint32_t>{2, 2, 2});
  auto [ee, ek] = degree_profile(BiGraph(2, 2, {}));
  CHECK(ee == std::vector<std::uint32_t>{0, 0});
  CHECK(ek == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("is_biregular") {
  CHECK(is_biregular(complete_bipartite(3, 4), 4, 3));
  CHECK_FALSE(is_biregular(BiGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}}), 2, 2));
}

TEST_CASE("serialize format is exact") {
  CHECK(serialize(BiGraph(1, 1, {{0, 0}})) == "bipartite 1 1\ne 0 0\n");
  CHECK(serialize(BiGraph(2, 2, {})) == "bipartite 2 2\n");
  CHECK(serialize(BiGraph(2, 2, {{1, 0}, {0, 1}})) == "bipartite 2 2\ne 0 1\ne 1 0\n");
}

TEST_CASE("parse accepts comments and blanks") {
  BiGraph g = parse_bigraph("# coset graph\n\nbipartite 2 2\ne 0 0\n# mid comment\ne 1 1\n");
  CHECK(g == BiGraph(2, 2, {{0, 0}, {1, 1}}));
}

TEST_CASE("parse reports line numbers") {
  try {
    parse_bigraph("bipartite 2 2\ne 0 0\ne 5 0\n");
    FAIL("expected parse error");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_bigraph(""), Error);
  CHECK_THROWS_AS(parse_bigraph("e 0 0\n"), Error);
  CHECK_THROWS_AS(parse_bigraph("bipartite 2\n"), Error);
}

TEST_CASE("serialize/parse round-trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t a = rng() % 6 + 1, b = rng() % 6 + 1;
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < a; ++i)
      for (std::uint32_t j = 0; j < b; ++j)
        if (rng() & 1) edges.emplace_back(i, j);
    BiGraph g(a, b, std::move(edges));
    std::string text = serialize(g);
    CHECK(parse_bigraph(text) == g);
    CHECK(serialize(parse_bigraph(text)) == text);
  }
}

TEST_CASE("transpose") {
  BiGraph g(2, 3, {{0, 0}, {0, 2}, {1, 1}});
  BiGraph t = transpose(g);
  CHECK(t.eta_size() == 3);
  CHECK(t.kappa_size() == 2);
  CHECK(transpose(t) == g);
}

TEST_CASE("to_dot") {
  CHECK(to_dot(BiGraph(1, 1, {})) == "graph bipartite_graph {\n  h0;\n  k0;\n}\n");
  CHECK(to_dot(BiGraph(1, 1, {{0, 0}})) ==
        "graph bipartite_graph {\n  h0;\n  k0;\n  h0 -- k0;\n}\n");
  CHECK(to_dot(complete_bipartite(2, 2)) ==
        "graph bipartite_graph {\n  h0;\n  h1;\n  k0;\n  k1;\n"
        "  h0 -- k0;\n  h0 -- k1;\n  h1 -- k0;\n  h1 -- k1;\n}\n");
}

} // TEST_SUITE
