#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/io.hpp"
#include "support/fixtures.hpp"

using namespace impactgraph;
using impactgraph::testing::paper_map;
using impactgraph::testing::u;

TEST_CASE("load_map reads the four-node CSV", "[core][io]") {
  const auto map = load_map("0,0,0,0\n0,0,2,8\n-3,9,0,5\n2,0,-1,0\n");
  REQUIRE(map.size() == 4);
  CHECK(map.weight(u(3), u(2)) == 9.0);
  CHECK(map.weight(u(4), u(3)) == -1.0);
  CHECK(map.labels() == std::vector<std::string>{"u1", "u2", "u3", "u4"});
}

TEST_CASE("load_map detects a label header row", "[core][io]") {
  const auto map = load_map("a, b\n0, 1.5\n-2, 0\n");
  CHECK(map.labels() == std::vector<std::string>{"a", "b"});
  CHECK(map.weight(NodeId{0}, NodeId{1}) == 1.5);
}

TEST_CASE("load_map reads the JSON object format", "[core][io]") {
  const auto with_nodes = load_map(R"({"nodes": ["x", "y"], "weights": [[0, 3], [0, 0]]})");
  CHECK(with_nodes.labels() == std::vector<std::string>{"x", "y"});
  const auto without = load_map(R"({"weights": [[0, 0], [-4, 0]]})");
  CHECK(without.labels() == std::vector<std::string>{"u1", "u2"});
  CHECK(without.weight(NodeId{1}, NodeId{0}) == -4.0);
}

TEST_CASE("single node map is valid", "[core]") {
  const auto map = load_map("0\n");
  CHECK(map.size() == 1);
  CHECK(mu(map) == 0.0);
}

TEST_CASE("load_map rejects malformed input", "[core][io]") {
  SECTION("non-square") {
    REQUIRE_THROWS_WITH(load_map("0,1,2,3\n0,0,1,1\n1,1,0,1\n"),
                        Catch::Matchers::ContainsSubstring("non-square"));
  }
  SECTION("non-numeric entry") {
    REQUIRE_THROWS_WITH(load_map("0,1\nx,0\n"), Catch::Matchers::ContainsSubstring("non-numeric"));
    REQUIRE_THROWS_WITH(load_map(R"({"weights": [[0, "1"], [0, 0]]})"),
                        Catch::Matchers::ContainsSubstring("non-numeric"));
  }
  SECTION("duplicate labels") {
    REQUIRE_THROWS_WITH(load_map("a,a\n0,1\n1,0\n"), Catch::Matchers::ContainsSubstring("duplicate"));
  }
  SECTION("nonzero diagonal names the node") {
    REQUIRE_THROWS_WITH(load_map("p,q\n0,1\n1,7\n"), Catch::Matchers::ContainsSubstring("'q'"));
  }
  SECTION("label count mismatch") {
    REQUIRE_THROWS_AS(load_map("a,b,c\n0,1\n1,0\n"), MapError);
  }
  SECTION("non-finite weight") {
    REQUIRE_THROWS_AS(load_map("0,inf\n1,0\n"), MapError);
  }
  SECTION("empty") {
    REQUIRE_THROWS_AS(load_map("\n\n"), MapError);
    REQUIRE_THROWS_AS(load_map(R"({"weights": []})"), MapError);
  }
  SECTION("broken JSON") {
    REQUIRE_THROWS_AS(load_map("{\"weights\": [[0]"), MapError);
  }
}

TEST_CASE("mu is the largest absolute weight", "[core]") {
  CHECK(mu(paper_map()) == 9.0);
  CHECK(mu(CognitiveMap::from_rows({{0, 0}, {0, 0}})) == 0.0);
  CHECK(mu(CognitiveMap::from_rows({{0, 2}, {-7, 0}})) == 7.0);
}

TEST_CASE("mu is permutation invariant and absolutely homogeneous", "[core][property]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> scale(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto map = testing::random_map(rng, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(mu(testing::permuted(map, perm)) == mu(map));

    const double c = scale(rng);
    Matrix<double> w = map.weights();
    for (double& v : w.values()) v *= c;
    CHECK(mu(CognitiveMap(w)) == Catch::Approx(std::abs(c) * mu(map)).epsilon(1e-15));
  }
}

TEST_CASE("serialize/load round-trips bit-exactly in both formats", "[core][io][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto map = testing::random_map(rng, 1 + trial % 6);
    for (auto fmt : {MapFormat::csv, MapFormat::json}) {
      const auto text = serialize(map, fmt);
      const auto back = load_map(text);
      REQUIRE(back == map);
      CHECK(serialize(back, fmt) == text);
    }
  }
}

TEST_CASE("CSV serialization refuses labels it cannot represent", "[core][io]") {
  const auto map = CognitiveMap::from_rows({{0, 1}, {1, 0}}, {"1", "b"});
  CHECK_THROWS_AS(serialize_csv(map), MapError);
  const auto comma = CognitiveMap::from_rows({{0, 1}, {1, 0}}, {"a,b", "c"});
  CHECK_THROWS_AS(serialize_csv(comma), MapError);
}
