#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <random>

#include "impactgraph/scenario_selection.hpp"
#include "support/fixtures.hpp"

using namespace impactgraph;
using Catch::Approx;
using impactgraph::testing::paper_map;
using impactgraph::testing::path_of;
using impactgraph::testing::u;

namespace {

PathScore scored(double force, std::uint64_t speed, std::size_t index = 0) {
  PathScore s;
  s.force = force;
  s.speed = speed;
  s.index = index;
  return s;
}

std::vector<std::pair<double, std::uint64_t>> criteria(const ParetoFrontier& f) {
  std::vector<std::pair<double, std::uint64_t>> out;
  for (const auto& m : f.members) out.emplace_back(m.force, m.speed);
  return out;
}

}  // namespace

TEST_CASE("dominance", "[selection]") {
  CHECK(dominates(scored(2, 1), scored(-0.83, 2)));
  CHECK_FALSE(dominates(scored(-0.83, 2), scored(2, 1)));
  CHECK_FALSE(dominates(scored(6.92, 2), scored(5, 1)));
  CHECK_FALSE(dominates(scored(5, 1), scored(6.92, 2)));
  CHECK_FALSE(dominates(scored(3, 2), scored(3, 2)));
  // magnitude, not sign
  CHECK(dominates(scored(-3, 1), scored(1.34, 2)));
}

TEST_CASE("pareto_frontier", "[selection]") {
  SECTION("single dominant member") {
    const std::vector<PathScore> s{scored(-1.08, 2, 0), scored(0.41, 3, 1), scored(1.66, 2, 2),
                                   scored(0.22, 3, 3)};
    const auto f = pareto_frontier(s);
    REQUIRE(f.members.size() == 1);
    CHECK(f.members[0].force == 1.66);
    CHECK(f.members[0].index == 2);
  }
  SECTION("a stronger and faster scenario dominates by magnitude") {
    const std::vector<PathScore> s{scored(-3, 1), scored(0.27, 3), scored(1.34, 2)};
    const auto f = pareto_frontier(s);
    REQUIRE(f.members.size() == 1);
    CHECK(f.members[0].force == -3);
  }
  SECTION("incomparable pair survives in input order") {
    const std::vector<PathScore> s{scored(6.92, 2, 0), scored(5, 1, 1)};
    CHECK(criteria(pareto_frontier(s)) ==
          std::vector<std::pair<double, std::uint64_t>>{{6.92, 2}, {5, 1}});
  }
  SECTION("identical scores are both kept") {
    const std::vector<PathScore> s{scored(4, 2, 0), scored(4, 2, 1)};
    CHECK(pareto_frontier(s).members.size() == 2);
  }
  SECTION("empty input") {
    CHECK_THROWS_AS(pareto_frontier(std::vector<PathScore>{}), ArgumentError);
  }
}

TEST_CASE("lcm_tiebreak", "[selection]") {
  SECTION("worked example picks the faster scenario") {
    const auto c = lcm_tiebreak(ParetoFrontier{{scored(6.92, 2, 0), scored(5, 1, 1)}});
    CHECK(c.lcm == 2);
    CHECK(c.realizations == std::vector<std::uint64_t>{1, 2});
    CHECK(c.scores[0] == Approx(6.92));
    CHECK(c.scores[1] == Approx(10.0));
    CHECK(c.chosen == 1);
    CHECK(c.full_impact() == 5);
    CHECK(c.full_time() == 1);
  }
  SECTION("singleton") {
    const auto c = lcm_tiebreak(ParetoFrontier{{scored(0.7, 3)}});
    CHECK(c.lcm == 3);
    CHECK(c.realizations == std::vector<std::uint64_t>{1});
    CHECK(c.chosen == 0);
  }
  SECTION("scores use magnitude, the winner keeps its sign") {
    const auto c = lcm_tiebreak(ParetoFrontier{{scored(-3, 1), scored(1.34, 2)}});
    CHECK(c.lcm == 2);
    CHECK(c.scores[0] == 6.0);
    CHECK(c.scores[1] == Approx(1.34));
    CHECK(c.full_impact() == -3);
  }
  SECTION("equal scores prefer smaller speed, then earlier member") {
    const auto by_speed = lcm_tiebreak(ParetoFrontier{{scored(4, 2, 0), scored(2, 1, 1)}});
    CHECK(by_speed.scores[0] == by_speed.scores[1]);
    CHECK(by_speed.chosen == 1);
    const auto by_order = lcm_tiebreak(ParetoFrontier{{scored(4, 2, 0), scored(-4, 2, 1)}});
    CHECK(by_order.chosen == 0);
  }
  SECTION("overflow is detected") {
    // Product of the first 16 primes exceeds 2^64.
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    ParetoFrontier f;
    for (auto p : primes) f.members.push_back(scored(1.0 * static_cast<double>(p), p));
    CHECK_THROWS_AS(lcm_tiebreak(f), ArithmeticOverflow);
    const std::uint64_t big = std::numeric_limits<std::uint64_t>::max() / 2 + 1;  // 2^63
    CHECK_THROWS_AS(lcm_tiebreak(ParetoFrontier{{scored(1, big), scored(1, 3)}}), ArithmeticOverflow);
  }
  SECTION("invalid frontier") {
    CHECK_THROWS_AS(lcm_tiebreak(ParetoFrontier{}), ArgumentError);
    CHECK_THROWS_AS(lcm_tiebreak(ParetoFrontier{{scored(1, 0)}}), ArgumentError);
  }
}

TEST_CASE("select_optimal on the four-node example", "[selection]") {
  const auto map = paper_map();

  const auto c24 = select_optimal(map, u(2), u(4));
  REQUIRE(c24);
  CHECK(c24->full_impact() == 8.0);
  CHECK(c24->full_time() == 1);

  CHECK_FALSE(select_optimal(map, u(1), u(2)));

  const auto c42 = select_optimal(map, u(4), u(2));
  REQUIRE(c42);
  CHECK(c42->winner().path == path_of({4, 3, 2}));
  CHECK(c42->full_impact() == Approx(-1.79).margin(0.01));
  CHECK(c42->full_time() == 2);

  const auto c34 = select_optimal(map, u(3), u(4));
  REQUIRE(c34);
  CHECK(c34->frontier.members.size() == 2);
  CHECK(c34->winner().path == path_of({3, 4}));
}

TEST_CASE("frontier and tie-break invariants on random maps", "[selection][property]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> positive(0.1, 10.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto map = testing::random_map(rng, n);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        const auto a = assess_pair(map, NodeId{s}, NodeId{t});
        if (a.scenarios.empty()) {
          CHECK_FALSE(a.choice);
          continue;
        }
        const auto& f = a.choice->frontier;
        for (const auto& x : f.members)
          for (const auto& y : f.members) CHECK_FALSE(dominates(x, y));
        for (const auto& sc : a.scenarios) {
          CHECK_FALSE(dominates(sc, sc));
          if (a.on_frontier(sc.index)) continue;
          CHECK(std::any_of(f.members.begin(), f.members.end(),
                            [&](const PathScore& m) { return dominates(m, sc); }));
        }
        for (std::size_t k = 0; k < f.members.size(); ++k) {
          CHECK(a.choice->realizations[k] * f.members[k].speed == a.choice->lcm);
          CHECK(a.choice->realizations[k] >= 1);
          CHECK(a.choice->scores[k] <= a.choice->scores[a.choice->chosen]);
        }

        // Shuffled input yields the same frontier set.
        auto shuffled = a.scenarios;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto again = pareto_frontier(shuffled).members;
        std::sort(again.begin(), again.end(),
                  [](const PathScore& l, const PathScore& r) { return l.index < r.index; });
        REQUIRE(again.size() == f.members.size());
        for (std::size_t k = 0; k < again.size(); ++k) CHECK(again[k].index == f.members[k].index);

        // Positive rescaling of every force keeps the argmax.
        const double c = positive(rng);
        ParetoFrontier scaled = f;
        for (auto& m : scaled.members) m.force *= c;
        CHECK(lcm_tiebreak(scaled).chosen == a.choice->chosen);
      }
    }
  }
}

TEST_CASE("dominance is transitive", "[selection][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> f(-3.0, 3.0);
  std::uniform_int_distribution<std::uint64_t> sp(1, 3);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto a = scored(std::round(f(rng)), sp(rng));
    const auto b = scored(std::round(f(rng)), sp(rng));
    const auto c = scored(std::round(f(rng)), sp(rng));
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}
