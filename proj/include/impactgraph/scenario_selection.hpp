#ifndef IMPACTGRAPH_SCENARIO_SELECTION_HPP
#define IMPACTGRAPH_SCENARIO_SELECTION_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "impactgraph/accumulative_impact.hpp"
#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/error.hpp"
#include "impactgraph/paths.hpp"

namespace impactgraph {

struct AnalysisOptions {
  AmplificationParams amplification;
  std::size_t max_paths = kDefaultMaxPaths;
};

/// Pareto dominance over (maximize |C1|, minimize C2), at least one strict.
inline bool dominates(const PathScore& x, const PathScore& y) noexcept {
  const double fx = std::abs(x.force);
  const double fy = std::abs(y.force);
  if (fx < fy || x.speed > y.speed) return false;
  return fx > fy || x.speed < y.speed;
}

struct ParetoFrontier {
  std::vector<PathScore> members;  // enumeration order preserved
};

/// All non-dominated scores, in input order. O(N^2) pairwise comparison.
inline ParetoFrontier pareto_frontier(std::span<const PathScore> scores) {
  if (scores.empty()) throw ArgumentError("pareto_frontier needs at least one scenario");
  ParetoFrontier f;
  for (const auto& candidate : scores) {
    bool dominated = false;
    for (const auto& other : scores) {
      if (dominates(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) f.members.push_back(candidate);
  }
  return f;
}

namespace detail {

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(q, b, &out)) {
    throw ArithmeticOverflow("LCM of scenario speeds overflows 64-bit integers (" +
                             std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  return out;
}

}  // namespace detail

/// Result of resolving a frontier with the LCM rule.
struct OptimalChoice {
  NodeId source;
  NodeId target;
  ParetoFrontier frontier;
  std::uint64_t lcm = 0;
  std::vector<std::uint64_t> realizations;  // lcm / speed, per member
  std::vector<double> scores;               // |force| * realizations, per member
  std::size_t chosen = 0;                   // index into frontier.members

  const PathScore& winner() const { return frontier.members.at(chosen); }
  double full_impact() const { return winner().force; }
  std::uint64_t full_time() const { return winner().speed; }
};

/**
 * Picks one scenario from a frontier.
 *
 * Over L = lcm of member speeds, member k runs a(k) = L / speed(k) times and
 * scores |force(k)| * a(k). The highest score wins; equal scores prefer the
 * smaller speed, then the earlier member.
 */
inline OptimalChoice lcm_tiebreak(const ParetoFrontier& frontier) {
  if (frontier.members.empty()) throw ArgumentError("lcm_tiebreak needs a non-empty frontier");
  OptimalChoice c;
  if (const auto& p = frontier.members.front().path; !p.nodes.empty()) {
    c.source = p.source();
    c.target = p.target();
  }
  c.frontier = frontier;

  std::uint64_t lcm = 1;
  for (const auto& m : frontier.members) {
    if (m.speed == 0) throw ArgumentError("scenario speed must be a positive integer");
    lcm = detail::checked_lcm(lcm, m.speed);
  }
  c.lcm = lcm;

  for (std::size_t k = 0; k < frontier.members.size(); ++k) {
    const auto& m = frontier.members[k];
    const std::uint64_t a = lcm / m.speed;
    c.realizations.push_back(a);
    c.scores.push_back(std::abs(m.force) * static_cast<double>(a));
    if (k == 0) continue;
    const double best = c.scores[c.chosen];
    if (c.scores[k] > best ||
        (c.scores[k] == best && m.speed < frontier.members[c.chosen].speed)) {
      c.chosen = k;
    }
  }
  return c;
}

/// Every scored scenario of one ordered pair, plus the choice when one exists.
struct PairAssessment {
  NodeId source;
  NodeId target;
  std::vector<PathScore> scenarios;
  std::optional<OptimalChoice> choice;

  bool on_frontier(std::size_t scenario) const {
    if (!choice) return false;
    for (const auto& m : choice->frontier.members)
      if (m.index == scenario) return true;
    return false;
  }
};

inline PairAssessment assess_pair(const CognitiveMap& map, NodeId source, NodeId target,
                                  const AnalysisOptions& options = {}) {
  PairAssessment a{source, target, {}, std::nullopt};
  const auto paths = enumerate_simple_paths(map, source, target, options.max_paths);
  if (paths.empty()) return a;
  a.scenarios = score_paths(paths, map, options.amplification);
  a.choice = lcm_tiebreak(pareto_frontier(a.scenarios));
  a.choice->source = source;
  a.choice->target = target;
  return a;
}

/// Optimal scenario for the pair, or nullopt when `target` is unreachable.
inline std::optional<OptimalChoice> select_optimal(const CognitiveMap& map, NodeId source,
                                                   NodeId target,
                                                   const AnalysisOptions& options = {}) {
  return assess_pair(map, source, target, options).choice;
}

}  // namespace impactgraph

#endif  // IMPACTGRAPH_SCENARIO_SELECTION_HPP
