#ifndef IMPACTGRAPH_INFLUENCE_HPP
#define IMPACTGRAPH_INFLUENCE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/error.hpp"
#include "impactgraph/matrix.hpp"
#include "impactgraph/scenario_selection.hpp"

namespace impactgraph {

/// How the propagation step normalizes. `signed_sum` is the reference rule;
/// `absolute_sum` divides by the sum of magnitudes instead.
enum class Normalization { signed_sum, absolute_sum };

struct PropagationOptions {
  double epsilon = 1e-9;
  std::size_t max_steps = 10'000;
  double epsilon_sum = 1e-12;
  Normalization normalization = Normalization::signed_sum;
};

/// Full impact Z and full time T of the optimal scenario of each ordered pair.
struct ImpactMatrices {
  Matrix<double> impact;
  Matrix<std::uint64_t> time;
};

struct RankEntry {
  NodeId node;
  double value = 0.0;
  std::size_t rank = 0;  // 1-based position
};

using RankTable = std::vector<RankEntry>;

struct InfluenceResult {
  Matrix<double> impact;       // Z
  Matrix<std::uint64_t> time;  // T
  Matrix<double> rate;         // Z1
  Matrix<double> steady;       // Z*
  RankTable ranks;
};

inline ImpactMatrices build_matrices(const CognitiveMap& map, const AnalysisOptions& options = {}) {
  const std::size_t n = map.size();
  ImpactMatrices m{Matrix<double>::square(n), Matrix<std::uint64_t>::square(n)};
  if (map.mu() == 0.0) return m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (const auto choice = select_optimal(map, NodeId{i}, NodeId{j}, options)) {
        m.impact(i, j) = choice->full_impact();
        m.time(i, j) = choice->full_time();
      }
    }
  }
  return m;
}

/// Z1 = Z / T elementwise, with 0 wherever Z is 0.
inline Matrix<double> rate_matrix(const Matrix<double>& impact,
                                  const Matrix<std::uint64_t>& time) {
  if (impact.rows() != time.rows() || impact.cols() != time.cols()) {
    throw ArgumentError("Z and T dimensions differ");
  }
  Matrix<double> rate(impact.rows(), impact.cols());
  for (std::size_t i = 0; i < impact.rows(); ++i) {
    for (std::size_t j = 0; j < impact.cols(); ++j) {
      if (impact(i, j) == 0.0) continue;
      if (time(i, j) == 0) {
        throw ComputationError("inconsistent Z/T: nonzero impact with zero time at (" +
                               std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
      rate(i, j) = impact(i, j) / static_cast<double>(time(i, j));
    }
  }
  return rate;
}

inline double normalizer(const Matrix<double>& m, Normalization mode) {
  double s = 0.0;
  for (double v : m.values()) s += mode == Normalization::signed_sum ? v : std::abs(v);
  return s;
}

namespace detail {

inline Matrix<double> normalized(Matrix<double> m, const PropagationOptions& options) {
  const double s = normalizer(m, options.normalization);
  if (!(std::abs(s) > options.epsilon_sum)) throw DegenerateNormalization(s);
  for (double& v : m.values()) v /= s;
  return m;
}

}  // namespace detail

/**
 * Iterates z <- normalize(z + Z1) from z = Z1 until the largest entry change
 * drops below `epsilon`. Throws DegenerateNormalization when a normalizing sum
 * is within `epsilon_sum` of zero and NonConvergence after `max_steps`.
 */
inline Matrix<double> propagate(const Matrix<double>& rate, const PropagationOptions& options = {}) {
  const double s = normalizer(rate, options.normalization);
  if (!(std::abs(s) > options.epsilon_sum)) throw DegenerateNormalization(s);

  Matrix<double> z = rate;
  double change = 0.0;
  for (std::size_t step = 0; step < options.max_steps; ++step) {
    Matrix<double> next = z;
    for (std::size_t k = 0; k < next.size(); ++k) next.values()[k] += rate.values()[k];
    next = detail::normalized(std::move(next), options);
    change = 0.0;
    for (std::size_t k = 0; k < next.size(); ++k)
      change = std::max(change, std::abs(next.values()[k] - z.values()[k]));
    z = std::move(next);
    if (change < options.epsilon) return z;
  }
  throw NonConvergence(options.max_steps, change);
}

/// Fixed point of `propagate` in closed form: Z1 divided by its normalizing sum.
inline Matrix<double> closed_form_steady_state(const Matrix<double>& rate,
                                               const PropagationOptions& options = {}) {
  return detail::normalized(rate, options);
}

/// Orders per-node values descending; ties by node index.
inline RankTable rank_rows(const std::vector<double>& values) {
  RankTable table;
  for (std::size_t i = 0; i < values.size(); ++i) table.push_back({NodeId{i}, values[i], 0});
  std::stable_sort(table.begin(), table.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.value > b.value; });
  for (std::size_t k = 0; k < table.size(); ++k) table[k].rank = k + 1;
  return table;
}

inline std::vector<double> row_abs_sums(const Matrix<double>& m) {
  std::vector<double> sums(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (double v : m.row(i)) sums[i] += std::abs(v);
  return sums;
}

/// Inf of node i is the sum of |Z*(i, j)| over j.
inline RankTable rank_nodes(const Matrix<double>& steady) { return rank_rows(row_abs_sums(steady)); }

inline bool all_zero(const Matrix<double>& m) {
  return std::all_of(m.values().begin(), m.values().end(), [](double v) { return v == 0.0; });
}

/// Whole pipeline: Z, T, Z1, Z* and the rank table.
inline InfluenceResult analyze(const CognitiveMap& map, const AnalysisOptions& analysis = {},
                               const PropagationOptions& propagation = {}) {
  auto [impact, time] = build_matrices(map, analysis);
  auto rate = rate_matrix(impact, time);
  auto steady = propagate(rate, propagation);
  auto ranks = rank_nodes(steady);
  return {std::move(impact), std::move(time), std::move(rate), std::move(steady),
          std::move(ranks)};
}

/// Rank table of the Pareto method. A map whose rate matrix is identically zero
/// carries no influence and ranks every node at 0 instead of failing to normalize.
inline RankTable pareto_rank(const CognitiveMap& map, const AnalysisOptions& analysis = {},
                             const PropagationOptions& propagation = {}) {
  const auto [impact, time] = build_matrices(map, analysis);
  const auto rate = rate_matrix(impact, time);
  if (all_zero(rate)) return rank_rows(std::vector<double>(map.size(), 0.0));
  return rank_nodes(propagate(rate, propagation));
}

}  // namespace impactgraph

#endif  // IMPACTGRAPH_INFLUENCE_HPP
