#ifndef IMPACTGRAPH_ACCUMULATIVE_IMPACT_HPP
#define IMPACTGRAPH_ACCUMULATIVE_IMPACT_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/error.hpp"
#include "impactgraph/paths.hpp"

namespace impactgraph {

/// Steepness of the amplification curve alpha(x) = 1 - exp(-lambda * x).
struct AmplificationParams {
  double lambda = 2.0;
};

inline void require_valid(const AmplificationParams& params) {
  if (!(params.lambda > 0.0) || !std::isfinite(params.lambda)) {
    throw ArgumentError("lambda must be a positive finite number");
  }
}

/// Bounded amplification in [0, 1); alpha(0) = 0, strictly increasing.
inline double amplification(double x, const AmplificationParams& params = {}) {
  return -std::expm1(-params.lambda * x);
}

inline double sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

/// Criteria for one scenario: C1 (force) and C2 (speed, edge count).
struct PathScore {
  ImpactPath path;
  double forward = 0.0;    // z at step m-1
  double truncated = 0.0;  // z~ at step m-1
  double force = 0.0;      // forward - truncated
  std::uint64_t speed = 0;

  std::size_t index = 0;  // position in the pair's enumeration order
};

namespace detail {

// One step of the recurrence: (1 + sign(z) * alpha(|z| / mu)) * w.
inline double accumulate_step(double z, double w, double mu, const AmplificationParams& params) {
  return (1.0 + sign_of(z) * amplification(std::abs(z) / mu, params)) * w;
}

inline double require_mu(const CognitiveMap& map) {
  const double m = map.mu();
  if (!(m > 0.0)) throw ComputationError("mu is zero: an edgeless map cannot host a path");
  return m;
}

}  // namespace detail

/// Forward accumulation z(1..m-1) along `path`, starting from z(0) = 0.
inline std::vector<double> accumulate_forward(const ImpactPath& path, const CognitiveMap& map,
                                              const AmplificationParams& params = {}) {
  require_valid(params);
  require_valid_path(map, path);
  const double m = detail::require_mu(map);
  std::vector<double> z;
  z.reserve(path.edge_count());
  double current = 0.0;
  for (std::size_t t = 0; t + 1 < path.nodes.size(); ++t) {
    current = detail::accumulate_step(current, map.weight(path.nodes[t], path.nodes[t + 1]), m,
                                      params);
    z.push_back(current);
  }
  return z;
}

/// Truncated accumulation z~(m-1): the same recurrence with the first edge dropped.
/// A single-edge path has an empty recurrence and yields 0.
inline double accumulate_truncated(const ImpactPath& path, const CognitiveMap& map,
                                   const AmplificationParams& params = {}) {
  require_valid(params);
  require_valid_path(map, path);
  const double m = detail::require_mu(map);
  double current = 0.0;
  for (std::size_t r = 1; r + 1 < path.nodes.size(); ++r) {
    current = detail::accumulate_step(current, map.weight(path.nodes[r], path.nodes[r + 1]), m,
                                      params);
  }
  return current;
}

inline PathScore score_path(const ImpactPath& path, const CognitiveMap& map,
                            const AmplificationParams& params = {}) {
  PathScore s;
  s.path = path;
  s.forward = accumulate_forward(path, map, params).back();
  s.truncated = accumulate_truncated(path, map, params);
  s.force = s.forward - s.truncated;
  s.speed = path.edge_count();
  return s;
}

inline std::vector<PathScore> score_paths(std::span<const ImpactPath> paths,
                                          const CognitiveMap& map,
                                          const AmplificationParams& params = {}) {
  std::vector<PathScore> scores;
  scores.reserve(paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) {
    scores.push_back(score_path(paths[k], map, params));
    scores.back().index = k;
  }
  return scores;
}

}  // namespace impactgraph

#endif  // IMPACTGRAPH_ACCUMULATIVE_IMPACT_HPP
