#ifndef IMPACTGRAPH_BASELINES_HPP
#define IMPACTGRAPH_BASELINES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "impactgraph/accumulative_impact.hpp"
#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/error.hpp"
#include "impactgraph/influence.hpp"
#include "impactgraph/paths.hpp"
#include "impactgraph/scenario_selection.hpp"

namespace impactgraph {

// Kosko min-max influence -------------------------------------------------

/// Strongest weakest link: max over simple paths of min |w| along the path.
inline double kosko_influence(const CognitiveMap& map, NodeId source, NodeId target,
                              std::size_t max_paths = kDefaultMaxPaths) {
  double best = 0.0;
  for (const auto& p : enumerate_simple_paths(map, source, target, max_paths)) {
    double weakest = std::abs(map.weight(p.nodes[0], p.nodes[1]));
    for (std::size_t k = 1; k + 1 < p.nodes.size(); ++k)
      weakest = std::min(weakest, std::abs(map.weight(p.nodes[k], p.nodes[k + 1])));
    best = std::max(best, weakest);
  }
  return best;
}

inline RankTable kosko_rank(const CognitiveMap& map, std::size_t max_paths = kDefaultMaxPaths) {
  std::vector<double> sums(map.size(), 0.0);
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = 0; j < map.size(); ++j)
      if (i != j) sums[i] += kosko_influence(map, NodeId{i}, NodeId{j}, max_paths);
  return rank_rows(sums);
}

// Impulse process ---------------------------------------------------------

struct ImpulseState {
  std::vector<double> values;
  std::vector<double> pulses;
};

/// v'(i) = v(i) + sum_j w(i, j) p(j);  p'(i) = v'(i) - v(i).
inline ImpulseState impulse_step(const CognitiveMap& map, const ImpulseState& state) {
  const std::size_t n = map.size();
  if (state.values.size() != n || state.pulses.size() != n) {
    throw ArgumentError("impulse state has dimension " + std::to_string(state.values.size()) +
                        "/" + std::to_string(state.pulses.size()) + ", map has " +
                        std::to_string(n) + " nodes");
  }
  ImpulseState next{state.values, std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    double delta = 0.0;
    for (std::size_t j = 0; j < n; ++j) delta += map.weights()(i, j) * state.pulses[j];
    next.values[i] += delta;
    next.pulses[i] = next.values[i] - state.values[i];
  }
  return next;
}

/// States at t = 0..steps.
inline std::vector<ImpulseState> impulse_run(const CognitiveMap& map, ImpulseState initial,
                                             std::size_t steps) {
  std::vector<ImpulseState> trace{std::move(initial)};
  for (std::size_t t = 0; t < steps; ++t) trace.push_back(impulse_step(map, trace.back()));
  return trace;
}

// Summed partial impacts --------------------------------------------------

/// Sum of the partial impact over every simple path, without Pareto selection.
inline double summed_impact(const CognitiveMap& map, NodeId source, NodeId target,
                            const AnalysisOptions& options = {}) {
  const auto paths = enumerate_simple_paths(map, source, target, options.max_paths);
  double total = 0.0;
  for (const auto& p : paths) total += score_path(p, map, options.amplification).force;
  return total;
}

inline RankTable summed_rank(const CognitiveMap& map, const AnalysisOptions& options = {}) {
  std::vector<double> sums(map.size(), 0.0);
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = 0; j < map.size(); ++j)
      if (i != j) sums[i] += std::abs(summed_impact(map, NodeId{i}, NodeId{j}, options));
  return rank_rows(sums);
}

// Side-by-side ------------------------------------------------------------

enum class Model { pareto, kosko, sum };

inline RankTable rank_by_model(const CognitiveMap& map, Model model,
                               const AnalysisOptions& analysis = {},
                               const PropagationOptions& propagation = {}) {
  switch (model) {
    case Model::kosko: return kosko_rank(map, analysis.max_paths);
    case Model::sum: return summed_rank(map, analysis);
    case Model::pareto: break;
  }
  return pareto_rank(map, analysis, propagation);
}

/// Rank tables of all three models, each indexed by node (not by rank).
struct ModelComparison {
  RankTable pareto;
  RankTable kosko;
  RankTable sum;
};

inline RankTable by_node(RankTable table) {
  std::sort(table.begin(), table.end(),
            [](const RankEntry& a, const RankEntry& b) { return a.node < b.node; });
  return table;
}

inline ModelComparison compare_models(const CognitiveMap& map, const AnalysisOptions& analysis = {},
                                      const PropagationOptions& propagation = {}) {
  return {by_node(pareto_rank(map, analysis, propagation)),
          by_node(kosko_rank(map, analysis.max_paths)), by_node(summed_rank(map, analysis))};
}

}  // namespace impactgraph

#endif  // IMPACTGRAPH_BASELINES_HPP
