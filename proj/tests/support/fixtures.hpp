#ifndef IMPACTGRAPH_TESTS_FIXTURES_HPP
#define IMPACTGRAPH_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/paths.hpp"

namespace impactgraph::testing {

// Four-node worked example used throughout the tests.
inline CognitiveMap paper_map() {
  return CognitiveMap::from_rows({{0, 0, 0, 0}, {0, 0, 2, 8}, {-3, 9, 0, 5}, {2, 0, -1, 0}});
}

inline NodeId u(std::size_t one_based) { return NodeId{one_based - 1}; }

inline ImpactPath path_of(std::initializer_list<std::size_t> one_based) {
  ImpactPath p;
  for (auto k : one_based) p.nodes.push_back(u(k));
  return p;
}

/// Random map: each off-diagonal edge present with probability `density`,
/// weight uniform in [-10, 10].
inline CognitiveMap random_map(std::mt19937_64& rng, std::size_t n, double density = 0.7) {
  std::uniform_real_distribution<double> weight(-10.0, 10.0);
  std::bernoulli_distribution present(density);
  Matrix<double> w = Matrix<double>::square(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && present(rng)) w(i, j) = weight(rng);
  return CognitiveMap(std::move(w));
}

/// Node i of `map` becomes node perm[i] of the result; labels travel with nodes.
inline CognitiveMap permuted(const CognitiveMap& map, const std::vector<std::size_t>& perm) {
  const std::size_t n = map.size();
  Matrix<double> w = Matrix<double>::square(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = map.labels()[i];
    for (std::size_t j = 0; j < n; ++j) w(perm[i], perm[j]) = map.weights()(i, j);
  }
  return CognitiveMap(std::move(labels), std::move(w));
}

/// Brute force: every ordered selection of distinct intermediates, kept when
/// each hop is an edge. Independent of the depth-first enumerator.
inline std::set<std::vector<std::size_t>> brute_force_paths(const CognitiveMap& map,
                                                           std::size_t s, std::size_t t) {
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < map.size(); ++k)
    if (k != s && k != t) others.push_back(k);
  std::set<std::vector<std::size_t>> out;
  std::sort(others.begin(), others.end());
  do {
    for (std::size_t len = 0; len <= others.size(); ++len) {
      std::vector<std::size_t> p{s};
      p.insert(p.end(), others.begin(), others.begin() + static_cast<std::ptrdiff_t>(len));
      p.push_back(t);
      bool ok = true;
      for (std::size_t k = 0; k + 1 < p.size() && ok; ++k) ok = map.weights()(p[k], p[k + 1]) != 0.0;
      if (ok) out.insert(p);
    }
  } while (std::next_permutation(others.begin(), others.end()));
  return out;
}

/// Reference recurrence written directly from its definition, used as an oracle.
inline double oracle_force(const std::vector<double>& weights, double mu, double lambda = 2.0) {
  auto run = [&](std::size_t first) {
    double z = 0.0;
    for (std::size_t k = first; k < weights.size(); ++k) {
      const double amp = z == 0.0 ? 0.0 : std::copysign(1.0 - std::exp(-lambda * std::fabs(z) / mu), z);
      z = (1.0 + amp) * weights[k];
    }
    return z;
  };
  return run(0) - (weights.size() > 1 ? run(1) : 0.0);
}

inline std::vector<double> path_weights(const CognitiveMap& map, const ImpactPath& p) {
  std::vector<double> w;
  for (std::size_t k = 0; k + 1 < p.nodes.size(); ++k) w.push_back(map.weight(p.nodes[k], p.nodes[k + 1]));
  return w;
}

}  // namespace impactgraph::testing

#endif  // IMPACTGRAPH_TESTS_FIXTURES_HPP
