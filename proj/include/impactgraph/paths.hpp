#ifndef IMPACTGRAPH_PATHS_HPP
#define IMPACTGRAPH_PATHS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "impactgraph/cognitive_map.hpp"
#include "impactgraph/error.hpp"

namespace impactgraph {

inline constexpr std::size_t kDefaultMaxPaths = 1'000'000;

/// One simple directed path q0..q(m-1); one impact scenario between its ends.
struct ImpactPath {
  std::vector<NodeId> nodes;

  NodeId source() const { return nodes.front(); }
  NodeId target() const { return nodes.back(); }
  std::size_t edge_count() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }

  friend bool operator==(const ImpactPath&, const ImpactPath&) = default;
};

/// Shorter first, then lexicographic by node index.
inline bool path_order(const ImpactPath& a, const ImpactPath& b) {
  if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
  return a.nodes < b.nodes;
}

/// Checks the ImpactPath invariants against `map`; returns an empty string when valid.
inline std::string path_violation(const CognitiveMap& map, const ImpactPath& path) {
  if (path.nodes.size() < 2) return "path needs at least two nodes";
  std::vector<bool> seen(map.size(), false);
  for (std::size_t k = 0; k < path.nodes.size(); ++k) {
    const NodeId q = path.nodes[k];
    if (!map.contains(q)) return "node index " + std::to_string(q.index) + " out of range";
    if (seen[q.index]) return "node '" + map.label(q) + "' repeats";
    seen[q.index] = true;
    if (k > 0 && !map.has_edge(path.nodes[k - 1], q)) {
      return "no edge " + map.label(path.nodes[k - 1]) + " -> " + map.label(q);
    }
  }
  return {};
}

inline void require_valid_path(const CognitiveMap& map, const ImpactPath& path) {
  if (auto why = path_violation(map, path); !why.empty()) {
    throw ArgumentError("invalid impact path: " + why);
  }
}

inline void require_node(const CognitiveMap& map, NodeId node) {
  if (!map.contains(node)) {
    throw ArgumentError("node index " + std::to_string(node.index) +
                        " out of range for map of size " + std::to_string(map.size()));
  }
}

inline void require_distinct_pair(const CognitiveMap& map, NodeId source, NodeId target) {
  require_node(map, source);
  require_node(map, target);
  if (source == target) {
    throw ArgumentError("source and target must differ (both '" + map.label(source) + "')");
  }
}

/**
 * Enumerates every simple path from `source` to `target`.
 *
 * Depth-first over out-edges in index order, then stably sorted by length, so
 * the result is ordered by edge count and lexicographically within a length.
 * Throws PathLimitExceeded once more than `max_paths` paths are found; the
 * result is never silently truncated.
 */
inline std::vector<ImpactPath> enumerate_simple_paths(const CognitiveMap& map, NodeId source,
                                                      NodeId target,
                                                      std::size_t max_paths = kDefaultMaxPaths) {
  require_distinct_pair(map, source, target);
  if (max_paths == 0) throw ArgumentError("max_paths must be at least 1");

  const std::size_t n = map.size();
  std::vector<ImpactPath> found;
  std::vector<NodeId> stack{source};
  std::vector<bool> on_path(n, false);
  on_path[source.index] = true;
  // next[k] is the next neighbour index to try from stack[k].
  std::vector<std::size_t> next{0};

  while (!stack.empty()) {
    const NodeId top = stack.back();
    std::size_t& j = next.back();
    while (j < n && (on_path[j] || !map.has_edge(top, NodeId{j}))) ++j;
    if (j == n) {
      on_path[top.index] = false;
      stack.pop_back();
      next.pop_back();
      continue;
    }
    const NodeId step{j++};
    if (step == target) {
      if (found.size() == max_paths) throw PathLimitExceeded(max_paths);
      ImpactPath p{stack};
      p.nodes.push_back(target);
      found.push_back(std::move(p));
      continue;
    }
    on_path[step.index] = true;
    stack.push_back(step);
    next.push_back(0);
  }

  std::stable_sort(found.begin(), found.end(), [](const ImpactPath& a, const ImpactPath& b) {
    return a.nodes.size() < b.nodes.size();
  });
  return found;
}

}  // namespace impactgraph

#endif  // IMPACTGRAPH_PATHS_HPP
