#ifndef IMPACTGRAPH_COGNITIVE_MAP_HPP
#define IMPACTGRAPH_COGNITIVE_MAP_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "impactgraph/error.hpp"
#include "impactgraph/matrix.hpp"

namespace impactgraph {

/// Zero-based index of a node inside a CognitiveMap.
struct NodeId {
  std::size_t index = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Default labels "u1".."un".
inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i + 1));
  return labels;
}

/**
 * A weighted signed directed graph given by its adjacency matrix.
 *
 * Entry (i, j) is the weight of the edge from node i to node j; zero means no
 * edge. The diagonal must be zero. Instances are validated on construction and
 * immutable afterwards.
 */
class CognitiveMap {
 public:
  explicit CognitiveMap(Matrix<double> weights)
      : CognitiveMap(default_labels(weights.rows()), std::move(weights)) {}

  CognitiveMap(std::vector<std::string> labels, Matrix<double> weights)
      : labels_(std::move(labels)), weights_(std::move(weights)) {
    validate();
  }

  /// Builds a map from nested rows; rows must form a square table.
  static CognitiveMap from_rows(const std::vector<std::vector<double>>& rows,
                                std::vector<std::string> labels = {}) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw MapError("non-square weight matrix: row " + std::to_string(i + 1) +
                       " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
      }
    }
    Matrix<double> w = Matrix<double>::square(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = rows[i][j];
    if (labels.empty()) labels = default_labels(n);
    return CognitiveMap(std::move(labels), std::move(w));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId node) const { return labels_.at(node.index); }
  const Matrix<double>& weights() const noexcept { return weights_; }

  double weight(NodeId from, NodeId to) const {
    return weights_(from.index, to.index);
  }
  bool has_edge(NodeId from, NodeId to) const { return weight(from, to) != 0.0; }

  bool contains(NodeId node) const noexcept { return node.index < size(); }

  std::optional<NodeId> find(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return NodeId{static_cast<std::size_t>(it - labels_.begin())};
  }

  /// Largest absolute edge weight; 0 for an edgeless map.
  double mu() const noexcept {
    double m = 0.0;
    for (double w : weights_.values()) m = std::max(m, std::abs(w));
    return m;
  }

  CognitiveMap relabeled(std::vector<std::string> labels) const {
    return CognitiveMap(std::move(labels), weights_);
  }

  friend bool operator==(const CognitiveMap&, const CognitiveMap&) = default;

 private:
  void validate() const {
    const std::size_t n = weights_.rows();
    if (n == 0) throw MapError("cognitive map must have at least one node");
    if (weights_.cols() != n) {
      throw MapError("non-square weight matrix: " + std::to_string(n) + "x" +
                     std::to_string(weights_.cols()));
    }
    if (labels_.size() != n) {
      throw MapError("label count " + std::to_string(labels_.size()) +
                     " does not match matrix dimension " + std::to_string(n));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw MapError("empty node label");
      if (!seen.insert(l).second) throw MapError("duplicate node label '" + l + "'");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(weights_(i, j))) {
          throw MapError("non-finite weight at (" + labels_[i] + ", " + labels_[j] + ")");
        }
      }
      if (weights_(i, i) != 0.0) {
        throw MapError("nonzero diagonal weight on node '" + labels_[i] +
                       "': self-loops are not allowed");
      }
    }
  }

  std::vector<std::string> labels_;
  Matrix<double> weights_;
};

inline double mu(const CognitiveMap& map) noexcept { return map.mu(); }

}  // namespace impactgraph

#endif  // IMPACTGRAPH_COGNITIVE_MAP_HPP
