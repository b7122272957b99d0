/**
 * @file anp.hpp
 * @brief Network model, weighted supermatrix, limit supermatrix and
 * alternative priorities read off the goal column.
 */

#ifndef MCDM_ANP_HPP
#define MCDM_ANP_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcdm/core.hpp"
#include "mcdm/linalg.hpp"
#include "mcdm/pairwise.hpp"

namespace mcdm {

struct Cluster {
  std::string label;
  std::vector<std::string> nodes;
};

/// A parent's judgments over the child nodes it influences inside one cluster.
/// The child nodes are the matrix labels.
struct InfluenceBlock {
  std::string parent;
  std::string cluster;
  PairwiseMatrix comparisons;
};

/// parent -> (target cluster -> share of the parent's influence)
using ClusterSplits = std::map<std::string, std::map<std::string, double>>;

inline constexpr double kSplitSumTolerance = 1e-9;

/**
 * @brief Clusters, node order and influence blocks of a network.
 *
 * Every parent with blocks in more than one cluster needs a split over those
 * clusters summing to one; with a single target cluster the split defaults to 1.
 */
class AnpNetwork {
 public:
  AnpNetwork(std::vector<Cluster> clusters, std::vector<std::string> nodes,
             std::vector<InfluenceBlock> blocks, ClusterSplits splits = {})
      : clusters_(std::move(clusters)),
        nodes_(std::move(nodes)),
        blocks_(std::move(blocks)),
        splits_(std::move(splits)) {
    if (nodes_.empty()) {
      for (const auto& c : clusters_) nodes_.insert(nodes_.end(), c.nodes.begin(), c.nodes.end());
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (!index_.emplace(nodes_[k], k).second) {
        throw Error(ErrorCode::InvalidNetwork, "node '" + nodes_[k] + "' listed twice");
      }
    }
    std::size_t members = 0;
    for (const auto& c : clusters_) {
      if (!cluster_index_.emplace(c.label, cluster_index_.size()).second) {
        throw Error(ErrorCode::InvalidNetwork, "cluster '" + c.label + "' listed twice");
      }
      for (const auto& node : c.nodes) {
        if (index_.count(node) == 0) {
          throw Error(ErrorCode::InvalidNetwork, "cluster '" + c.label + "' names unknown node '" +
                                                     node + "'");
        }
        if (!cluster_of_.emplace(node, c.label).second) {
          throw Error(ErrorCode::InvalidNetwork, "node '" + node + "' is in two clusters");
        }
        ++members;
      }
    }
    if (members != nodes_.size()) {
      throw Error(ErrorCode::InvalidNetwork, "every node must belong to exactly one cluster");
    }

    std::map<std::string, std::vector<std::string>> targets;
    for (const auto& b : blocks_) {
      if (index_.count(b.parent) == 0) {
        throw Error(ErrorCode::InvalidNetwork, "unknown parent node '" + b.parent + "'");
      }
      if (cluster_index_.count(b.cluster) == 0) {
        throw Error(ErrorCode::InvalidNetwork, "unknown cluster '" + b.cluster + "'");
      }
      const auto& children = b.comparisons.labels();
      if (children.size() != b.comparisons.order()) {
        throw Error(ErrorCode::InvalidNetwork,
                    "block " + b.parent + " -> " + b.cluster + " must label its child nodes");
      }
      for (const auto& child : children) {
        auto it = cluster_of_.find(child);
        if (it == cluster_of_.end() || it->second != b.cluster) {
          throw Error(ErrorCode::InvalidNetwork, "child '" + child + "' of " + b.parent +
                                                     " is not in cluster '" + b.cluster + "'");
        }
      }
      auto& t = targets[b.parent];
      if (std::find(t.begin(), t.end(), b.cluster) != t.end()) {
        throw Error(ErrorCode::InvalidNetwork,
                    "parent '" + b.parent + "' has two blocks for cluster '" + b.cluster + "'");
      }
      t.push_back(b.cluster);
    }

    for (const auto& [parent, split] : splits_) {
      if (targets.count(parent) == 0) {
        throw Error(ErrorCode::InvalidNetwork, "split given for '" + parent + "' which has no blocks");
      }
    }
    for (const auto& [parent, clusters] : targets) {
      auto it = splits_.find(parent);
      if (it == splits_.end()) {
        if (clusters.size() > 1) {
          throw Error(ErrorCode::InvalidNetwork,
                      "parent '" + parent + "' influences several clusters but has no split");
        }
        splits_[parent][clusters.front()] = 1.0;
        continue;
      }
      double sum = 0.0;
      for (const auto& [cluster, w] : it->second) {
        if (std::find(clusters.begin(), clusters.end(), cluster) == clusters.end()) {
          throw Error(ErrorCode::InvalidNetwork, "split of '" + parent + "' names cluster '" +
                                                     cluster + "' without a block");
        }
        if (!(w >= 0.0)) {
          throw Error(ErrorCode::InvalidNetwork, "split weights of '" + parent + "' must be >= 0");
        }
        sum += w;
      }
      for (const auto& c : clusters) {
        if (it->second.count(c) == 0) {
          throw Error(ErrorCode::InvalidNetwork,
                      "split of '" + parent + "' has no share for cluster '" + c + "'");
        }
      }
      if (std::abs(sum - 1.0) > kSplitSumTolerance) {
        throw Error(ErrorCode::InvalidNetwork,
                    "split weights of '" + parent + "' sum to " + std::to_string(sum));
      }
    }
  }

  [[nodiscard]] const std::vector<Cluster>& clusters() const noexcept { return clusters_; }
  [[nodiscard]] const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<InfluenceBlock>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] const ClusterSplits& splits() const noexcept { return splits_; }

  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& node) const {
    auto it = index_.find(node);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] const Cluster* find_cluster(const std::string& label) const {
    auto it = cluster_index_.find(label);
    return it == cluster_index_.end() ? nullptr : &clusters_[it->second];
  }

  [[nodiscard]] std::vector<const InfluenceBlock*> blocks_of(const std::string& parent) const {
    std::vector<const InfluenceBlock*> out;
    for (const auto& b : blocks_) {
      if (b.parent == parent) out.push_back(&b);
    }
    return out;
  }

  [[nodiscard]] double split(const std::string& parent, const std::string& cluster) const {
    return splits_.at(parent).at(cluster);
  }

 private:
  std::vector<Cluster> clusters_;
  std::vector<std::string> nodes_;
  std::vector<InfluenceBlock> blocks_;
  ClusterSplits splits_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::size_t> cluster_index_;
  std::unordered_map<std::string, std::string> cluster_of_;
};

struct BlockReport {
  std::string parent;
  std::string cluster;
  ConsistencyReport report;
};

struct NodePriorities {
  std::vector<std::string> children;
  std::vector<double> weights;  ///< sums to 1 across all target clusters
  std::vector<BlockReport> reports;
};

struct AnpOptions {
  bool strict = false;
  EigenOptions eigen{};
  LimitOptions limit{};
};

/// Each block's priority vector scaled by its cluster share, concatenated in block order.
inline NodePriorities node_local_priorities(const std::string& parent, const AnpNetwork& network,
                                            const AnpOptions& options = {}) {
  const auto blocks = network.blocks_of(parent);
  if (blocks.empty()) {
    throw Error(ErrorCode::InvalidNetwork, "node '" + parent + "' influences nothing");
  }
  NodePriorities out;
  for (const auto* b : blocks) {
    const auto p = priority_vector(b->comparisons, options.eigen);
    const double share = network.split(parent, b->cluster);
    for (std::size_t k = 0; k < p.weights.size(); ++k) {
      out.children.push_back(b->comparisons.labels()[k]);
      out.weights.push_back(p.weights[k] * share);
    }
    auto report = b->comparisons.order() <= kRandomIndex.size()
                      ? consistency(p.lambda_max, b->comparisons.order())
                      : ConsistencyReport{p.lambda_max, 0.0, 0.0, 0.0, true};
    if (options.strict && !report.acceptable) {
      throw Error(ErrorCode::InconsistentJudgments, "block " + parent + " -> " + b->cluster +
                                                        " has CR = " + std::to_string(report.cr));
    }
    out.reports.push_back({parent, b->cluster, report});
  }
  return out;
}

enum class SupermatrixKind { Weighted, Limit };

struct Supermatrix {
  SquareMatrix matrix;
  SupermatrixKind kind = SupermatrixKind::Weighted;
  std::vector<std::string> nodes;
};

/// Column per parent node holding its local priorities in the child rows; zero elsewhere.
inline Supermatrix build_supermatrix(const AnpNetwork& network, const AnpOptions& options = {}) {
  const std::size_t n = network.nodes().size();
  Matrix w(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const auto& parent = network.nodes()[col];
    if (network.blocks_of(parent).empty()) continue;
    const auto local = node_local_priorities(parent, network, options);
    for (std::size_t k = 0; k < local.children.size(); ++k) {
      w(*network.index_of(local.children[k]), col) = local.weights[k];
    }
  }
  return {SquareMatrix(std::move(w)), SupermatrixKind::Weighted, network.nodes()};
}

struct AnpResult {
  RankingResult ranking;
  Supermatrix weighted;
  Supermatrix limit;
  std::vector<BlockReport> reports;
};

/**
 * @brief Limit supermatrix and the goal column's normalized alternative priorities.
 *
 * Nodes that influence nothing (zero columns) are made absorbing for the
 * limit computation only, so hierarchy-shaped networks keep their mass on
 * the alternatives instead of decaying to zero.
 */
inline AnpResult anp_priorities(const AnpNetwork& network, const std::string& goal,
                                const std::string& alternatives_cluster,
                                const AnpOptions& options = {}) {
  const auto goal_index = network.index_of(goal);
  if (!goal_index) throw Error(ErrorCode::InvalidNetwork, "unknown goal node '" + goal + "'");
  const Cluster* alts = network.find_cluster(alternatives_cluster);
  if (alts == nullptr || alts->nodes.empty()) {
    throw Error(ErrorCode::InvalidNetwork,
                "alternatives cluster '" + alternatives_cluster + "' is missing or empty");
  }

  AnpResult out;
  out.weighted = build_supermatrix(network, options);
  for (const auto& node : network.nodes()) {
    if (network.blocks_of(node).empty()) continue;
    auto local = node_local_priorities(node, network, options);
    out.reports.insert(out.reports.end(), local.reports.begin(), local.reports.end());
  }

  const std::size_t n = network.nodes().size();
  Matrix absorbing = out.weighted.matrix.matrix();
  for (std::size_t j = 0; j < n; ++j) {
    if (absorbing.column_sum(j) == 0.0) absorbing(j, j) = 1.0;
  }
  out.limit = {limit_supermatrix(SquareMatrix(std::move(absorbing)), options.limit),
               SupermatrixKind::Limit, network.nodes()};

  std::vector<double> raw;
  double mass = 0.0;
  for (const auto& node : alts->nodes) {
    raw.push_back(out.limit.matrix(*network.index_of(node), *goal_index));
    mass += raw.back();
  }
  if (!(mass > 1e-12)) {
    throw Error(ErrorCode::ZeroGoalColumn,
                "the limit goal column puts no weight on cluster '" + alternatives_cluster + "'");
  }
  for (auto& v : raw) v /= mass;
  out.ranking = rank_from_scores(std::move(raw), Ordering::HigherScoreBetter);
  out.ranking.method = MethodId::Anp;
  out.ranking.alternatives = alts->nodes;
  return out;
}

}  // namespace mcdm

#endif  // MCDM_ANP_HPP
