#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sges/graph.hpp"

namespace sges {

/// Discrete Bayesian network: a DAG plus one conditional table per node.
///
/// cpts[v] is row-major with one row per parent configuration and one
/// column per state of v. Parent configurations enumerate the sorted parent
/// list with the lowest-index parent varying slowest.
class DiscreteBayesNet {
 public:
  DiscreteBayesNet() = default;
  /// Validates table shapes, ranges and row sums (1e-12).
  DiscreteBayesNet(Dag dag, std::vector<int> cardinalities,
                   std::vector<std::vector<double>> cpts);

  const Dag& dag() const { return dag_; }
  int node_count() const { return dag_.node_count(); }
  const std::vector<int>& cardinalities() const { return cardinalities_; }
  int cardinality(NodeId v) const { return cardinalities_.at(v); }
  const std::vector<double>& cpt(NodeId v) const { return cpts_.at(v); }

  /// Number of parent configurations of v.
  std::size_t row_count(NodeId v) const;
  /// Row index for a full joint assignment (one state per node).
  std::size_t row_index(NodeId v, const std::vector<int>& states) const;
  double probability(NodeId v, std::size_t row, int state) const {
    return cpts_[v][row * cardinalities_[v] + state];
  }

  bool operator==(const DiscreteBayesNet&) const = default;

 private:
  Dag dag_;
  std::vector<int> cardinalities_;
  std::vector<std::vector<double>> cpts_;
};

/// Probability table over a set of variables in sorted order, first variable
/// varying slowest.
struct Table {
  std::vector<NodeId> variables;
  std::vector<int> cardinalities;
  std::vector<double> values;
};

/// Full joint over all variables, node 0 varying slowest.
struct JointTable {
  std::vector<int> cardinalities;
  std::vector<double> values;

  /// Stride of each variable in the flat index.
  std::vector<std::size_t> strides() const;
  /// Marginal over `vars` by summing out the rest.
  Table marginal(NodeSet vars) const;
};

/// P(child | parents) by parent configuration (lowest-index parent slowest).
struct ConditionalTable {
  NodeId child;
  std::vector<NodeId> parents;
  int child_cardinality;
  /// rows.size() == number of parent configurations.
  std::vector<std::vector<double>> rows;
  /// True where the parent configuration has zero probability; such rows
  /// hold the uniform distribution.
  std::vector<bool> zero_probability;
};

inline constexpr std::size_t kDefaultJointLimit = std::size_t{1} << 24;

/// Random structure: random node permutation, each node paired with each of
/// its predecessors, insertion attempted with `edge_prob` and kept only if
/// acyclic and within `max_parents`; the direction is random when both are
/// legal.
Dag random_dag(int n, int max_parents, double edge_prob, std::uint64_t seed);

/// Each row drawn from a symmetric Dirichlet with total concentration `ess`
/// (ess / r per cell). Throws std::invalid_argument if ess <= 0.
DiscreteBayesNet sample_parameters(const Dag& g, const std::vector<int>& cardinalities,
                                   double ess, std::uint64_t seed);

/// Throws StateSpaceTooLarge if the joint has more than `limit` entries.
JointTable joint_distribution(const DiscreteBayesNet& bn,
                              std::size_t limit = kDefaultJointLimit);
Table marginal(const DiscreteBayesNet& bn, NodeSet vars,
               std::size_t limit = kDefaultJointLimit);
ConditionalTable conditional(const JointTable& joint, NodeId child, NodeSet parents);
ConditionalTable conditional(const DiscreteBayesNet& bn, NodeId child, NodeSet parents,
                             std::size_t limit = kDefaultJointLimit);

/// m x n matrix of integer-coded states.
struct DataMatrix {
  int columns = 0;
  std::vector<int> cells;

  std::size_t rows() const { return columns == 0 ? 0 : cells.size() / columns; }
  int at(std::size_t row, int column) const {
    return cells[row * static_cast<std::size_t>(columns) + column];
  }
};

/// Forward (ancestral) sampling in topological order.
DataMatrix sample_data(const DiscreteBayesNet& bn, std::size_t m, std::uint64_t seed);

/// Conditional mutual information I(a; b | s) in nats from a joint table.
double conditional_mutual_information(const JointTable& joint, NodeId a, NodeId b,
                                      NodeSet s);

/// Result of scanning a model for near-violations of faithfulness.
struct FaithfulnessReport {
  bool flagged = false;
  double min_dependence = 0.0;  ///< smallest CMI over d-connected queries
  NodeId a = -1;
  NodeId b = -1;
  NodeSet given;
};

/// Checks every d-connected query (a, b | s) with |s| <= max_conditioning
/// and flags the model if some CMI falls below `threshold`.
FaithfulnessReport check_faithfulness(const DiscreteBayesNet& bn, double threshold = 1e-8,
                                      int max_conditioning = 64);

}  // namespace sges
