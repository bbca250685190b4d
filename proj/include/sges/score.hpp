#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "sges/bayesnet.hpp"
#include "sges/graph.hpp"

namespace sges {

/// One term of a decomposable score: a node and its parent set.
struct LocalKey {
  NodeId child;
  NodeSet parents;
  bool operator==(const LocalKey&) const = default;
};

struct LocalKeyHash {
  std::size_t operator()(const LocalKey& key) const noexcept {
    const std::uint64_t mixed = key.parents.bits() * 0x9E3779B97F4A7C15ull ^
                                static_cast<std::uint64_t>(key.child);
    return std::hash<std::uint64_t>{}(mixed);
  }
};

/// Source of local scores. Implementations are immutable, so one backend
/// can be shared by many scorers.
class ScoreBackend {
 public:
  virtual ~ScoreBackend() = default;
  virtual int node_count() const = 0;
  /// Sample size the score is computed for (nominal for the oracle).
  virtual double sample_size() const = 0;
  virtual double local_score(NodeId child, NodeSet parents) const = 0;
};

/// Number of free parameters of child given parents: (r_child - 1) * prod r_p.
double free_parameters(const std::vector<int>& cardinalities, NodeId child, NodeSet parents);

/// MDL/BIC score computed from exact expected counts of a generative model
/// at a nominal sample size, without sampling:
///   N * sum P(x, pa) ln P(x | pa) - (ln N) / 2 * free_parameters
class OracleMdl final : public ScoreBackend {
 public:
  static constexpr double kDefaultSampleSize = 5e9;

  /// Throws std::invalid_argument unless n_effective > 1, and
  /// StateSpaceTooLarge if the joint does not fit.
  explicit OracleMdl(DiscreteBayesNet bn, double n_effective = kDefaultSampleSize,
                     std::size_t joint_limit = kDefaultJointLimit);

  int node_count() const override { return bn_.node_count(); }
  double sample_size() const override { return n_effective_; }
  double local_score(NodeId child, NodeSet parents) const override;

  const DiscreteBayesNet& network() const { return bn_; }
  const JointTable& joint() const { return joint_; }

 private:
  DiscreteBayesNet bn_;
  double n_effective_;
  JointTable joint_;
};

/// BIC from data counts: maximised log-likelihood minus (ln m) / 2 per free
/// parameter.
class EmpiricalBic final : public ScoreBackend {
 public:
  /// Throws std::invalid_argument if the data is empty, a column count
  /// mismatches, or a cell is outside [0, cardinality).
  EmpiricalBic(DataMatrix data, std::vector<int> cardinalities);

  int node_count() const override { return data_.columns; }
  double sample_size() const override { return static_cast<double>(data_.rows()); }
  double local_score(NodeId child, NodeSet parents) const override;

 private:
  DataMatrix data_;
  std::vector<int> cardinalities_;
};

/// Caches local scores and counts unique (child, parent set) evaluations.
/// Not thread-safe: use one scorer per trial.
class CountingScorer {
 public:
  explicit CountingScorer(std::shared_ptr<const ScoreBackend> backend);

  double local_score(const LocalKey& key);
  double local_score(NodeId child, NodeSet parents) { return local_score({child, parents}); }

  /// Unique keys evaluated since construction or the last reset.
  std::size_t unique_calls() const { return cache_.size(); }
  /// Clears the cache along with the counter.
  void reset();

  const ScoreBackend& backend() const { return *backend_; }
  int node_count() const { return backend_->node_count(); }
  /// Absolute tolerance for treating a score difference as zero: 1e-9 * N.
  double tolerance() const { return 1e-9 * backend_->sample_size(); }

 private:
  std::shared_ptr<const ScoreBackend> backend_;
  std::unordered_map<LocalKey, double, LocalKeyHash> cache_;
};

/// Sum of local scores over all nodes.
double score_dag(CountingScorer& scorer, const Dag& g);

}  // namespace sges
