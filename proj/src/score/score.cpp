#include <cmath>
#include <stdexcept>
#include <string>

#include "sges/score.hpp"

namespace sges {

namespace {

// sum p ln p, with 0 ln 0 = 0
double neg_entropy(const std::vector<double>& values) {
  double total = 0.0;
  for (double p : values)
    if (p > 0.0) total += p * std::log(p);
  return total;
}

void check_key(int node_count, NodeId child, NodeSet parents) {
  if (child < 0 || child >= node_count)
    throw std::invalid_argument("local score: child " + std::to_string(child) +
                                " outside domain");
  if (parents.contains(child))
    throw std::invalid_argument("local score: child among its own parents");
  if (!parents.is_subset_of(NodeSet::first(node_count)))
    throw std::invalid_argument("local score: parent outside domain");
}

}  // namespace

double free_parameters(const std::vector<int>& cardinalities, NodeId child, NodeSet parents) {
  double q = cardinalities.at(child) - 1;
  for (NodeId p : parents) q *= cardinalities.at(p);
  return q;
}

// ---------------------------------------------------------------------------

OracleMdl::OracleMdl(DiscreteBayesNet bn, double n_effective, std::size_t joint_limit)
    : bn_(std::move(bn)), n_effective_(n_effective) {
  if (!(n_effective_ > 1.0))
    throw std::invalid_argument("oracle score: effective sample size must exceed 1");
  joint_ = joint_distribution(bn_, joint_limit);
}

double OracleMdl::local_score(NodeId child, NodeSet parents) const {
  check_key(node_count(), child, parents);
  // Expected log-likelihood per record: sum P(x,pa) ln P(x,pa) - sum P(pa) ln P(pa)
  const double per_record = neg_entropy(joint_.marginal(parents.with(child)).values) -
                            neg_entropy(joint_.marginal(parents).values);
  return n_effective_ * per_record -
         0.5 * std::log(n_effective_) * free_parameters(bn_.cardinalities(), child, parents);
}

// ---------------------------------------------------------------------------

EmpiricalBic::EmpiricalBic(DataMatrix data, std::vector<int> cardinalities)
    : data_(std::move(data)), cardinalities_(std::move(cardinalities)) {
  if (data_.columns <= 0 || data_.rows() == 0)
    throw std::invalid_argument("BIC score: data set is empty");
  if (static_cast<int>(cardinalities_.size()) != data_.columns)
    throw std::invalid_argument("BIC score: " + std::to_string(cardinalities_.size()) +
                                " cardinalities for " + std::to_string(data_.columns) +
                                " columns");
  for (std::size_t row = 0; row < data_.rows(); ++row) {
    for (int c = 0; c < data_.columns; ++c) {
      const int x = data_.at(row, c);
      if (x < 0 || x >= cardinalities_[c])
        throw std::invalid_argument("BIC score: value " + std::to_string(x) + " in row " +
                                    std::to_string(row) + ", column " + std::to_string(c) +
                                    " outside cardinality " +
                                    std::to_string(cardinalities_[c]));
    }
  }
}

double EmpiricalBic::local_score(NodeId child, NodeSet parents) const {
  check_key(node_count(), child, parents);
  const std::vector<NodeId> pa = parents.to_vector();
  std::size_t configs = 1;
  for (NodeId p : pa) configs *= cardinalities_[p];
  const int r = cardinalities_[child];

  std::vector<double> joint_counts(configs * r, 0.0);
  for (std::size_t row = 0; row < data_.rows(); ++row) {
    std::size_t config = 0;
    for (NodeId p : pa) config = config * cardinalities_[p] + data_.at(row, p);
    joint_counts[config * r + data_.at(row, child)] += 1.0;
  }
  double log_likelihood = 0.0;
  for (std::size_t config = 0; config < configs; ++config) {
    double total = 0.0;
    for (int x = 0; x < r; ++x) {
      const double count = joint_counts[config * r + x];
      if (count > 0.0) log_likelihood += count * std::log(count);
      total += count;
    }
    if (total > 0.0) log_likelihood -= total * std::log(total);
  }
  const double m = sample_size();
  return log_likelihood - 0.5 * std::log(m) * free_parameters(cardinalities_, child, parents);
}

// ---------------------------------------------------------------------------

CountingScorer::CountingScorer(std::shared_ptr<const ScoreBackend> backend)
    : backend_(std::move(backend)) {
  if (!backend_) throw std::invalid_argument("CountingScorer: null backend");
}

double CountingScorer::local_score(const LocalKey& key) {
  if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
  const double value = backend_->local_score(key.child, key.parents);
  cache_.emplace(key, value);
  return value;
}

void CountingScorer::reset() { cache_.clear(); }

double score_dag(CountingScorer& scorer, const Dag& g) {
  if (g.node_count() != scorer.node_count())
    throw std::invalid_argument("score_dag: graph and scorer domains differ");
  double total = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) total += scorer.local_score(v, g.parents(v));
  return total;
}

}  // namespace sges
