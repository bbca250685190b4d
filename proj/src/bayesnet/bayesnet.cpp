#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "sges/bayesnet.hpp"
#include "sges/dsep.hpp"
#include "sges/errors.hpp"

namespace sges {

DiscreteBayesNet::DiscreteBayesNet(Dag dag, std::vector<int> cardinalities,
                                   std::vector<std::vector<double>> cpts)
    : dag_(std::move(dag)),
      cardinalities_(std::move(cardinalities)),
      cpts_(std::move(cpts)) {
  const int n = dag_.node_count();
  if (static_cast<int>(cardinalities_.size()) != n || static_cast<int>(cpts_.size()) != n)
    throw std::invalid_argument("bayes net: cardinality/cpt count does not match node count");
  for (NodeId v = 0; v < n; ++v) {
    if (cardinalities_[v] < 1)
      throw std::invalid_argument("bayes net: cardinality of node " + std::to_string(v) +
                                  " must be positive");
  }
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t r = cardinalities_[v];
    if (cpts_[v].size() != row_count(v) * r)
      throw std::invalid_argument("bayes net: cpt of node " + std::to_string(v) +
                                  " has " + std::to_string(cpts_[v].size()) +
                                  " entries, expected " + std::to_string(row_count(v) * r));
    for (std::size_t row = 0; row < row_count(v); ++row) {
      double sum = 0.0;
      for (std::size_t s = 0; s < r; ++s) {
        const double p = cpts_[v][row * r + s];
        if (!(p >= 0.0 && p <= 1.0))
          throw std::invalid_argument("bayes net: probability outside [0,1] at node " +
                                      std::to_string(v));
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("bayes net: row " + std::to_string(row) + " of node " +
                                    std::to_string(v) + " does not sum to 1");
    }
  }
}

std::size_t DiscreteBayesNet::row_count(NodeId v) const {
  std::size_t rows = 1;
  for (NodeId p : dag_.parents(v)) rows *= cardinalities_[p];
  return rows;
}

std::size_t DiscreteBayesNet::row_index(NodeId v, const std::vector<int>& states) const {
  std::size_t row = 0;
  for (NodeId p : dag_.parents(v)) row = row * cardinalities_[p] + states[p];
  return row;
}

// ---------------------------------------------------------------------------
// Generation

Dag random_dag(int n, int max_parents, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_dag: n must be >= 1");
  if (max_parents < 0) throw std::invalid_argument("random_dag: max_parents must be >= 0");
  std::mt19937_64 rng(seed);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::bernoulli_distribution attempt(edge_prob);
  std::bernoulli_distribution coin(0.5);
  Dag g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const NodeId a = perm[i];
      const NodeId b = perm[j];
      if (!attempt(rng)) continue;
      const bool a_to_b = g.can_add_edge(a, b) && g.parents(b).size() < max_parents;
      const bool b_to_a = g.can_add_edge(b, a) && g.parents(a).size() < max_parents;
      if (a_to_b && b_to_a) {
        if (coin(rng))
          g.add_edge(a, b);
        else
          g.add_edge(b, a);
      } else if (a_to_b) {
        g.add_edge(a, b);
      } else if (b_to_a) {
        g.add_edge(b, a);
      }
    }
  }
  return g;
}

DiscreteBayesNet sample_parameters(const Dag& g, const std::vector<int>& cardinalities,
                                   double ess, std::uint64_t seed) {
  if (!(ess > 0.0)) throw std::invalid_argument("sample_parameters: ess must be positive");
  if (static_cast<int>(cardinalities.size()) != g.node_count())
    throw std::invalid_argument("sample_parameters: one cardinality per node required");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> cpts(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const int r = cardinalities[v];
    if (r < 1) throw std::invalid_argument("sample_parameters: cardinality must be positive");
    std::size_t rows = 1;
    for (NodeId p : g.parents(v)) rows *= cardinalities.at(p);
    std::gamma_distribution<double> gamma(ess / r, 1.0);
    auto& table = cpts[v];
    table.resize(rows * r);
    for (std::size_t row = 0; row < rows; ++row) {
      double total = 0.0;
      // Small shapes can underflow every draw to zero; redraw in that case.
      while (!(total > 0.0)) {
        total = 0.0;
        for (int s = 0; s < r; ++s) total += table[row * r + s] = gamma(rng);
      }
      for (int s = 0; s < r; ++s) table[row * r + s] /= total;
      // Fold rounding residue into the largest cell so the row sums to 1.
      double sum = 0.0;
      for (int s = 0; s < r; ++s) sum += table[row * r + s];
      auto* largest = &*std::max_element(table.begin() + row * r, table.begin() + (row + 1) * r);
      *largest += 1.0 - sum;
    }
  }
  return DiscreteBayesNet(g, cardinalities, std::move(cpts));
}

// ---------------------------------------------------------------------------
// Exact inference by joint enumeration

std::vector<std::size_t> JointTable::strides() const {
  std::vector<std::size_t> out(cardinalities.size());
  std::size_t stride = 1;
  for (std::size_t i = cardinalities.size(); i-- > 0;) {
    out[i] = stride;
    stride *= cardinalities[i];
  }
  return out;
}

JointTable joint_distribution(const DiscreteBayesNet& bn, std::size_t limit) {
  const int n = bn.node_count();
  std::size_t size = 1;
  for (int r : bn.cardinalities()) {
    if (size > limit / static_cast<std::size_t>(r))
      throw StateSpaceTooLarge("joint table over " + std::to_string(n) +
                               " variables exceeds limit of " + std::to_string(limit));
    size *= r;
  }
  JointTable joint{bn.cardinalities(), std::vector<double>(size)};
  std::vector<int> states(n, 0);
  for (std::size_t index = 0; index < size; ++index) {
    double p = 1.0;
    for (NodeId v = 0; v < n && p != 0.0; ++v)
      p *= bn.probability(v, bn.row_index(v, states), states[v]);
    joint.values[index] = p;
    for (int v = n - 1; v >= 0; --v) {
      if (++states[v] < bn.cardinality(v)) break;
      states[v] = 0;
    }
  }
  return joint;
}

Table JointTable::marginal(NodeSet vars) const {
  const int n = static_cast<int>(cardinalities.size());
  if (!vars.is_subset_of(NodeSet::first(n)))
    throw std::invalid_argument("marginal: variables outside domain");
  Table out;
  out.variables = vars.to_vector();
  std::size_t size = 1;
  for (NodeId v : out.variables) {
    out.cardinalities.push_back(cardinalities[v]);
    size *= cardinalities[v];
  }
  out.values.assign(size, 0.0);

  // Sub-index stride for each joint variable (0 when summed out).
  std::vector<std::size_t> sub_stride(n, 0);
  std::size_t stride = 1;
  for (std::size_t i = out.variables.size(); i-- > 0;) {
    sub_stride[out.variables[i]] = stride;
    stride *= out.cardinalities[i];
  }
  std::vector<int> states(n, 0);
  std::size_t sub = 0;
  for (double p : values) {
    out.values[sub] += p;
    for (int v = n - 1; v >= 0; --v) {
      if (++states[v] < cardinalities[v]) {
        sub += sub_stride[v];
        break;
      }
      sub -= sub_stride[v] * (cardinalities[v] - 1);
      states[v] = 0;
    }
  }
  return out;
}

Table marginal(const DiscreteBayesNet& bn, NodeSet vars, std::size_t limit) {
  return joint_distribution(bn, limit).marginal(vars);
}

ConditionalTable conditional(const JointTable& joint, NodeId child, NodeSet parents) {
  if (parents.contains(child))
    throw std::invalid_argument("conditional: child listed among its parents");
  const Table table = joint.marginal(parents.with(child));
  ConditionalTable out;
  out.child = child;
  out.parents = parents.to_vector();
  out.child_cardinality = joint.cardinalities.at(child);

  // Marginal order is sorted over parents + child; walk configurations of the
  // parents (lowest index slowest) and gather the child's column.
  const int r = out.child_cardinality;
  std::vector<std::size_t> stride(table.variables.size());
  std::size_t s = 1;
  for (std::size_t i = table.variables.size(); i-- > 0;) {
    stride[i] = s;
    s *= table.cardinalities[i];
  }
  std::size_t child_pos = 0;
  while (table.variables[child_pos] != child) ++child_pos;

  std::size_t rows = 1;
  for (NodeId p : out.parents) rows *= joint.cardinalities[p];
  std::vector<int> config(out.parents.size(), 0);
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t base = 0;
    for (std::size_t i = 0, pi = 0; i < table.variables.size(); ++i) {
      if (i == child_pos) continue;
      base += stride[i] * config[pi++];
    }
    std::vector<double> dist(r);
    double total = 0.0;
    for (int x = 0; x < r; ++x) total += dist[x] = table.values[base + stride[child_pos] * x];
    const bool zero = !(total > 0.0);
    for (int x = 0; x < r; ++x) dist[x] = zero ? 1.0 / r : dist[x] / total;
    out.rows.push_back(std::move(dist));
    out.zero_probability.push_back(zero);
    for (std::size_t i = config.size(); i-- > 0;) {
      if (++config[i] < joint.cardinalities[out.parents[i]]) break;
      config[i] = 0;
    }
  }
  return out;
}

ConditionalTable conditional(const DiscreteBayesNet& bn, NodeId child, NodeSet parents,
                             std::size_t limit) {
  return conditional(joint_distribution(bn, limit), child, parents);
}

// ---------------------------------------------------------------------------
// Sampling

DataMatrix sample_data(const DiscreteBayesNet& bn, std::size_t m, std::uint64_t seed) {
  const int n = bn.node_count();
  DataMatrix data;
  data.columns = n;
  data.cells.resize(m * static_cast<std::size_t>(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<NodeId> order = bn.dag().topological_order();
  std::vector<int> states(n, 0);
  for (std::size_t row = 0; row < m; ++row) {
    for (NodeId v : order) {
      const std::size_t cpt_row = bn.row_index(v, states);
      const double u = unit(rng);
      const int r = bn.cardinality(v);
      int x = 0;
      double cumulative = bn.probability(v, cpt_row, 0);
      while (x + 1 < r && u >= cumulative) cumulative += bn.probability(v, cpt_row, ++x);
      states[v] = x;
    }
    std::copy(states.begin(), states.end(), data.cells.begin() + row * n);
  }
  return data;
}

// ---------------------------------------------------------------------------
// Faithfulness diagnostics

namespace {

double entropy(const Table& t) {
  double h = 0.0;
  for (double p : t.values)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

}  // namespace

double conditional_mutual_information(const JointTable& joint, NodeId a, NodeId b, NodeSet s) {
  // I(a;b|s) = H(a,s) + H(b,s) - H(a,b,s) - H(s)
  const double cmi = entropy(joint.marginal(s.with(a))) + entropy(joint.marginal(s.with(b))) -
                     entropy(joint.marginal(s.with(a).with(b))) - entropy(joint.marginal(s));
  return std::max(cmi, 0.0);
}

FaithfulnessReport check_faithfulness(const DiscreteBayesNet& bn, double threshold,
                                      int max_conditioning) {
  const JointTable joint = joint_distribution(bn);
  const Dag& g = bn.dag();
  FaithfulnessReport report;
  report.min_dependence = std::numeric_limits<double>::infinity();
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b = a + 1; b < g.node_count(); ++b) {
      const NodeSet rest = g.nodes().without(a).without(b);
      for_each_subset(rest, max_conditioning, [&](NodeSet s) {
        if (d_separated(g, {a, b, s})) return;
        const double cmi = conditional_mutual_information(joint, a, b, s);
        if (cmi < report.min_dependence) {
          report.min_dependence = cmi;
          report.a = a;
          report.b = b;
          report.given = s;
        }
      });
    }
  }
  report.flagged = report.min_dependence < threshold;
  return report;
}

}  // namespace sges
