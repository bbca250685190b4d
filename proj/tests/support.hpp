#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "sges/bayesnet.hpp"
#include "sges/graph.hpp"

namespace sges::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Edges between every pair of a random order, each kept with probability p.
inline Dag random_order_dag(int n, double p, Rng& rng) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Dag g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, p)) g.add_edge(order[i], order[j]);
  return g;
}

inline NodeSet random_subset(NodeSet universe, Rng& rng, double p = 0.5) {
  NodeSet out;
  for (NodeId v : universe)
    if (coin(rng, p)) out.insert(v);
  return out;
}

/// Reverses up to `rounds` randomly chosen covered edges; the result stays in
/// g's class.
inline Dag shuffle_within_class(Dag g, int rounds, Rng& rng) {
  for (int r = 0; r < rounds; ++r) {
    std::vector<std::pair<NodeId, NodeId>> cov;
    for (const auto& [a, b] : g.edges())
      if (covered(g, a, b)) cov.push_back({a, b});
    if (cov.empty()) break;
    const auto [a, b] = cov[uniform_int(rng, 0, static_cast<int>(cov.size()) - 1)];
    g.reverse_edge(a, b);
  }
  return g;
}

/// A DAG h with g <= h: extra edges along a topological order of g, then a
/// walk inside h's class.
inline Dag random_supergraph(const Dag& g, double p, Rng& rng) {
  Dag h = g;
  const std::vector<NodeId> order = g.topological_order();
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!h.adjacent(order[i], order[j]) && coin(rng, p)) h.add_edge(order[i], order[j]);
  return shuffle_within_class(h, uniform_int(rng, 0, 4), rng);
}

/// Chordal by construction: each new vertex joins a random subset of an
/// existing clique.
inline std::vector<NodeSet> random_chordal_graph(int n, Rng& rng) {
  std::vector<NodeSet> nbr(n);
  std::vector<NodeSet> cliques;
  for (NodeId v = 0; v < n; ++v) {
    NodeSet joined;
    if (!cliques.empty() && coin(rng, 0.85)) {
      const NodeSet base = cliques[uniform_int(rng, 0, static_cast<int>(cliques.size()) - 1)];
      joined = random_subset(base, rng, 0.7);
    }
    for (NodeId u : joined) {
      nbr[v].insert(u);
      nbr[u].insert(v);
    }
    cliques.push_back(joined.with(v));
  }
  return nbr;
}

inline bool brute_is_clique(const std::vector<NodeSet>& nbr, NodeSet s) {
  for (NodeId a : s)
    if (!s.without(a).is_subset_of(nbr[a])) return false;
  return true;
}

inline std::vector<NodeSet> brute_maximal_cliques(const std::vector<NodeSet>& nbr, NodeSet nodes) {
  std::vector<NodeSet> all;
  for_each_subset(nodes, nodes.size(), [&](NodeSet s) {
    if (!s.empty() && brute_is_clique(nbr, s)) all.push_back(s);
  });
  std::vector<NodeSet> maximal;
  for (NodeSet s : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](NodeSet t) {
      return t != s && s.is_subset_of(t);
    });
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

/// All joint states, node 0 slowest, with their probability as a direct
/// product of table entries.
inline std::vector<std::pair<std::vector<int>, double>> brute_states(const DiscreteBayesNet& bn) {
  const int n = bn.node_count();
  std::vector<std::pair<std::vector<int>, double>> out;
  std::vector<int> x(n, 0);
  while (true) {
    double p = 1.0;
    for (NodeId v = 0; v < n; ++v) {
      std::size_t row = 0;
      for (NodeId u : bn.dag().parents(v)) row = row * bn.cardinality(u) + x[u];
      p *= bn.cpt(v)[row * bn.cardinality(v) + x[v]];
    }
    out.push_back({x, p});
    int i = n - 1;
    while (i >= 0 && ++x[i] == bn.cardinality(i)) x[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

/// N * sum P(x, pa) ln P(x | pa) - (ln N)/2 * (r - 1) * prod r_pa, computed
/// from marginal sums over brute_states.
inline double brute_oracle_score(const DiscreteBayesNet& bn, NodeId child, NodeSet parents,
                                 double big_n) {
  std::vector<std::pair<std::vector<int>, double>> states = brute_states(bn);
  std::vector<double> joint_xp;
  std::vector<double> joint_p;
  std::size_t configs = 1;
  for (NodeId u : parents) configs *= bn.cardinality(u);
  const int r = bn.cardinality(child);
  joint_xp.assign(configs * r, 0.0);
  joint_p.assign(configs, 0.0);
  for (const auto& [x, p] : states) {
    std::size_t row = 0;
    for (NodeId u : parents) row = row * bn.cardinality(u) + x[u];
    joint_xp[row * r + x[child]] += p;
    joint_p[row] += p;
  }
  double ll = 0.0;
  for (std::size_t row = 0; row < configs; ++row)
    for (int k = 0; k < r; ++k) {
      const double pxy = joint_xp[row * r + k];
      if (pxy > 0.0) ll += pxy * std::log(pxy / joint_p[row]);
    }
  return big_n * ll - std::log(big_n) / 2.0 * static_cast<double>((r - 1) * configs);
}

inline Pdag undirected_graph(int n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  Pdag p(n);
  for (const auto& [a, b] : edges) p.add_undirected(a, b);
  return p;
}

}  // namespace sges::testing
