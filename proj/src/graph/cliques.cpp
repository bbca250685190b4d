#include <algorithm>
#include <string>

#include "sges/errors.hpp"
#include "sges/graph.hpp"

namespace sges {

// Maximum-cardinality search over the undirected edges inside `nodes`. For a
// chordal graph the reverse visit order is a perfect elimination ordering,
// so each vertex together with its previously visited neighbours is a clique
// and every maximal clique arises that way.
std::vector<NodeSet> maximal_cliques_chordal(NodeSet nodes,
                                             const std::vector<NodeSet>& neighbors) {
  const int n = static_cast<int>(neighbors.size());
  if (!nodes.is_subset_of(NodeSet::first(n)))
    throw std::invalid_argument("maximal_cliques_chordal: nodes outside domain");

  std::vector<int> weight(n, 0);
  NodeSet unvisited = nodes;
  NodeSet visited;
  std::vector<NodeSet> candidates;
  candidates.reserve(nodes.size());

  while (!unvisited.empty()) {
    NodeId next = unvisited.front();
    for (NodeId v : unvisited)
      if (weight[v] > weight[next]) next = v;

    const NodeSet earlier = neighbors[next] & visited;
    for (NodeId u : earlier) {
      if (!earlier.without(u).is_subset_of(neighbors[u]))
        throw NotChordal("undirected subgraph over " + nodes.to_string() +
                         " is not chordal (at node " + std::to_string(next) + ")");
    }
    candidates.push_back(earlier.with(next));

    visited.insert(next);
    unvisited.erase(next);
    for (NodeId u : neighbors[next] & unvisited) ++weight[u];
  }

  std::vector<NodeSet> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = candidates[i].is_subset_of(candidates[j]) &&
                  (candidates[i] != candidates[j] || j < i);
    }
    if (!dominated) maximal.push_back(candidates[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<NodeSet> maximal_cliques_chordal(NodeSet nodes, const Cpdag& c) {
  std::vector<NodeSet> neighbors(c.node_count());
  for (NodeId v = 0; v < c.node_count(); ++v) neighbors[v] = c.neighbors(v);
  return maximal_cliques_chordal(nodes, neighbors);
}

namespace {

void bron_kerbosch(const std::vector<NodeSet>& adjacency, NodeSet current,
                   NodeSet candidates, NodeSet excluded, int& best) {
  if (candidates.empty()) {
    if (excluded.empty()) best = std::max(best, current.size());
    return;
  }
  if (current.size() + candidates.size() <= best) return;

  NodeId pivot = (candidates | excluded).front();
  int pivot_degree = -1;
  for (NodeId u : candidates | excluded) {
    const int degree = (adjacency[u] & candidates).size();
    if (degree > pivot_degree) {
      pivot = u;
      pivot_degree = degree;
    }
  }
  for (NodeId v : candidates - adjacency[pivot]) {
    bron_kerbosch(adjacency, current.with(v), candidates & adjacency[v],
                  excluded & adjacency[v], best);
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace

int max_clique_within(const std::vector<NodeSet>& adjacency, NodeSet within) {
  int best = 0;
  bron_kerbosch(adjacency, NodeSet{}, within, NodeSet{}, best);
  return best;
}

bool is_clique(const Pdag& g, NodeSet nodes) {
  for (NodeId v : nodes)
    if (!nodes.without(v).is_subset_of(g.adjacents(v))) return false;
  return true;
}

}  // namespace sges
