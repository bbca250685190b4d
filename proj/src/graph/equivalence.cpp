#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sges/errors.hpp"
#include "sges/graph.hpp"

namespace sges {

namespace {

template <typename Graph>
std::vector<NodePair> skeleton_of(const Graph& g) {
  std::vector<NodePair> out;
  for (NodeId a = 0; a < g.node_count(); ++a)
    for (NodeId b : g.adjacents(a))
      if (a < b) out.emplace_back(a, b);
  return out;
}

template <typename Graph>
std::vector<VStructure> v_structures_of(const Graph& g) {
  std::vector<VStructure> out;
  for (NodeId z = 0; z < g.node_count(); ++z) {
    const NodeSet pa = g.parents(z);
    for (NodeId x : pa)
      for (NodeId y : pa)
        if (x < y && !g.adjacent(x, y)) out.push_back({x, z, y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Label : std::uint8_t { Unknown, Compelled, Reversible };

}  // namespace

std::vector<NodePair> skeleton(const Dag& g) { return skeleton_of(g); }
std::vector<NodePair> skeleton(const Pdag& g) { return skeleton_of(g); }
std::vector<VStructure> v_structures(const Dag& g) { return v_structures_of(g); }
std::vector<VStructure> v_structures(const Pdag& g) { return v_structures_of(g); }

bool equivalent(const Dag& g1, const Dag& g2) {
  if (g1.node_count() != g2.node_count())
    throw std::invalid_argument("equivalent: node counts differ (" +
                                std::to_string(g1.node_count()) + " vs " +
                                std::to_string(g2.node_count()) + ")");
  return skeleton(g1) == skeleton(g2) && v_structures(g1) == v_structures(g2);
}

// Edge-ordering and compelled-labelling procedure. Edges are visited by
// increasing topological position of the head, and for each head by
// decreasing position of the tail.
Cpdag cpdag_from_dag(const Dag& dag) {
  const int n = dag.node_count();
  const std::vector<NodeId> order = dag.topological_order();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<Label> label(static_cast<std::size_t>(n) * n, Label::Unknown);
  auto at = [&](NodeId from, NodeId to) -> Label& {
    return label[static_cast<std::size_t>(from) * n + to];
  };
  auto label_into = [&](NodeId y, Label value, bool only_unknown) {
    for (NodeId p : dag.parents(y))
      if (!only_unknown || at(p, y) == Label::Unknown) at(p, y) = value;
  };

  for (NodeId y : order) {
    std::vector<NodeId> tails = dag.parents(y).to_vector();
    std::sort(tails.begin(), tails.end(),
              [&](NodeId a, NodeId b) { return position[a] > position[b]; });
    for (NodeId x : tails) {
      if (at(x, y) != Label::Unknown) continue;
      bool finished = false;
      for (NodeId w : dag.parents(x)) {
        if (at(w, x) != Label::Compelled) continue;
        if (!dag.parents(y).contains(w)) {
          label_into(y, Label::Compelled, false);
          finished = true;
          break;
        }
        at(w, y) = Label::Compelled;
      }
      if (finished) continue;
      const NodeSet others = dag.parents(y).without(x) - dag.parents(x);
      label_into(y, others.empty() ? Label::Reversible : Label::Compelled, true);
    }
  }

  Pdag out(n);
  for (const auto& [from, to] : dag.edges()) {
    if (at(from, to) == Label::Compelled)
      out.add_directed(from, to);
    else
      out.add_undirected(from, to);
  }
  return Cpdag(std::move(out));
}

// Repeatedly removes a sink whose undirected neighbours are adjacent to all
// of its other adjacents, orienting those undirected edges into it.
Dag consistent_extension(const Pdag& p) {
  const int n = p.node_count();
  Dag out(n);
  NodeSet remaining = p.nodes();
  std::vector<std::pair<NodeId, NodeId>> oriented;
  oriented.reserve(p.edge_count());

  while (!remaining.empty()) {
    NodeId chosen = -1;
    for (NodeId v : remaining) {
      if (p.children(v).intersects(remaining)) continue;
      const NodeSet adj = p.adjacents(v) & remaining;
      bool ok = true;
      for (NodeId u : p.neighbors(v) & remaining) {
        if (!(adj.without(u)).is_subset_of(p.adjacents(u))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen = v;
        break;
      }
    }
    if (chosen < 0)
      throw NoExtension("PDAG admits no consistent extension (stuck with " +
                        std::to_string(remaining.size()) + " nodes left)");
    for (NodeId u : p.adjacents(chosen) & remaining) oriented.emplace_back(u, chosen);
    remaining.erase(chosen);
  }

  // Every edge now points from a later-removed to an earlier-removed node,
  // so insertion cannot close a cycle.
  for (const auto& [from, to] : oriented) out.add_edge(from, to);
  return out;
}

Cpdag complete(const Pdag& p) { return cpdag_from_dag(consistent_extension(p)); }

Cpdag complete_cpdag(int n) {
  Pdag p(n);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) p.add_undirected(a, b);
  return Cpdag(std::move(p));
}

NodeSet neighbors_adjacent(const Cpdag& c, NodeId y, NodeId x) {
  return (c.neighbors(y) & c.adjacents(x)).without(x).without(y);
}

Dag induced_subgraph(const Dag& g, NodeSet nodes) {
  if (!nodes.is_subset_of(g.nodes()))
    throw std::invalid_argument("induced_subgraph: nodes outside domain");
  const std::vector<NodeId> members = nodes.to_vector();
  std::vector<int> index(g.node_count(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) index[members[i]] = i;
  Dag out(static_cast<int>(members.size()));
  for (NodeId to : members)
    for (NodeId from : g.parents(to) & nodes) out.add_edge(index[from], index[to]);
  return out;
}

Pdag induced_subgraph(const Pdag& g, NodeSet nodes) {
  if (!nodes.is_subset_of(g.nodes()))
    throw std::invalid_argument("induced_subgraph: nodes outside domain");
  const std::vector<NodeId> members = nodes.to_vector();
  std::vector<int> index(g.node_count(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) index[members[i]] = i;
  Pdag out(static_cast<int>(members.size()));
  for (NodeId a : members) {
    for (NodeId from : g.parents(a) & nodes) out.add_directed(index[from], index[a]);
    for (NodeId b : g.neighbors(a) & nodes)
      if (a < b) out.add_undirected(index[a], index[b]);
  }
  return out;
}

namespace {

template <typename ChildrenFn>
NodeSet directed_reach(NodeId start, ChildrenFn children) {
  NodeSet seen;
  NodeSet frontier = children(start);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.erase(u);
    if (seen.contains(u)) continue;
    seen.insert(u);
    frontier |= children(u) - seen;
  }
  return seen;
}

}  // namespace

NodeSet common_descendants(const Dag& g, NodeId x, NodeId y) {
  return (g.descendants(x) & g.descendants(y)).without(x).without(y);
}

NodeSet common_descendants(const Cpdag& c, NodeId x, NodeId y) {
  auto children = [&](NodeId v) { return c.children(v); };
  return (directed_reach(x, children) & directed_reach(y, children))
      .without(x)
      .without(y);
}

bool covered(const Dag& g, NodeId x, NodeId y) {
  if (!g.has_edge(x, y))
    throw std::invalid_argument("covered: missing edge " + std::to_string(x) +
                                "->" + std::to_string(y));
  return g.parents(y).without(x) == g.parents(x);
}

}  // namespace sges
