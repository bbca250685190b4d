#include <algorithm>
#include <stdexcept>

#include "sges/graph.hpp"

namespace sges {

namespace {

std::vector<NodeSet> skeleton_adjacency(const Dag& g) {
  std::vector<NodeSet> adjacency(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) adjacency[v] = g.adjacents(v);
  return adjacency;
}

}  // namespace

int max_parents(const Dag& g) {
  int best = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.parents(v).size());
  return best;
}

int max_clique_size(const Dag& g) {
  return max_clique_within(skeleton_adjacency(g), g.nodes());
}

int v_width(const Dag& g) {
  const std::vector<NodeSet> adjacency = skeleton_adjacency(g);
  int best = 0;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    for (NodeId y = x + 1; y < g.node_count(); ++y) {
      if (g.adjacent(x, y)) continue;
      const NodeSet shared = g.children(x) & g.children(y);
      if (shared.size() > best) best = std::max(best, max_clique_within(adjacency, shared));
    }
  }
  return best;
}

int ComplexityProperty::clique_bound() const {
  switch (kind) {
    case Kind::MaxParents:
      return std::max(k - 1, 0);
    case Kind::MaxClique:
    case Kind::VWidth:
      return k;
  }
  throw std::logic_error("unknown property kind");
}

std::string ComplexityProperty::to_string() const {
  switch (kind) {
    case Kind::MaxParents:
      return "ps:" + std::to_string(k);
    case Kind::MaxClique:
      return "cl:" + std::to_string(k);
    case Kind::VWidth:
      return "vw:" + std::to_string(k);
  }
  throw std::logic_error("unknown property kind");
}

int measure(const Dag& g, ComplexityProperty::Kind kind) {
  switch (kind) {
    case ComplexityProperty::Kind::MaxParents:
      return max_parents(g);
    case ComplexityProperty::Kind::MaxClique:
      return max_clique_size(g);
    case ComplexityProperty::Kind::VWidth:
      return v_width(g);
  }
  throw std::logic_error("unknown property kind");
}

bool property_holds(const Dag& g, ComplexityProperty p) { return measure(g, p.kind) <= p.k; }

bool property_holds(const Pdag& g, ComplexityProperty p) {
  return property_holds(consistent_extension(g), p);
}

}  // namespace sges
