#include <stdexcept>
#include <string>
#include <vector>

#include "sges/dsep.hpp"

namespace sges {

namespace {

void require_same_size(const Dag& g, const Dag& h, const char* what) {
  if (g.node_count() != h.node_count())
    throw std::invalid_argument(std::string(what) + ": node counts differ (" +
                                std::to_string(g.node_count()) + " vs " +
                                std::to_string(h.node_count()) + ")");
}

}  // namespace

void validate(const IndependenceQuery& q, int node_count) {
  if (q.a < 0 || q.a >= node_count || q.b < 0 || q.b >= node_count)
    throw std::invalid_argument("query endpoint outside domain");
  if (q.a == q.b) throw std::invalid_argument("query endpoints must differ");
  if (q.s.contains(q.a) || q.s.contains(q.b))
    throw std::invalid_argument("query endpoint inside conditioning set");
  if (!q.s.is_subset_of(NodeSet::first(node_count)))
    throw std::invalid_argument("conditioning set outside domain");
}

NodeSet d_connected(const Dag& g, NodeId source, NodeSet given) {
  const NodeSet given_or_ancestor = g.ancestors_of(given);
  // visited_up: reached from a child; visited_down: reached from a parent.
  NodeSet visited_up;
  NodeSet visited_down;
  NodeSet reached;
  std::vector<std::pair<NodeId, bool>> stack{{source, true}};
  while (!stack.empty()) {
    const auto [v, up] = stack.back();
    stack.pop_back();
    NodeSet& visited = up ? visited_up : visited_down;
    if (visited.contains(v)) continue;
    visited.insert(v);
    const bool observed = given.contains(v);
    if (!observed) reached.insert(v);

    if (up) {
      if (observed) continue;
      for (NodeId p : g.parents(v)) stack.emplace_back(p, true);
      for (NodeId c : g.children(v)) stack.emplace_back(c, false);
    } else {
      if (!observed)
        for (NodeId c : g.children(v)) stack.emplace_back(c, false);
      if (given_or_ancestor.contains(v))
        for (NodeId p : g.parents(v)) stack.emplace_back(p, true);
    }
  }
  return reached.without(source);
}

bool d_separated(const Dag& g, const IndependenceQuery& q) {
  validate(q, g.node_count());
  return !d_connected(g, q.a, q.s).contains(q.b);
}

bool is_imap(const Dag& g, const Dag& h) {
  require_same_size(g, h, "is_imap");
  for (NodeId y = 0; y < h.node_count(); ++y) {
    const NodeSet pa = h.parents(y);
    const NodeSet must_be_separated = h.nodes() - h.descendants(y).with(y) - pa;
    if (must_be_separated.empty()) continue;
    if (d_connected(g, y, pa).intersects(must_be_separated)) return false;
  }
  return true;
}

bool deletable(const Dag& g, const Dag& h, NodeId x, NodeId y) {
  require_same_size(g, h, "deletable");
  if (!h.has_edge(x, y))
    throw std::invalid_argument("deletable: missing edge " + std::to_string(x) +
                                "->" + std::to_string(y));
  return d_separated(g, {y, x, h.parents(y).without(x)});
}

NodeSet prune(const Dag& g, const Dag& h) {
  require_same_size(g, h, "prune");
  NodeSet remaining = g.nodes();
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v : remaining) {
      const bool sink = !g.children(v).intersects(remaining) &&
                        !h.children(v).intersects(remaining);
      if (sink && (g.parents(v) & remaining) == (h.parents(v) & remaining)) {
        remaining.erase(v);
        changed = true;
      }
    }
  }
  return remaining;
}

}  // namespace sges
