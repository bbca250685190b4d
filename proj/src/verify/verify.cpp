#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "sges/errors.hpp"
#include "sges/verify.hpp"

namespace sges::verify {

namespace {

void guard(int n, int limit, const char* what) {
  if (n > limit)
    throw TooLarge(std::string(what) + ": " + std::to_string(n) + " nodes exceeds limit of " +
                   std::to_string(limit));
}

// Backtracks over orientations of `free_edges`, starting from the directed
// edges in `base`. Prunes as soon as a collider with nonadjacent parents
// appears that is not in `allowed`.
std::vector<Dag> orientations(const Dag& base, const std::vector<NodePair>& free_edges,
                              const std::vector<NodePair>& skeleton_edges,
                              const std::vector<VStructure>& allowed) {
  const int n = base.node_count();
  std::vector<NodeSet> adjacency(n);
  for (const auto& [a, b] : skeleton_edges) {
    adjacency[a].insert(b);
    adjacency[b].insert(a);
  }
  auto creates_foreign_collider = [&](const Dag& g, NodeId from, NodeId to) {
    for (NodeId p : g.parents(to)) {
      if (p == from || adjacency[p].contains(from)) continue;
      const VStructure v{std::min(p, from), to, std::max(p, from)};
      if (!std::binary_search(allowed.begin(), allowed.end(), v)) return true;
    }
    return false;
  };

  std::vector<Dag> out;
  Dag current = base;
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == free_edges.size()) {
      if (v_structures(current) == allowed) out.push_back(current);
      return;
    }
    const auto [a, b] = free_edges[i];
    for (const auto& [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!current.can_add_edge(from, to) || creates_foreign_collider(current, from, to))
        continue;
      current.add_edge(from, to);
      recurse(i + 1);
      current.remove_edge(from, to);
    }
  };
  recurse(0);
  return out;
}

}  // namespace

EquivalenceClass enumerate_class(const Cpdag& c) {
  guard(c.node_count(), kMaxBruteNodes, "enumerate_class");
  Dag base(c.node_count());
  for (const auto& [from, to] : c.pdag().directed_edges()) base.add_edge(from, to);
  return {orientations(base, c.pdag().undirected_edges(), skeleton(c.pdag()),
                       v_structures(c.pdag()))};
}

EquivalenceClass enumerate_class(const Dag& g) {
  guard(g.node_count(), kMaxBruteNodes, "enumerate_class");
  const std::vector<NodePair> edges = skeleton(g);
  return {orientations(Dag(g.node_count()), edges, edges, v_structures(g))};
}

Pdag labeling_from_class(const EquivalenceClass& cls) {
  if (cls.members.empty()) throw std::invalid_argument("labeling_from_class: empty class");
  const Dag& first = cls.members.front();
  Pdag out(first.node_count());
  for (const auto& [from, to] : first.edges()) {
    const bool same_everywhere = std::all_of(cls.members.begin(), cls.members.end(),
                                             [&](const Dag& m) { return m.has_edge(from, to); });
    if (same_everywhere)
      out.add_directed(from, to);
    else
      out.add_undirected(from, to);
  }
  return out;
}

std::vector<Dag> enumerate_dags(int n) {
  guard(n, kMaxEnumeratedDagNodes, "enumerate_dags");
  std::vector<NodePair> pairs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<Dag> out;
  Dag current(n);
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == pairs.size()) {
      out.push_back(current);
      return;
    }
    recurse(i + 1);
    const auto [a, b] = pairs[i];
    for (const auto& [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!current.can_add_edge(from, to)) continue;
      current.add_edge(from, to);
      recurse(i + 1);
      current.remove_edge(from, to);
    }
  };
  recurse(0);
  return out;
}

bool brute_dsep(const Dag& g, const IndependenceQuery& q) {
  guard(g.node_count(), kMaxBruteNodes, "brute_dsep");
  validate(q, g.node_count());
  const int n = g.node_count();
  std::vector<NodeSet> descendants_or_self(n);
  for (NodeId v = 0; v < n; ++v) descendants_or_self[v] = g.descendants(v).with(v);

  auto interior_active = [&](NodeId prev, NodeId mid, NodeId next) {
    const bool collider = g.has_edge(prev, mid) && g.has_edge(next, mid);
    if (collider) return descendants_or_self[mid].intersects(q.s);
    return !q.s.contains(mid);
  };

  // Depth-first over simple paths; each interior node is checked once its
  // successor is known.
  std::vector<NodeId> path{q.a};
  NodeSet on_path{q.a};
  std::function<bool()> search = [&]() -> bool {
    const NodeId last = path.back();
    for (NodeId next : g.adjacents(last)) {
      if (on_path.contains(next)) continue;
      if (path.size() >= 2 && !interior_active(path[path.size() - 2], last, next)) continue;
      if (next == q.b) return true;
      path.push_back(next);
      on_path.insert(next);
      const bool found = search();
      path.pop_back();
      on_path.erase(next);
      if (found) return true;
    }
    return false;
  };
  return !search();
}

std::set<Cpdag> brute_deletes(const Cpdag& c) {
  guard(c.node_count(), kMaxDeleteNodes, "brute_deletes");
  std::set<Cpdag> out;
  for (const Dag& member : enumerate_class(c).members) {
    for (const auto& [from, to] : member.edges()) {
      Dag smaller = member;
      smaller.remove_edge(from, to);
      out.insert(cpdag_from_dag(smaller));
    }
  }
  return out;
}

bool pi_consistent(const Cpdag& c, const DeleteOp& op, ComplexityProperty p) {
  const Cpdag after = apply_delete(c, op);
  const NodeSet region = common_descendants(after, op.x, op.y).with(op.x).with(op.y);
  return property_holds(induced_subgraph(after.pdag(), region), p);
}

std::vector<DeleteOp> pi_consistent_filter(const Cpdag& c, const std::vector<DeleteOp>& ops,
                                           ComplexityProperty p) {
  std::vector<DeleteOp> kept;
  for (const DeleteOp& op : ops)
    if (pi_consistent(c, op, p)) kept.push_back(op);
  return kept;
}

}  // namespace sges::verify
