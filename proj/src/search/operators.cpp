#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "sges/search.hpp"

namespace sges {

namespace {

bool role_allowed(const Cpdag& c, NodeId x, NodeId y) {
  return c.has_undirected(x, y) || c.has_directed(x, y);
}

std::string describe(const DeleteOp& op) {
  return "Delete(" + std::to_string(op.x) + "," + std::to_string(op.y) + "," +
         op.h.to_string() + ")";
}

}  // namespace

bool delete_valid(const Cpdag& c, const DeleteOp& op) {
  const int n = c.node_count();
  if (op.x < 0 || op.x >= n || op.y < 0 || op.y >= n || op.x == op.y) return false;
  if (!role_allowed(c, op.x, op.y)) return false;
  const NodeSet na = neighbors_adjacent(c, op.y, op.x);
  if (!op.h.is_subset_of(na)) return false;
  return is_clique(c.pdag(), na - op.h);
}

double score_delete(CountingScorer& scorer, const Cpdag& c, const DeleteOp& op) {
  const NodeSet h_bar = neighbors_adjacent(c, op.y, op.x) - op.h;
  const NodeSet base = c.parents(op.y) | h_bar;
  return scorer.local_score(op.y, base.without(op.x)) - scorer.local_score(op.y, base.with(op.x));
}

Cpdag apply_delete(const Cpdag& c, const DeleteOp& op) {
  if (!delete_valid(c, op)) throw std::invalid_argument("invalid operator " + describe(op));
  Pdag p = c.pdag();
  p.remove_edge(op.x, op.y);
  for (NodeId h : op.h) {
    p.orient(op.y, h);
    if (p.has_undirected(op.x, h)) p.orient(op.x, h);
  }
  return complete(p);
}

std::vector<NodeSet> filter_cliques(const std::vector<NodeSet>& cliques, NodeSet universe,
                                    int s) {
  std::vector<NodeSet> kept;
  for (NodeSet ci : cliques) {
    int largest_left = 0;
    for (NodeSet cj : cliques) largest_left = std::max(largest_left, ((cj & universe) - ci).size());
    if (largest_left <= s) kept.push_back(ci);
  }
  return kept;
}

std::vector<NodeSet> selective_generate_ops(const Cpdag& c, NodeId x, NodeId y, int s) {
  if (!c.adjacent(x, y))
    throw std::invalid_argument("selective_generate_ops: nodes " + std::to_string(x) + " and " +
                                std::to_string(y) + " are not adjacent");
  const NodeSet na = neighbors_adjacent(c, y, x);
  std::vector<NodeSet> cliques = maximal_cliques_chordal(na, c);
  // The empty graph has the single maximal clique {}.
  if (cliques.empty()) cliques.push_back(NodeSet{});

  std::set<NodeSet> ops;
  for (NodeSet ci : filter_cliques(cliques, na, s)) {
    const NodeSet h0 = na - ci;
    for_each_subset(ci, s, [&](NodeSet sub) { ops.insert(h0 | sub); });
  }
  return {ops.begin(), ops.end()};
}

namespace {

std::vector<DeleteOp> generate_with_bound(const Cpdag& c, int s) {
  std::vector<DeleteOp> ops;
  for (NodeId x = 0; x < c.node_count(); ++x) {
    for (NodeId y : c.adjacents(x)) {
      if (!role_allowed(c, x, y)) continue;
      for (NodeSet h : selective_generate_ops(c, x, y, s)) ops.push_back({x, y, h});
    }
  }
  return ops;
}

}  // namespace

std::vector<DeleteOp> generate_all_deletes(const Cpdag& c) {
  return generate_with_bound(c, NodeSet::kMaxNodes);
}

std::vector<DeleteOp> generate_selective_deletes(const Cpdag& c, ComplexityProperty p) {
  return generate_with_bound(c, p.clique_bound());
}

}  // namespace sges
