#include <algorithm>
#include <stdexcept>
#include <string>

#include "sges/graph.hpp"

namespace sges {

namespace {

std::string edge_name(NodeId a, NodeId b) {
  return std::to_string(a) + "->" + std::to_string(b);
}

}  // namespace

// ---------------------------------------------------------------------------
// Dag

Dag::Dag(int n) {
  NodeSet::check_id_count(n);
  parents_.assign(n, NodeSet{});
  children_.assign(n, NodeSet{});
}

Dag::Dag(int n, const std::vector<std::pair<NodeId, NodeId>>& edges) : Dag(n) {
  for (const auto& [from, to] : edges) add_edge(from, to);
}

void Dag::check_node(NodeId v) const {
  if (v < 0 || v >= node_count())
    throw std::out_of_range("node " + std::to_string(v) + " not in graph of " +
                            std::to_string(node_count()) + " nodes");
}

std::size_t Dag::edge_count() const {
  std::size_t count = 0;
  for (NodeSet p : parents_) count += p.size();
  return count;
}

std::vector<std::pair<NodeId, NodeId>> Dag::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId from = 0; from < node_count(); ++from)
    for (NodeId to : children_[from]) out.emplace_back(from, to);
  return out;
}

bool Dag::can_add_edge(NodeId from, NodeId to) const {
  check_node(from);
  check_node(to);
  if (from == to || adjacent(from, to)) return false;
  return !descendants(to).contains(from);
}

void Dag::add_edge(NodeId from, NodeId to) {
  check_node(from);
  check_node(to);
  if (from == to) throw std::invalid_argument("self-loop " + edge_name(from, to));
  if (adjacent(from, to))
    throw std::invalid_argument("nodes already adjacent: " + edge_name(from, to));
  if (descendants(to).contains(from))
    throw std::invalid_argument("edge " + edge_name(from, to) + " creates a cycle");
  children_[from].insert(to);
  parents_[to].insert(from);
}

void Dag::remove_edge(NodeId from, NodeId to) {
  if (!has_edge(from, to))
    throw std::invalid_argument("missing edge " + edge_name(from, to));
  children_[from].erase(to);
  parents_[to].erase(from);
}

void Dag::reverse_edge(NodeId from, NodeId to) {
  remove_edge(from, to);
  try {
    add_edge(to, from);
  } catch (...) {
    children_[from].insert(to);
    parents_[to].insert(from);
    throw;
  }
}

NodeSet Dag::descendants(NodeId v) const {
  check_node(v);
  NodeSet seen;
  NodeSet frontier = children_[v];
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.erase(u);
    if (seen.contains(u)) continue;
    seen.insert(u);
    frontier |= children_[u] - seen;
  }
  return seen;
}

NodeSet Dag::ancestors_of(NodeSet set) const {
  NodeSet seen;
  NodeSet frontier = set;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.erase(u);
    if (seen.contains(u)) continue;
    seen.insert(u);
    frontier |= parents_.at(u) - seen;
  }
  return seen;
}

std::vector<NodeId> Dag::topological_order() const {
  std::vector<NodeId> order;
  order.reserve(node_count());
  NodeSet placed;
  NodeSet remaining = nodes();
  while (!remaining.empty()) {
    for (NodeId v : remaining) {
      if (parents_[v].is_subset_of(placed)) {
        order.push_back(v);
        placed.insert(v);
        remaining.erase(v);
        break;
      }
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Pdag

Pdag::Pdag(int n) {
  NodeSet::check_id_count(n);
  parents_.assign(n, NodeSet{});
  children_.assign(n, NodeSet{});
  neighbors_.assign(n, NodeSet{});
}

Pdag Pdag::from_dag(const Dag& dag) {
  Pdag p(dag.node_count());
  for (const auto& [from, to] : dag.edges()) p.add_directed(from, to);
  return p;
}

void Pdag::check_pair(NodeId a, NodeId b) const {
  if (a < 0 || a >= node_count() || b < 0 || b >= node_count())
    throw std::out_of_range("edge " + edge_name(a, b) + " outside graph of " +
                            std::to_string(node_count()) + " nodes");
  if (a == b) throw std::invalid_argument("self-loop " + edge_name(a, b));
}

std::vector<std::pair<NodeId, NodeId>> Pdag::directed_edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId from = 0; from < node_count(); ++from)
    for (NodeId to : children_[from]) out.emplace_back(from, to);
  return out;
}

std::vector<NodePair> Pdag::undirected_edges() const {
  std::vector<NodePair> out;
  for (NodeId a = 0; a < node_count(); ++a)
    for (NodeId b : neighbors_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

std::size_t Pdag::edge_count() const {
  std::size_t directed = 0;
  std::size_t undirected_twice = 0;
  for (NodeId v = 0; v < node_count(); ++v) {
    directed += parents_[v].size();
    undirected_twice += neighbors_[v].size();
  }
  return directed + undirected_twice / 2;
}

void Pdag::add_directed(NodeId from, NodeId to) {
  check_pair(from, to);
  if (adjacent(from, to))
    throw std::invalid_argument("nodes already adjacent: " + edge_name(from, to));
  children_[from].insert(to);
  parents_[to].insert(from);
}

void Pdag::add_undirected(NodeId a, NodeId b) {
  check_pair(a, b);
  if (adjacent(a, b))
    throw std::invalid_argument("nodes already adjacent: " + edge_name(a, b));
  neighbors_[a].insert(b);
  neighbors_[b].insert(a);
}

void Pdag::remove_edge(NodeId a, NodeId b) {
  check_pair(a, b);
  if (!adjacent(a, b))
    throw std::invalid_argument("no edge between " + std::to_string(a) +
                                " and " + std::to_string(b));
  children_[a].erase(b);
  children_[b].erase(a);
  parents_[a].erase(b);
  parents_[b].erase(a);
  neighbors_[a].erase(b);
  neighbors_[b].erase(a);
}

void Pdag::orient(NodeId from, NodeId to) {
  check_pair(from, to);
  if (!has_undirected(from, to))
    throw std::invalid_argument("no undirected edge " + std::to_string(from) +
                                "--" + std::to_string(to));
  neighbors_[from].erase(to);
  neighbors_[to].erase(from);
  children_[from].insert(to);
  parents_[to].insert(from);
}

// ---------------------------------------------------------------------------
// Cpdag

bool Cpdag::operator<(const Cpdag& other) const {
  const Pdag& a = graph_;
  const Pdag& b = other.graph_;
  if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
  for (NodeId v = 0; v < a.node_count(); ++v) {
    if (a.parents(v) != b.parents(v)) return a.parents(v).bits() < b.parents(v).bits();
    if (a.neighbors(v) != b.neighbors(v))
      return a.neighbors(v).bits() < b.neighbors(v).bits();
  }
  return false;
}

}  // namespace sges
