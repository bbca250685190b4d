#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sges/node_set.hpp"

namespace sges {

/// Unordered pair stored with first < second.
using NodePair = std::pair<NodeId, NodeId>;

/// Collider x -> z <- y with x, y nonadjacent, stored with x < y.
struct VStructure {
  NodeId x;
  NodeId z;
  NodeId y;
  auto operator<=>(const VStructure&) const = default;
};

/// Directed acyclic graph over nodes 0..n-1. Mutators reject self-loops,
/// duplicate adjacencies and cycles, so a Dag value is always acyclic.
class Dag {
 public:
  Dag() = default;
  explicit Dag(int n);
  Dag(int n, const std::vector<std::pair<NodeId, NodeId>>& edges);

  int node_count() const { return static_cast<int>(parents_.size()); }
  NodeSet nodes() const { return NodeSet::first(node_count()); }
  NodeSet parents(NodeId v) const { return parents_.at(v); }
  NodeSet children(NodeId v) const { return children_.at(v); }
  NodeSet adjacents(NodeId v) const { return parents_.at(v) | children_.at(v); }
  bool has_edge(NodeId from, NodeId to) const { return children_.at(from).contains(to); }
  bool adjacent(NodeId a, NodeId b) const { return adjacents(a).contains(b); }
  std::size_t edge_count() const;
  /// All edges as (from, to), sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  void add_edge(NodeId from, NodeId to);
  void remove_edge(NodeId from, NodeId to);
  void reverse_edge(NodeId from, NodeId to);
  /// True when adding from -> to would keep the graph acyclic.
  bool can_add_edge(NodeId from, NodeId to) const;

  /// Proper descendants (v itself excluded).
  NodeSet descendants(NodeId v) const;
  /// Ancestors of the set, members included.
  NodeSet ancestors_of(NodeSet set) const;
  /// Kahn order, smallest available id first.
  std::vector<NodeId> topological_order() const;

  bool operator==(const Dag&) const = default;

 private:
  void check_node(NodeId v) const;

  std::vector<NodeSet> parents_;
  std::vector<NodeSet> children_;
};

/// Partially directed graph: at most one edge per pair, either directed or
/// undirected.
class Pdag {
 public:
  Pdag() = default;
  explicit Pdag(int n);
  static Pdag from_dag(const Dag& dag);

  int node_count() const { return static_cast<int>(parents_.size()); }
  NodeSet nodes() const { return NodeSet::first(node_count()); }
  NodeSet parents(NodeId v) const { return parents_.at(v); }
  NodeSet children(NodeId v) const { return children_.at(v); }
  /// Nodes joined to v by an undirected edge.
  NodeSet neighbors(NodeId v) const { return neighbors_.at(v); }
  NodeSet adjacents(NodeId v) const {
    return parents_.at(v) | children_.at(v) | neighbors_.at(v);
  }
  bool has_directed(NodeId from, NodeId to) const { return children_.at(from).contains(to); }
  bool has_undirected(NodeId a, NodeId b) const { return neighbors_.at(a).contains(b); }
  bool adjacent(NodeId a, NodeId b) const { return adjacents(a).contains(b); }

  std::vector<std::pair<NodeId, NodeId>> directed_edges() const;
  std::vector<NodePair> undirected_edges() const;
  std::size_t edge_count() const;

  void add_directed(NodeId from, NodeId to);
  void add_undirected(NodeId a, NodeId b);
  /// Removes whatever edge joins a and b; throws if none.
  void remove_edge(NodeId a, NodeId b);
  /// Replaces the undirected edge a -- b by a -> b.
  void orient(NodeId from, NodeId to);

  bool operator==(const Pdag&) const = default;

 private:
  void check_pair(NodeId a, NodeId b) const;

  std::vector<NodeSet> parents_;
  std::vector<NodeSet> children_;
  std::vector<NodeSet> neighbors_;
};

/// Completed PDAG: directed edges are exactly the compelled ones. Only
/// produced by cpdag_from_dag, complete and complete_cpdag.
class Cpdag {
 public:
  Cpdag() = default;

  const Pdag& pdag() const { return graph_; }
  int node_count() const { return graph_.node_count(); }
  NodeSet parents(NodeId v) const { return graph_.parents(v); }
  NodeSet children(NodeId v) const { return graph_.children(v); }
  NodeSet neighbors(NodeId v) const { return graph_.neighbors(v); }
  NodeSet adjacents(NodeId v) const { return graph_.adjacents(v); }
  bool has_directed(NodeId from, NodeId to) const { return graph_.has_directed(from, to); }
  bool has_undirected(NodeId a, NodeId b) const { return graph_.has_undirected(a, b); }
  bool adjacent(NodeId a, NodeId b) const { return graph_.adjacent(a, b); }
  std::size_t edge_count() const { return graph_.edge_count(); }

  bool operator==(const Cpdag&) const = default;
  /// Arbitrary strict order for use as a set key.
  bool operator<(const Cpdag& other) const;

 private:
  explicit Cpdag(Pdag graph) : graph_(std::move(graph)) {}
  friend Cpdag cpdag_from_dag(const Dag& dag);
  friend Cpdag complete_cpdag(int n);

  Pdag graph_;
};

std::vector<NodePair> skeleton(const Dag& g);
std::vector<NodePair> skeleton(const Pdag& g);
std::vector<VStructure> v_structures(const Dag& g);
std::vector<VStructure> v_structures(const Pdag& g);

/// Same skeleton and v-structures. Throws std::invalid_argument on a node
/// count mismatch.
bool equivalent(const Dag& g1, const Dag& g2);

/// Labels every edge compelled or reversible and undirects the reversible
/// ones.
Cpdag cpdag_from_dag(const Dag& dag);

/// DAG that keeps p's directed edges and v-structures and orients every
/// undirected edge. Throws NoExtension when none exists.
Dag consistent_extension(const Pdag& p);

/// cpdag_from_dag(consistent_extension(p)); no scoring involved.
Cpdag complete(const Pdag& p);

/// Fully undirected CPDAG over n nodes: the no-independence class.
Cpdag complete_cpdag(int n);

/// NA(y, x): undirected neighbours of y that are adjacent to x.
NodeSet neighbors_adjacent(const Cpdag& c, NodeId y, NodeId x);

/// Maximal cliques of the undirected subgraph of c induced by `nodes`, found
/// during maximum-cardinality search. Sorted by smallest member. An empty
/// node set yields no cliques. Throws NotChordal.
std::vector<NodeSet> maximal_cliques_chordal(NodeSet nodes, const Cpdag& c);
/// Same over an arbitrary undirected graph given as neighbour sets.
std::vector<NodeSet> maximal_cliques_chordal(NodeSet nodes, const std::vector<NodeSet>& neighbors);

/// Subgraph over `nodes`, relabelled so that the i-th smallest member of
/// `nodes` becomes node i.
Dag induced_subgraph(const Dag& g, NodeSet nodes);
Pdag induced_subgraph(const Pdag& g, NodeSet nodes);

/// Nodes reachable from both x and y along directed edges, x and y excluded.
NodeSet common_descendants(const Dag& g, NodeId x, NodeId y);
NodeSet common_descendants(const Cpdag& c, NodeId x, NodeId y);

/// Size of the largest clique of the undirected graph given by `adjacency`
/// restricted to `within`.
int max_clique_within(const std::vector<NodeSet>& adjacency, NodeSet within);
bool is_clique(const Pdag& g, NodeSet nodes);

int max_parents(const Dag& g);
int max_clique_size(const Dag& g);
/// Max over nonadjacent pairs of the largest clique among their common
/// children; 0 if there is none.
int v_width(const Dag& g);

/// One of the three equivalence-invariant, hereditary complexity bounds.
struct ComplexityProperty {
  enum class Kind { MaxParents, MaxClique, VWidth };

  Kind kind = Kind::MaxParents;
  int k = 0;

  static ComplexityProperty max_parents(int k) { return {Kind::MaxParents, k}; }
  static ComplexityProperty max_clique(int k) { return {Kind::MaxClique, k}; }
  static ComplexityProperty v_width(int k) { return {Kind::VWidth, k}; }

  /// Largest clique size allowed inside an H set. MaxParents(0) is clamped
  /// to 0 so the empty H set is still generated.
  int clique_bound() const;
  std::string to_string() const;
  bool operator==(const ComplexityProperty&) const = default;
};

int measure(const Dag& g, ComplexityProperty::Kind kind);
bool property_holds(const Dag& g, ComplexityProperty p);
/// Evaluated on a consistent extension; propagates NoExtension.
bool property_holds(const Pdag& g, ComplexityProperty p);

/// Pa(y) \ {x} == Pa(x). Throws std::invalid_argument if x -> y is missing.
bool covered(const Dag& g, NodeId x, NodeId y);

}  // namespace sges
