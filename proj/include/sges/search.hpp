#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sges/graph.hpp"
#include "sges/score.hpp"

namespace sges {

/// Delete(x, y, h): remove the x-y adjacency and make every node of h a
/// common child of x and y.
struct DeleteOp {
  NodeId x = 0;
  NodeId y = 0;
  NodeSet h;
  /// Filled by score_delete.
  double score_change = 0.0;

  /// Same operator, ignoring the score.
  bool same_as(const DeleteOp& o) const { return x == o.x && y == o.y && h == o.h; }
  /// Lexicographic on (x, y, h).
  bool operator<(const DeleteOp& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return h < o.h;
  }
};

/// Preconditions: x and y adjacent (as x -- y or x -> y), h a subset of
/// NA(y, x), and NA(y, x) \ h a clique.
///
/// An edge y -> x only admits the role Delete(y, x, .); scoring Delete(x, y, .)
/// would put x among y's parents, which no member of the class does.
bool delete_valid(const Cpdag& c, const DeleteOp& op);

/// Score(y, (Pa(y) u H̄) \ x) - Score(y, Pa(y) u H̄ u x) with H̄ = NA(y,x) \ h.
/// At most two scorer queries; no graph transformation.
double score_delete(CountingScorer& scorer, const Cpdag& c, const DeleteOp& op);

/// Removes the edge, orients y -> h (and x -> h where x -- h) for h in H, then
/// completes. Throws std::invalid_argument if the operator is invalid.
Cpdag apply_delete(const Cpdag& c, const DeleteOp& op);

/// Cliques C_i kept when the rest of the universe, universe \ C_i, has no
/// clique larger than s. `cliques` must be the maximal cliques of a chordal
/// graph over `universe`, so the largest clique left is max_j |C_j \ C_i|.
std::vector<NodeSet> filter_cliques(const std::vector<NodeSet>& cliques, NodeSet universe,
                                    int s);

/// H sets for one (x, y) role: for each surviving maximal clique C_i of
/// NA(y, x), NA \ C_i plus every subset of C_i of size <= s. Sorted and
/// deduplicated.
std::vector<NodeSet> selective_generate_ops(const Cpdag& c, NodeId x, NodeId y, int s);

/// Every valid delete, once per role and H set, in (x, y, h) order.
std::vector<DeleteOp> generate_all_deletes(const Cpdag& c);

/// Superset of the deletes consistent with `p`, using s = p.clique_bound().
std::vector<DeleteOp> generate_selective_deletes(const Cpdag& c, ComplexityProperty p);

struct TraceStep {
  DeleteOp op;                  ///< applied operator with its score change
  std::size_t operators_scored;  ///< operators generated and scored this sweep
  std::size_t unique_calls;     ///< scorer counter after the sweep
};

struct SearchTrace {
  std::vector<TraceStep> steps;
  /// Best score of the sweep that stopped the search (empty when no
  /// operator was left).
  std::optional<double> final_best_score;
  std::size_t final_operators_scored = 0;
  std::size_t unique_calls = 0;
};

struct SearchOptions {
  /// Stop unless the best operator is strictly positive (beyond tolerance).
  /// The default applies operators whose score is within tolerance of zero.
  bool strict_positive = false;
  /// Called with the new state after each applied operator.
  std::function<void(const Cpdag&, const TraceStep&)> observer;
};

struct SearchResult {
  Cpdag cpdag;
  SearchTrace trace;
};

/// Greedy backward search over every delete operator.
SearchResult bes(CountingScorer& scorer, const Cpdag& start, const SearchOptions& options = {});

/// Greedy backward search over the selectively generated operators.
SearchResult sbes(CountingScorer& scorer, const Cpdag& start, ComplexityProperty p,
                  const SearchOptions& options = {});

/// Forward phase with no score calls: the complete undirected CPDAG.
Cpdag poly_fes(int n);

/// poly_fes followed by sbes.
SearchResult sges(CountingScorer& scorer, int n, ComplexityProperty p,
                  const SearchOptions& options = {});

}  // namespace sges
