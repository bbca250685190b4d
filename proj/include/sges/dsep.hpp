#pragma once

#include "sges/graph.hpp"

namespace sges {

/// Is a independent of b given s? Requires a != b and a, b not in s.
struct IndependenceQuery {
  NodeId a;
  NodeId b;
  NodeSet s;
};

/// Throws std::invalid_argument for a malformed query.
void validate(const IndependenceQuery& q, int node_count);

/// Nodes joined to `source` by an active path given `given` (Bayes-ball
/// reachability). `source` itself is excluded.
NodeSet d_connected(const Dag& g, NodeId source, NodeSet given);

bool d_separated(const Dag& g, const IndependenceQuery& q);

/// Whether h's class is an independence map of g's class (g <= h): every
/// local Markov condition of h holds in g.
bool is_imap(const Dag& g, const Dag& h);

/// Whether removing x -> y from h keeps h an IMAP of g, i.e.
/// y _|_ x | Pa_h(y) \ x in g. Requires the edge in h.
bool deletable(const Dag& g, const Dag& h, NodeId x, NodeId y);

/// Nodes left after repeatedly removing common sinks with identical parents.
NodeSet prune(const Dag& g, const Dag& h);

}  // namespace sges
