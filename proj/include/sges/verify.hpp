#pragma once

#include <set>
#include <vector>

#include "sges/dsep.hpp"
#include "sges/graph.hpp"
#include "sges/search.hpp"

namespace sges::verify {

/// Node-count guard for class enumeration and path enumeration.
inline constexpr int kMaxBruteNodes = 7;
/// Node-count guard for brute_deletes.
inline constexpr int kMaxDeleteNodes = 6;
/// Node-count guard for enumerate_dags (3^(n(n-1)/2) candidate graphs).
inline constexpr int kMaxEnumeratedDagNodes = 5;

struct EquivalenceClass {
  std::vector<Dag> members;
};

/// Every DAG with c's skeleton and v-structures that keeps c's directed
/// edges. Throws TooLarge above kMaxBruteNodes.
EquivalenceClass enumerate_class(const Cpdag& c);

/// Every DAG with g's skeleton and v-structures, found without any CPDAG
/// machinery. Throws TooLarge above kMaxBruteNodes.
EquivalenceClass enumerate_class(const Dag& g);

/// Edges oriented identically in every member become directed, the rest
/// undirected. `members` must be non-empty and share a skeleton.
Pdag labeling_from_class(const EquivalenceClass& cls);

/// All DAGs over n labelled nodes. Throws TooLarge above
/// kMaxEnumeratedDagNodes.
std::vector<Dag> enumerate_dags(int n);

/// d-separation by enumerating simple paths: a path is active when each
/// collider is in s or has a descendant in s and no other interior node is
/// in s. Throws TooLarge above kMaxBruteNodes, std::invalid_argument for a
/// malformed query.
bool brute_dsep(const Dag& g, const IndependenceQuery& q);

/// { CPDAG(H minus e) : H in the class of c, e an edge of H }. Throws
/// TooLarge above kMaxDeleteNodes.
std::set<Cpdag> brute_deletes(const Cpdag& c);

/// Whether, after applying op, the property holds on the subgraph induced by
/// x, y and their common descendants in the resulting CPDAG.
bool pi_consistent(const Cpdag& c, const DeleteOp& op, ComplexityProperty p);

/// Keeps exactly the pi-consistent operators.
std::vector<DeleteOp> pi_consistent_filter(const Cpdag& c, const std::vector<DeleteOp>& ops,
                                           ComplexityProperty p);

}  // namespace sges::verify
