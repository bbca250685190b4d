#include <doctest.h>

#include "sges/dsep.hpp"
#include "sges/verify.hpp"
#include "support.hpp"

using namespace sges;
using namespace sges::testing;

namespace {

constexpr NodeId A = 0, B = 1, C = 2, D = 3;

NodeSet set_of(std::initializer_list<NodeId> ids) {
  NodeSet s;
  for (NodeId v : ids) s.insert(v);
  return s;
}

// g <= h straight from the definition: every statement h implies, g implies.
bool brute_imap(const Dag& g, const Dag& h) {
  const int n = g.node_count();
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      bool ok = true;
      for_each_subset(g.nodes().without(a).without(b), n, [&](NodeSet s) {
        if (verify::brute_dsep(h, {a, b, s}) && !verify::brute_dsep(g, {a, b, s})) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

Dag without_edge(Dag h, NodeId x, NodeId y) {
  h.remove_edge(x, y);
  return h;
}

}  // namespace

TEST_CASE("d-separation examples") {
  CHECK(d_separated(Dag(3, {{A, B}, {B, C}}), {A, C, set_of({B})}));
  const Dag collider(3, {{A, B}, {C, B}});
  CHECK(d_separated(collider, {A, C, {}}));
  CHECK_FALSE(d_separated(collider, {A, C, set_of({B})}));
  CHECK_FALSE(d_separated(Dag(4, {{A, B}, {C, B}, {B, D}}), {A, C, set_of({D})}));
  CHECK_THROWS_AS(d_separated(collider, {A, A, {}}), std::invalid_argument);
  CHECK_THROWS_AS(d_separated(collider, {A, C, set_of({A})}), std::invalid_argument);
}

TEST_CASE("d-separation is symmetric") {
  Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    const int n = uniform_int(rng, 2, 9);
    const Dag g = random_order_dag(n, 0.35, rng);
    const NodeId a = uniform_int(rng, 0, n - 1);
    NodeId b = uniform_int(rng, 0, n - 2);
    if (b >= a) ++b;
    const NodeSet s = random_subset(g.nodes().without(a).without(b), rng, 0.3);
    CHECK(d_separated(g, {a, b, s}) == d_separated(g, {b, a, s}));
  }
}

TEST_CASE("is_imap examples") {
  const Dag g(3, {{A, B}, {B, C}});
  CHECK(is_imap(g, g));
  CHECK(is_imap(Dag(3), g));
  CHECK_FALSE(is_imap(Dag(2, {{A, B}}), Dag(2)));
  CHECK_THROWS_AS(is_imap(Dag(2), Dag(3)), std::invalid_argument);
}

TEST_CASE("is_imap agrees with the definition") {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform_int(rng, 2, 5);
    const Dag g = random_order_dag(n, 0.4, rng);
    const Dag h = coin(rng) ? random_supergraph(g, 0.3, rng) : random_order_dag(n, 0.5, rng);
    CHECK(is_imap(g, h) == brute_imap(g, h));
  }
}

TEST_CASE("is_imap is reflexive and transitive") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform_int(rng, 2, 6);
    const Dag g = random_order_dag(n, 0.3, rng);
    const Dag h = random_supergraph(g, 0.3, rng);
    const Dag k = random_supergraph(h, 0.3, rng);
    CHECK(is_imap(g, g));
    CHECK(is_imap(g, h));
    CHECK(is_imap(h, k));
    CHECK(is_imap(g, k));
    const Dag other = random_order_dag(n, 0.5, rng);
    if (is_imap(g, h) && is_imap(h, other)) CHECK(is_imap(g, other));
  }
}

TEST_CASE("deletable") {
  CHECK(deletable(Dag(2), Dag(2, {{A, B}}), A, B));
  CHECK_FALSE(deletable(Dag(2, {{A, B}}), Dag(2, {{A, B}}), A, B));
  CHECK_THROWS_AS(deletable(Dag(2), Dag(2), A, B), std::invalid_argument);

  Rng rng(24);
  int positive = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = uniform_int(rng, 2, 6);
    const Dag g = random_order_dag(n, 0.3, rng);
    const Dag h = random_supergraph(g, 0.4, rng);
    const auto edges = h.edges();
    if (edges.empty()) continue;
    const auto [x, y] = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    const bool del = deletable(g, h, x, y);
    CHECK(del == is_imap(g, without_edge(h, x, y)));
    if (del) {
      ++positive;
      CHECK(is_imap(g, without_edge(h, x, y)));
    }
  }
  CHECK(positive > 100);
}

TEST_CASE("prune") {
  const Dag g(3, {{A, B}, {B, C}});
  CHECK(prune(g, g).empty());
  CHECK(prune(Dag(2), Dag(2, {{A, B}})) == set_of({A, B}));

  Rng rng(25);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform_int(rng, 2, 6);
    const Dag g1 = random_order_dag(n, 0.35, rng);
    const Dag h = coin(rng) ? random_supergraph(g1, 0.3, rng) : random_order_dag(n, 0.4, rng);
    const NodeSet v = prune(g1, h);
    const bool full = is_imap(g1, h);
    const bool reduced =
        v.empty() || is_imap(induced_subgraph(g1, v), induced_subgraph(h, v));
    CHECK(full == reduced);
  }
}

TEST_CASE("d_connected reachability") {
  const Dag g(4, {{A, B}, {C, B}, {B, D}});
  CHECK(d_connected(g, A, {}) == set_of({B, D}));
  CHECK(d_connected(g, A, set_of({D})) == set_of({B, C}));
}
