#include <doctest.h>

#include <cmath>
#include <set>

#include "sges/dsep.hpp"
#include "sges/search.hpp"
#include "sges/verify.hpp"
#include "support.hpp"

using namespace sges;
using namespace sges::testing;

namespace {

constexpr double kN = 5e9;

NodeSet set_of(std::initializer_list<NodeId> ids) {
  NodeSet s;
  for (NodeId v : ids) s.insert(v);
  return s;
}

std::shared_ptr<OracleMdl> oracle_for(const DiscreteBayesNet& bn) {
  return std::make_shared<OracleMdl>(bn, kN);
}

DiscreteBayesNet faithful_binary(int n, Rng& rng) {
  while (true) {
    DiscreteBayesNet bn =
        sample_parameters(random_dag(n, 2, 0.5, rng()), std::vector<int>(n, 2), 1.0, rng());
    if (!check_faithfulness(bn).flagged) return bn;
  }
}

Cpdag chain_xyz() { return cpdag_from_dag(Dag(3, {{0, 1}, {1, 2}})); }

}  // namespace

TEST_CASE("delete_valid") {
  CHECK(delete_valid(complete_cpdag(2), {0, 1, {}}));
  // X=0, Y=1 with NA(Y,X) = {A=2, B=3}.
  const Cpdag k4 = complete_cpdag(4);
  CHECK(delete_valid(k4, {0, 1, set_of({2})}));
  CHECK(delete_valid(k4, {0, 1, set_of({2, 3})}));
  CHECK_FALSE(delete_valid(chain_xyz(), {0, 1, set_of({2})}));
  CHECK_FALSE(delete_valid(chain_xyz(), {0, 2, {}}));

  // y -> x admits only the (y, x) role.
  const Cpdag v = cpdag_from_dag(Dag(3, {{0, 2}, {1, 2}}));
  CHECK(delete_valid(v, {0, 2, {}}));
  CHECK_FALSE(delete_valid(v, {2, 0, {}}));

  // NA \ H must be a clique.
  const Cpdag star = complete(undirected_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(neighbors_adjacent(star, 1, 0) == set_of({2, 3}));
  CHECK_FALSE(delete_valid(star, {0, 1, {}}));
  CHECK(delete_valid(star, {0, 1, set_of({2})}));
}

TEST_CASE("score_delete") {
  const DiscreteBayesNet indep(Dag(2), {2, 2}, {{0.3, 0.7}, {0.6, 0.4}});
  CountingScorer s(oracle_for(indep));
  const double up = score_delete(s, complete_cpdag(2), {0, 1, {}});
  CHECK(up == doctest::Approx(std::log(kN) / 2).epsilon(1e-4));
  CHECK(s.unique_calls() == 2);

  const DiscreteBayesNet dep(Dag(2, {{0, 1}}), {2, 2}, {{0.7, 0.3}, {0.8, 0.2, 0.1, 0.9}});
  CountingScorer t(oracle_for(dep));
  CHECK(score_delete(t, complete_cpdag(2), {0, 1, {}}) < 0);
}

TEST_CASE("score_delete equals the full score difference") {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform_int(rng, 2, 5);
    const DiscreteBayesNet bn =
        sample_parameters(random_dag(n, 2, 0.5, rng()), std::vector<int>(n, 2), 1.0, rng());
    CountingScorer s(oracle_for(bn));
    const Cpdag c = cpdag_from_dag(random_order_dag(n, 0.6, rng));
    const double before = score_dag(s, consistent_extension(c.pdag()));
    for (const DeleteOp& op : generate_all_deletes(c)) {
      const double after = score_dag(s, consistent_extension(apply_delete(c, op).pdag()));
      CHECK(std::abs(score_delete(s, c, op) - (after - before)) <= 1e-9 * kN);
    }
  }
}

TEST_CASE("apply_delete") {
  const Cpdag out = apply_delete(chain_xyz(), {0, 1, {}});
  CHECK(out.edge_count() == 1);
  CHECK(out.has_undirected(1, 2));
  CHECK(out.adjacents(0).empty());

  const Cpdag v = apply_delete(complete_cpdag(4), {0, 1, set_of({2, 3})});
  for (NodeId h : {2, 3}) {
    CHECK(v.has_directed(0, h));
    CHECK(v.has_directed(1, h));
  }
  CHECK_FALSE(v.adjacent(0, 1));
  CHECK_THROWS_AS(apply_delete(chain_xyz(), {0, 2, {}}), std::invalid_argument);

  // Class of the result against the DAGs that realise the deletion.
  Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 2, 5);
    const Cpdag c = cpdag_from_dag(random_order_dag(n, 0.6, rng));
    for (const DeleteOp& op : generate_all_deletes(c)) {
      const Cpdag r = apply_delete(c, op);
      const verify::EquivalenceClass cls = verify::enumerate_class(r);
      const verify::EquivalenceClass brute = verify::enumerate_class(cls.members.front());
      CHECK(cls.members.size() == brute.members.size());
      CHECK(r.edge_count() + 1 == c.edge_count());
      for (NodeId h : op.h) CHECK(r.has_directed(op.y, h));
    }
  }
}

TEST_CASE("generate_all_deletes") {
  const Cpdag k4 = complete_cpdag(4);
  const std::vector<DeleteOp> ops = generate_all_deletes(k4);
  CHECK(ops.size() == 48);
  std::set<Cpdag> results;
  for (const DeleteOp& op : ops) results.insert(apply_delete(k4, op));
  CHECK(results.size() == 24);
  CHECK(std::is_sorted(ops.begin(), ops.end()));

  std::set<Cpdag> chain;
  for (const DeleteOp& op : generate_all_deletes(chain_xyz()))
    chain.insert(apply_delete(chain_xyz(), op));
  CHECK(chain.size() == 2);

  const std::vector<DeleteOp> pair = generate_all_deletes(complete_cpdag(2));
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].h.empty());
  CHECK(apply_delete(complete_cpdag(2), pair[0]) == apply_delete(complete_cpdag(2), pair[1]));
}

TEST_CASE("filter_cliques") {
  const NodeSet ab = set_of({0, 1});
  CHECK(filter_cliques({ab}, ab, 0) == std::vector<NodeSet>{ab});
  const NodeSet cde = set_of({2, 3, 4});
  CHECK(filter_cliques({ab, cde}, ab | cde, 1).empty());
  CHECK(filter_cliques({ab, cde}, ab | cde, 2) == std::vector<NodeSet>{cde});
  CHECK(filter_cliques({ab, cde}, ab | cde, 5).size() == 2);
}

TEST_CASE("selective_generate_ops on the two-node clique") {
  const Cpdag k4 = complete_cpdag(4);
  const NodeSet a = set_of({2}), b = set_of({3});
  CHECK(selective_generate_ops(k4, 0, 1, 0) == std::vector<NodeSet>{{}});
  CHECK(selective_generate_ops(k4, 0, 1, 1) == std::vector<NodeSet>{{}, a, b});
  CHECK(selective_generate_ops(k4, 0, 1, 2) == std::vector<NodeSet>{{}, a, a | b, b});
  CHECK(selective_generate_ops(complete_cpdag(2), 0, 1, 0) == std::vector<NodeSet>{{}});
}

TEST_CASE("selective generation from the complete graph") {
  for (int n = 4; n <= 6; ++n) {
    const Cpdag c = complete_cpdag(n);
    const std::vector<DeleteOp> ops =
        generate_selective_deletes(c, ComplexityProperty::max_parents(2));
    CHECK(ops.size() == static_cast<std::size_t>(n * (n - 1) * (n - 1)));
    for (NodeId x = 0; x < n; ++x)
      for (NodeId y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto hs = selective_generate_ops(c, x, y, 1);
        CHECK(hs.size() == static_cast<std::size_t>(n - 1));
        for (NodeSet h : hs) CHECK(h.size() <= 1);
      }
  }
}

TEST_CASE("selective deletes are valid deletes") {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform_int(rng, 2, 7);
    const Cpdag c = cpdag_from_dag(random_order_dag(n, 0.6, rng));
    for (auto kind : {ComplexityProperty::Kind::MaxParents, ComplexityProperty::Kind::MaxClique,
                      ComplexityProperty::Kind::VWidth}) {
      const ComplexityProperty p{kind, uniform_int(rng, 0, 3)};
      const auto sel = generate_selective_deletes(c, p);
      const auto all = generate_all_deletes(c);
      for (const DeleteOp& op : sel) {
        CHECK(delete_valid(c, op));
        CHECK(std::any_of(all.begin(), all.end(), [&](const DeleteOp& o) { return o.same_as(op); }));
      }
    }
  }
}

TEST_CASE("poly_fes") {
  CHECK(poly_fes(1).node_count() == 1);
  const Cpdag t = poly_fes(3);
  CHECK(t.edge_count() == 3);
  CHECK(t.has_undirected(0, 1));
  CHECK(t.has_undirected(0, 2));
  CHECK(t.has_undirected(1, 2));
}

TEST_CASE("bes examples") {
  const DiscreteBayesNet indep(Dag(2), {2, 2}, {{0.3, 0.7}, {0.6, 0.4}});
  CountingScorer s(oracle_for(indep));
  CHECK(bes(s, poly_fes(2)).cpdag.edge_count() == 0);

  Rng rng(54);
  for (int t = 0; t < 10; ++t) {
    const DiscreteBayesNet bn = faithful_binary(uniform_int(rng, 3, 6), rng);
    const Cpdag truth = cpdag_from_dag(bn.dag());
    CountingScorer sc(oracle_for(bn));
    const SearchResult at_truth = bes(sc, truth);
    CHECK(at_truth.cpdag == truth);
    CHECK(at_truth.trace.steps.empty());
    CountingScorer fresh(oracle_for(bn));
    CHECK(bes(fresh, poly_fes(bn.node_count())).cpdag == truth);
  }
}

TEST_CASE("sbes and sges recover faithful models") {
  Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    const int n = uniform_int(rng, 2, 7);
    const DiscreteBayesNet bn = faithful_binary(n, rng);
    const Cpdag truth = cpdag_from_dag(bn.dag());
    CountingScorer s(oracle_for(bn));
    const SearchResult r = sges::sges(s, n, ComplexityProperty::max_parents(2));
    CHECK(r.cpdag == truth);
    CHECK(r.trace.unique_calls == s.unique_calls());

    CountingScorer again(oracle_for(bn));
    const SearchResult r2 = sbes(again, poly_fes(n), ComplexityProperty::max_parents(2));
    REQUIRE(r2.trace.steps.size() == r.trace.steps.size());
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i)
      CHECK(r2.trace.steps[i].op.same_as(r.trace.steps[i].op));

    SearchOptions strict;
    strict.strict_positive = true;
    CountingScorer third(oracle_for(bn));
    CHECK(sges::sges(third, n, ComplexityProperty::max_parents(2), strict).cpdag == truth);
  }
  const DiscreteBayesNet one(Dag(1), {2}, {{0.4, 0.6}});
  CountingScorer s(oracle_for(one));
  CHECK(sges::sges(s, 1, ComplexityProperty::max_parents(2)).cpdag.node_count() == 1);
}

TEST_CASE("search steps remove one edge and stay IMAPs") {
  Rng rng(56);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform_int(rng, 2, 7);
    const DiscreteBayesNet bn = faithful_binary(n, rng);
    std::size_t edges = poly_fes(n).edge_count();
    int steps = 0;
    SearchOptions options;
    options.observer = [&](const Cpdag& c, const TraceStep& step) {
      ++steps;
      CHECK(c.edge_count() + 1 == edges);
      edges = c.edge_count();
      CHECK(is_imap(bn.dag(), consistent_extension(c.pdag())));
      CHECK(step.op.score_change >= -1e-9 * kN);
    };
    CountingScorer s(oracle_for(bn));
    const SearchResult r = sges::sges(s, n, ComplexityProperty::max_parents(2), options);
    CHECK(static_cast<std::size_t>(steps) == r.trace.steps.size());
  }
}

TEST_CASE("per-sweep operator bound") {
  Rng rng(57);
  for (int t = 0; t < 20; ++t) {
    const int n = uniform_int(rng, 3, 8);
    const DiscreteBayesNet bn = faithful_binary(n, rng);
    for (int k = 1; k <= 3; ++k) {
      const ComplexityProperty p = ComplexityProperty::max_clique(k);
      const int s = p.clique_bound();
      CountingScorer sc(oracle_for(bn));
      const SearchResult r = sbes(sc, poly_fes(n), p);
      const double roles = n * (n - 1.0);
      const double bound = roles * n * std::pow(n + 1.0, s);
      std::size_t prev_calls = 0;
      for (const TraceStep& step : r.trace.steps) {
        CHECK(static_cast<double>(step.operators_scored) <= bound);
        CHECK(step.unique_calls - prev_calls <= 2 * step.operators_scored);
        prev_calls = step.unique_calls;
      }
    }
  }
}

TEST_CASE("IMAP supergraphs contain a covered or deletable edge") {
  Rng rng(58);
  int cases = 0;
  while (cases < 200) {
    const int n = uniform_int(rng, 2, 7);
    const Dag g = random_order_dag(n, 0.3, rng);
    const Dag h = random_supergraph(g, 0.3, rng);
    if (h == g) continue;
    ++cases;
    bool found = false;
    for (const auto& [x, y] : h.edges())
      found = found || covered(h, x, y) || deletable(g, h, x, y);
    CHECK(found);
  }
}
