#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sges/search.hpp"

namespace sges {

namespace {

template <typename Generate>
SearchResult backward_search(CountingScorer& scorer, const Cpdag& start, Generate generate,
                             const SearchOptions& options) {
  if (start.node_count() != scorer.node_count())
    throw std::invalid_argument("search: start state and scorer domains differ");
  const double eps = scorer.tolerance();
  SearchResult result{start, {}};
  Cpdag& current = result.cpdag;

  while (true) {
    std::vector<DeleteOp> ops = generate(current);
    if (ops.empty()) break;
    double best = -std::numeric_limits<double>::infinity();
    for (DeleteOp& op : ops) {
      op.score_change = score_delete(scorer, current, op);
      best = std::max(best, op.score_change);
    }
    const bool stop = options.strict_positive ? best <= eps : best < -eps;
    if (stop) {
      result.trace.final_best_score = best;
      result.trace.final_operators_scored = ops.size();
      break;
    }
    // Ops arrive in (x, y, h) order: take the first within tolerance of the max.
    const DeleteOp* chosen = nullptr;
    for (const DeleteOp& op : ops) {
      if (op.score_change >= best - eps) {
        chosen = &op;
        break;
      }
    }
    const std::size_t edges_before = current.edge_count();
    current = apply_delete(current, *chosen);
    if (current.edge_count() + 1 != edges_before)
      throw std::logic_error("delete operator did not remove exactly one edge");

    result.trace.steps.push_back({*chosen, ops.size(), scorer.unique_calls()});
    if (options.observer) options.observer(current, result.trace.steps.back());
  }
  result.trace.unique_calls = scorer.unique_calls();
  return result;
}

}  // namespace

SearchResult bes(CountingScorer& scorer, const Cpdag& start, const SearchOptions& options) {
  return backward_search(
      scorer, start, [](const Cpdag& c) { return generate_all_deletes(c); }, options);
}

SearchResult sbes(CountingScorer& scorer, const Cpdag& start, ComplexityProperty p,
                  const SearchOptions& options) {
  return backward_search(
      scorer, start, [p](const Cpdag& c) { return generate_selective_deletes(c, p); }, options);
}

Cpdag poly_fes(int n) {
  if (n < 1) throw std::invalid_argument("poly_fes: n must be >= 1");
  return complete_cpdag(n);
}

SearchResult sges(CountingScorer& scorer, int n, ComplexityProperty p,
                  const SearchOptions& options) {
  return sbes(scorer, poly_fes(n), p, options);
}

}  // namespace sges
