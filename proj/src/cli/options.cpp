#include <algorithm>
#include <atomic>
#include <charconv>
#include <ostream>
#include <random>
#include <thread>

#include "sges/cli.hpp"
#include "sges/search.hpp"

namespace sges::cli {

ComplexityProperty parse_property(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("property '" + text + "' must look like ps:K, cl:K or vw:K");
  const std::string kind = text.substr(0, colon);
  const std::string bound = text.substr(colon + 1);
  int k = -1;
  const auto [end, ec] = std::from_chars(bound.data(), bound.data() + bound.size(), k);
  if (bound.empty() || ec != std::errc{} || end != bound.data() + bound.size() || k < 0)
    throw std::invalid_argument("property bound '" + bound + "' must be a non-negative integer");
  if (kind == "ps") return ComplexityProperty::max_parents(k);
  if (kind == "cl") return ComplexityProperty::max_clique(k);
  if (kind == "vw") return ComplexityProperty::v_width(k);
  throw std::invalid_argument("unknown property kind '" + kind + "' (expected ps, cl or vw)");
}

void ExperimentConfig::validate() const {
  if (n_min < 1) throw std::invalid_argument("--n-min must be >= 1");
  if (n_min > n_max) throw std::invalid_argument("--n-min must not exceed --n-max");
  if (n_max > 24) throw std::invalid_argument("--n-max above 24 exceeds the exact-inference limit");
  if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (!(n_effective > 1.0)) throw std::invalid_argument("--n-effective must exceed 1");
  if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("--algorithms must name at least one");
  for (const auto& a : algorithms)
    if (a != "bes" && a != "sbes")
      throw std::invalid_argument("unknown algorithm '" + a + "' (expected bes or sbes)");
}

DiscreteBayesNet experiment_model(int n, int trial, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  const std::uint64_t structure_seed = rng();
  const std::uint64_t parameter_seed = rng();
  const Dag dag = random_dag(n, 2, 0.5, structure_seed);
  return sample_parameters(dag, std::vector<int>(n, 2), 1.0, parameter_seed);
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  struct Cell {
    int n;
    int trial;
  };
  std::vector<Cell> cells;
  for (int n = config.n_min; n <= config.n_max; ++n)
    for (int t = 0; t < config.trials; ++t) cells.push_back({n, t});

  std::vector<std::vector<ExperimentRow>> results(cells.size());
  auto run_cell = [&](std::size_t i) {
    const auto [n, trial] = cells[i];
    auto backend = std::make_shared<OracleMdl>(experiment_model(n, trial, config.seed),
                                               config.n_effective);
    const Cpdag truth = cpdag_from_dag(backend->network().dag());
    SearchOptions options;
    options.strict_positive = config.strict_positive;
    for (const std::string& algorithm : config.algorithms) {
      CountingScorer scorer(backend);
      const SearchResult result = algorithm == "bes"
                                      ? bes(scorer, poly_fes(n), options)
                                      : sbes(scorer, poly_fes(n), config.property, options);
      results[i].push_back({n, trial, algorithm, scorer.unique_calls(), result.cpdag == truth});
    }
  };

  const int workers = std::min<int>(config.jobs, static_cast<int>(cells.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<ExperimentRow> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kExperimentHeader << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << r.trial << ',' << r.algorithm << ',' << r.unique_score_calls << ','
        << (r.recovered ? "true" : "false") << '\n';
}

std::string format_cpdag(const Cpdag& c, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != c.node_count())
    throw std::invalid_argument("format_cpdag: one name per node required");
  std::vector<std::string> lines;
  for (const auto& [from, to] : c.pdag().directed_edges())
    lines.push_back(names[from] + " -> " + names[to]);
  for (const auto& [a, b] : c.pdag().undirected_edges())
    lines.push_back(names[a] + " -- " + names[b]);
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

}  // namespace sges::cli
