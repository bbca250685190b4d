#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sges/cli.hpp"
#include "sges/network_io.hpp"
#include "sges/score.hpp"
#include "sges/search.hpp"

namespace sges::cli {

int cmd_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    err << "experiment: " << e.what() << '\n';
    return kExitInputError;
  }
  const std::vector<ExperimentRow> rows = run_experiment(config);
  write_experiment_csv(out, rows);
  const auto missed = std::count_if(rows.begin(), rows.end(),
                                    [](const ExperimentRow& r) { return !r.recovered; });
  if (missed > 0) {
    err << "experiment: " << missed << " of " << rows.size()
        << " runs did not recover the generative class\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_learn(const LearnOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream in(options.data_file);
  if (!in) {
    err << "learn: cannot open " << options.data_file << '\n';
    return kExitInputError;
  }
  CsvData csv;
  std::vector<int> cards;
  try {
    csv = read_csv_data(in);
    cards = infer_cardinalities(csv.data, options.cards);
  } catch (const ParseError& e) {
    err << "learn: " << options.data_file << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "learn: " << e.what() << '\n';
    return kExitInputError;
  }
  if (csv.data.rows() == 0) {
    err << "learn: " << options.data_file << " has no data rows\n";
    return kExitInputError;
  }
  const int n = csv.data.columns;
  auto backend = std::make_shared<EmpiricalBic>(std::move(csv.data), cards);
  CountingScorer scorer(backend);
  SearchOptions search_options;
  search_options.strict_positive = options.strict_positive;
  const SearchResult result = sges(scorer, n, options.property, search_options);
  out << format_cpdag(result.cpdag, csv.names);
  return kExitOk;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n < 1 || options.n > NodeSet::kMaxNodes || options.max_parents < 0 ||
      !(options.ess > 0.0) || options.edge_prob < 0.0 || options.edge_prob > 1.0) {
    err << "gen: need 1 <= n <= 64, max-parents >= 0, ess > 0, edge-prob in [0,1]\n";
    return kExitInputError;
  }
  const Dag dag = random_dag(options.n, options.max_parents, options.edge_prob, options.seed);
  // Parameters use a stream independent of the structure stream.
  const DiscreteBayesNet bn = sample_parameters(dag, std::vector<int>(options.n, 2), options.ess,
                                                options.seed ^ 0x5DEECE66Dull);
  const std::string text = network_to_json({bn, default_names(options.n)});
  if (options.out_file.empty() || options.out_file == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(options.out_file, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    err << "gen: failed to write " << options.out_file << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

namespace {

std::vector<int> parse_cards(const std::string& text) {
  std::vector<int> cards;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size() || value < 1) throw std::invalid_argument("");
      cards.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("--cards entry '" + item + "' is not a positive integer");
    }
  }
  return cards;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selective greedy equivalence search over Bayesian-network classes"};
  app.require_subcommand(1);

  ExperimentConfig experiment;
  std::string experiment_property = "ps:2";
  std::string algorithms = "bes,sbes";
  std::string experiment_out;
  auto* exp_cmd = app.add_subcommand("experiment", "Count unique score calls of BES and SBES");
  exp_cmd->add_option("--n-min", experiment.n_min)->required();
  exp_cmd->add_option("--n-max", experiment.n_max)->required();
  exp_cmd->add_option("--trials", experiment.trials);
  exp_cmd->add_option("--seed", experiment.seed);
  exp_cmd->add_option("--property", experiment_property);
  exp_cmd->add_option("--n-effective", experiment.n_effective);
  exp_cmd->add_option("--algorithms", algorithms);
  exp_cmd->add_option("--jobs", experiment.jobs);
  exp_cmd->add_flag("--strict-positive", experiment.strict_positive);
  exp_cmd->add_option("-o,--output", experiment_out);

  LearnOptions learn;
  std::string learn_property = "ps:2";
  std::string learn_cards;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a CPDAG from a CSV data file with SGES");
  learn_cmd->add_option("--data", learn.data_file)->required();
  learn_cmd->add_option("--property", learn_property);
  learn_cmd->add_option("--cards", learn_cards);
  learn_cmd->add_flag("--strict-positive", learn.strict_positive);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random binary network as JSON");
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--max-parents", gen.max_parents);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--edge-prob", gen.edge_prob);
  gen_cmd->add_option("--ess", gen.ess);
  gen_cmd->add_option("-o,--output", gen.out_file)->required();

  SelfcheckOptions selfcheck;
  auto* check_cmd = app.add_subcommand("selfcheck", "Cross-check against brute-force oracles");
  check_cmd->add_option("--max-n", selfcheck.max_n);
  check_cmd->add_option("--seed", selfcheck.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*exp_cmd) {
      experiment.property = parse_property(experiment_property);
      experiment.algorithms.clear();
      std::stringstream list(algorithms);
      for (std::string a; std::getline(list, a, ',');) experiment.algorithms.push_back(a);
      if (experiment_out.empty()) return cmd_experiment(experiment, out, err);
      try {
        experiment.validate();
      } catch (const std::invalid_argument& e) {
        err << "experiment: " << e.what() << '\n';
        return kExitInputError;
      }
      std::ofstream file(experiment_out);
      if (!file) {
        err << "experiment: cannot write " << experiment_out << '\n';
        return kExitInputError;
      }
      return cmd_experiment(experiment, file, err);
    }
    if (*learn_cmd) {
      learn.property = parse_property(learn_property);
      if (!learn_cards.empty()) learn.cards = parse_cards(learn_cards);
      return cmd_learn(learn, out, err);
    }
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*check_cmd) return cmd_selfcheck(selfcheck, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sges::cli
