#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sges/bayesnet.hpp"
#include "sges/graph.hpp"

namespace sges::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

/// "ps:K", "cl:K" or "vw:K". Throws std::invalid_argument.
ComplexityProperty parse_property(const std::string& text);

struct ExperimentConfig {
  int n_min = 4;
  int n_max = 11;
  int trials = 10;
  std::uint64_t seed = 1;
  ComplexityProperty property = ComplexityProperty::max_parents(2);
  double n_effective = 5e9;
  std::vector<std::string> algorithms{"bes", "sbes"};
  int jobs = 1;
  bool strict_positive = false;

  /// Throws std::invalid_argument.
  void validate() const;
};

/// One CSV row: n,trial,algorithm,unique_score_calls,recovered
struct ExperimentRow {
  int n = 0;
  int trial = 0;
  std::string algorithm;
  std::size_t unique_score_calls = 0;
  bool recovered = false;
};

inline constexpr const char* kExperimentHeader = "n,trial,algorithm,unique_score_calls,recovered";

/// Generative model for one (n, trial) cell: random structure with at most
/// two parents and edge attempts with probability 1/2, binary variables,
/// Dirichlet rows with equivalent sample size 1. Deterministic in
/// (seed, n, trial).
DiscreteBayesNet experiment_model(int n, int trial, std::uint64_t seed);

/// Rows in (n, trial, algorithm) order regardless of `jobs`.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);
void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

/// Reported with 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct CsvData {
  std::vector<std::string> names;
  DataMatrix data;
};

/// Header row of variable names followed by rows of non-negative integers.
/// Throws ParseError.
CsvData read_csv_data(std::istream& in);

/// max value + 1 per column, or `overrides` when given (must cover every
/// value). Throws std::invalid_argument.
std::vector<int> infer_cardinalities(const DataMatrix& data,
                                     const std::optional<std::vector<int>>& overrides = {});

/// "A -> B" per directed edge and "A -- B" per undirected edge (lower index
/// first), lines sorted.
std::string format_cpdag(const Cpdag& c, const std::vector<std::string>& names);

struct LearnOptions {
  std::string data_file;
  ComplexityProperty property = ComplexityProperty::max_parents(2);
  std::optional<std::vector<int>> cards;
  bool strict_positive = false;
};

struct GenOptions {
  int n = 0;
  int max_parents = 2;
  std::uint64_t seed = 1;
  double edge_prob = 0.5;
  double ess = 1.0;
  std::string out_file;
};

struct SelfcheckOptions {
  int max_n = 5;
  std::uint64_t seed = 1;
};

int cmd_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_learn(const LearnOptions& options, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_selfcheck(const SelfcheckOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sges::cli
