#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "sges/cli.hpp"
#include "sges/network_io.hpp"
#include "sges/verify.hpp"

namespace sges::cli {

namespace {

constexpr int kGraphsPerSize = 200;
constexpr int kMaxDumps = 3;

std::string describe(const Dag& g) {
  std::ostringstream s;
  s << "dag n=" << g.node_count() << " {";
  const char* sep = "";
  for (const auto& [a, b] : g.edges()) {
    s << sep << a << "->" << b;
    sep = ", ";
  }
  s << "}";
  return s.str();
}

std::string describe(const Cpdag& c) {
  std::string text = format_cpdag(c, default_names(c.node_count()));
  std::replace(text.begin(), text.end(), '\n', ';');
  return "cpdag n=" + std::to_string(c.node_count()) + " {" + text + "}";
}

std::string describe(const DeleteOp& op) {
  return "Delete(" + std::to_string(op.x) + "," + std::to_string(op.y) + "," + op.h.to_string() +
         ")";
}

class Check {
 public:
  Check(std::string name, std::ostream& out) : name_(std::move(name)), out_(out) {}

  void run_case() { ++cases_; }

  void fail(const std::string& dump) {
    if (failures_++ < kMaxDumps) out_ << "  counterexample [" << name_ << "]: " << dump << '\n';
  }

  bool report() const {
    out_ << (failures_ == 0 ? "ok   " : "FAIL ") << name_ << ": " << cases_ << " cases";
    if (failures_ > 0) out_ << ", " << failures_ << " violations";
    out_ << '\n';
    return failures_ == 0;
  }

 private:
  std::string name_;
  std::ostream& out_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
};

std::vector<Dag> sample_dags(int n, std::mt19937_64& rng) {
  std::vector<Dag> dags;
  for (int i = 0; i < kGraphsPerSize; ++i) {
    const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    dags.push_back(random_dag(n, std::max(0, n - 1), p, rng()));
  }
  return dags;
}

void check_dsep(const Dag& g, Check& check) {
  const int n = g.node_count();
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      const NodeSet rest = NodeSet::first(n).without(a).without(b);
      for_each_subset(rest, n, [&](NodeSet s) {
        check.run_case();
        const IndependenceQuery q{a, b, s};
        if (d_separated(g, q) != verify::brute_dsep(g, q))
          check.fail(describe(g) + " query " + std::to_string(a) + " _|_ " + std::to_string(b) +
                     " | " + s.to_string());
      });
    }
}

void check_class(const Dag& g, Check& labeling, Check& membership) {
  const verify::EquivalenceClass cls = verify::enumerate_class(g);
  labeling.run_case();
  if (!(cpdag_from_dag(g).pdag() == verify::labeling_from_class(cls)))
    labeling.fail(describe(g) + " gives " + describe(cpdag_from_dag(g)));
  membership.run_case();
  const verify::EquivalenceClass from_cpdag = verify::enumerate_class(cpdag_from_dag(g));
  if (std::find(from_cpdag.members.begin(), from_cpdag.members.end(), g) ==
          from_cpdag.members.end() ||
      from_cpdag.members.size() != cls.members.size())
    membership.fail(describe(g) + " class of size " + std::to_string(cls.members.size()) +
                    ", cpdag enumeration size " + std::to_string(from_cpdag.members.size()));
}

void check_operators(const Cpdag& c, Check& check) {
  check.run_case();
  std::set<Cpdag> generated;
  for (const DeleteOp& op : generate_all_deletes(c)) generated.insert(apply_delete(c, op));
  if (generated != verify::brute_deletes(c))
    check.fail(describe(c) + " generated " + std::to_string(generated.size()) +
               " results, brute force " + std::to_string(verify::brute_deletes(c).size()));
}

void check_coverage(const Cpdag& c, Check& check) {
  const std::vector<DeleteOp> all = generate_all_deletes(c);
  for (auto kind : {ComplexityProperty::Kind::MaxParents, ComplexityProperty::Kind::MaxClique,
                    ComplexityProperty::Kind::VWidth}) {
    for (int k = 0; k <= 3; ++k) {
      const ComplexityProperty p{kind, k};
      check.run_case();
      const std::vector<DeleteOp> selective = generate_selective_deletes(c, p);
      for (const DeleteOp& op : verify::pi_consistent_filter(c, all, p)) {
        const bool found = std::any_of(selective.begin(), selective.end(),
                                       [&](const DeleteOp& s) { return s.same_as(op); });
        if (!found) check.fail(describe(c) + " " + p.to_string() + " misses " + describe(op));
      }
    }
  }
}

}  // namespace

int cmd_selfcheck(const SelfcheckOptions& options, std::ostream& out, std::ostream& err) {
  if (options.max_n < 1 || options.max_n > verify::kMaxBruteNodes) {
    err << "selfcheck: --max-n must be between 1 and " << verify::kMaxBruteNodes << '\n';
    return kExitInputError;
  }
  std::mt19937_64 rng(options.seed);
  Check dsep("d-separation vs simple-path enumeration", out);
  Check labeling("cpdag labeling vs enumerated class", out);
  Check membership("class enumeration contains the dag", out);
  Check operators("delete operators vs class-wide single-edge deletions", out);
  Check coverage("selective generation covers consistent deletes", out);

  const int exhaustive_n = std::min(options.max_n, 4);
  for (int n = 1; n <= exhaustive_n; ++n)
    for (const Dag& g : verify::enumerate_dags(n)) {
      check_dsep(g, dsep);
      check_class(g, labeling, membership);
    }
  for (int n = exhaustive_n + 1; n <= options.max_n; ++n)
    for (const Dag& g : sample_dags(n, rng)) {
      check_dsep(g, dsep);
      check_class(g, labeling, membership);
    }

  const int operator_n = std::min(options.max_n, 5);
  for (int n = 2; n <= operator_n; ++n) {
    std::set<Cpdag> classes;
    for (const Dag& g : sample_dags(n, rng)) classes.insert(cpdag_from_dag(g));
    classes.insert(complete_cpdag(n));
    for (const Cpdag& c : classes) {
      check_operators(c, operators);
      check_coverage(c, coverage);
    }
  }

  bool ok = true;
  for (const Check* c : {&dsep, &labeling, &membership, &operators, &coverage})
    ok = c->report() && ok;
  return ok ? kExitOk : kExitFailure;
}

}  // namespace sges::cli
