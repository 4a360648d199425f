#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "hornlearn/bench.hpp"
#include "hornlearn/errors.hpp"
#include "hornlearn/formula_io.hpp"
#include "hornlearn/gd_basis.hpp"
#include "hornlearn/generator.hpp"
#include "hornlearn/horn.hpp"
#include "hornlearn/reductions.hpp"

namespace hornlearn::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A path to a formula file, or the name of a corpus formula.
HornFormula load_formula(const std::string& source) {
  if (std::filesystem::exists(source)) return read_formula_file(source);
  try {
    return corpus_formula(source);
  } catch (const std::out_of_range&) {
    throw UsageError("no such file or corpus formula: " + source);
  }
}

std::vector<std::string> names_of(const HornFormula& h) {
  return h.has_names() ? h.names() : default_names(h.arity());
}

std::string braced(const VarSet& s, const std::vector<std::string>& names) {
  return "{" + format_varset(s, names) + "}";
}

/// "a:b" or "a" as an inclusive range.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const auto colon = text.find(':');
    const std::size_t lo = std::stoul(text.substr(0, colon), &pos);
    if (colon == std::string::npos) {
      if (pos != text.size()) throw std::invalid_argument(text);
      return {lo, lo};
    }
    const std::string tail = text.substr(colon + 1);
    const std::size_t hi = std::stoul(tail, &pos);
    if (pos != tail.size() || lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad ") + what + " \"" + text + "\" (expected lo:hi)");
  }
}

int cmd_gd(const std::string& file, std::ostream& out) {
  out << serialize_formula(gd_basis(load_formula(file)));
  return kExitOk;
}

int cmd_closure(const std::string& file, const std::string& set, std::ostream& out) {
  const HornFormula h = load_formula(file);
  const auto names = names_of(h);
  out << braced(closure(parse_varset(set, names), h), names) << '\n';
  return kExitOk;
}

int cmd_equiv(const std::string& file1, const std::string& file2, std::ostream& out) {
  const HornFormula a = load_formula(file1);
  const HornFormula b = load_formula(file2);
  if (names_of(a) != names_of(b))
    throw UsageError("the two formulas declare different variables");
  auto sep = separating_assignment(a, b);
  if (!sep) {
    out << "equivalent\n";
    return kExitOk;
  }
  const auto names = names_of(a);
  out << "not equivalent\n"
      << "separating assignment: " << sep->to_bitstring() << ' ' << braced(*sep, names)
      << " satisfies " << (satisfies(*sep, a) ? file1 : file2) << " only\n";
  return kExitNegative;
}

struct LearnArgs {
  std::string algo = "clh";
  std::string target;
  std::string strategy = "first";
  std::uint64_t seed = 0;
  bool trace = false;
};

int cmd_learn(const LearnArgs& args, std::ostream& out, std::ostream& err) {
  Algorithm algorithm;
  CounterexampleStrategy strategy;
  try {
    algorithm = parse_algorithm(args.algo);
    strategy = CounterexampleStrategy::parse(args.strategy, args.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const HornFormula target = load_formula(args.target);
  const auto names = names_of(target);

  Teacher teacher(target, strategy);
  LearnerReport report = run_learner(algorithm, teacher);
  const HornFormula learned = target.with_implications(
      {report.output.implications().begin(), report.output.implications().end()});

  if (args.trace) {
    for (const auto& ev : report.trace)
      out << "# " << to_string(ev.kind) << ' ' << ev.index << ' '
          << ev.counterexample.to_bitstring() << ' ' << braced(ev.counterexample, names) << '\n';
  }
  out << serialize_formula(learned);
  out << teacher.stats().to_string() << '\n';

  if (!equivalent(learned, target)) {
    err << "self-check failed: learned formula is not equivalent to the target\n";
    return kExitNegative;
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> algos{"clh"};
  std::string n_range = "4:8";
  std::string m_range = "1:6";
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  std::string strategy = "first";
  std::string out = "-";
  std::size_t jobs = 1;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  BenchConfig cfg;
  try {
    cfg.algorithms.clear();
    for (const auto& a : args.algos) cfg.algorithms.push_back(parse_algorithm(a));
    cfg.strategy = CounterexampleStrategy::parse(args.strategy, args.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::tie(cfg.n_min, cfg.n_max) = parse_range(args.n_range, "n range");
  std::tie(cfg.m_min, cfg.m_max) = parse_range(args.m_range, "m range");
  if (cfg.n_min == 0) throw UsageError("n range must start at 1 or more");
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.jobs = args.jobs;

  const auto rows = run_bench(cfg);
  if (args.out == "-") {
    write_bench_csv(out, rows);
  } else {
    std::ofstream file(args.out);
    if (!file) throw UsageError("cannot write " + args.out);
    write_bench_csv(file, rows);
  }
  return kExitOk;
}

struct LowerBoundArgs {
  std::size_t n = 10;
  std::string strategy = "exhaustive";
  std::uint64_t seed = 0;
  bool summary_only = false;
};

int cmd_lowerbound(const LowerBoundArgs& args, std::ostream& out, std::ostream& err) {
  LowerBoundStrategy strategy;
  if (args.strategy == "exhaustive") {
    strategy.kind = LowerBoundStrategy::Kind::exhaustive;
  } else if (args.strategy == "top-first") {
    strategy.kind = LowerBoundStrategy::Kind::top_first;
  } else if (args.strategy == "random") {
    strategy.kind = LowerBoundStrategy::Kind::random;
    strategy.seed = args.seed;
  } else {
    throw UsageError("unknown strategy \"" + args.strategy +
                     "\" (expected exhaustive, top-first or random)");
  }
  if (args.n < 2 || args.n > 16) throw UsageError("--n must be between 2 and 16");

  const LowerBoundReport r = lower_bound_demo(args.n, strategy);
  if (!args.summary_only) {
    out << "query,assignment,answer,remaining\n";
    for (std::size_t i = 0; i < r.steps.size(); ++i)
      out << i + 1 << ',' << r.steps[i].query.to_bitstring() << ','
          << (r.steps[i].answer ? "yes" : "no") << ',' << r.steps[i].remaining << '\n';
  }
  out << "# n=" << r.arity << " candidates=" << r.initial_candidates << " queries=" << r.queries
      << " remaining=" << r.remaining;
  if (r.ruled_out_when_determined)
    out << " ruled_out_when_determined=" << *r.ruled_out_when_determined;
  if (r.determined_closure) out << " closure_of_bottom=" << r.determined_closure->to_bitstring();
  out << " invariant=" << (r.invariant_held ? "held" : "violated") << '\n';

  if (!r.invariant_held) {
    err << "adversary invariant violated\n";
    return kExitNegative;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact learning of definite Horn formulas", "hornlearn"};
  app.require_subcommand(1);

  std::string gd_file;
  auto* gd = app.add_subcommand("gd", "Print the Guigues-Duquenne basis of a formula");
  gd->add_option("file", gd_file, "Formula file or corpus name")->required();

  std::string closure_file, closure_set;
  auto* cl = app.add_subcommand("closure", "Print the closure of a variable set");
  cl->add_option("file", closure_file, "Formula file or corpus name")->required();
  cl->add_option("varset", closure_set, "Variables, e.g. \"a c\" or {a,c}; - for none")
      ->required();

  std::string eq1, eq2;
  auto* eq = app.add_subcommand("equiv", "Decide whether two formulas are equivalent");
  eq->add_option("file1", eq1)->required();
  eq->add_option("file2", eq2)->required();

  LearnArgs learn_args;
  auto* learn = app.add_subcommand("learn", "Learn a target with a simulated teacher");
  learn->add_option("--algo", learn_args.algo, "clh | afp | clh-entail | afp-closure")
      ->capture_default_str();
  learn->add_option("--target", learn_args.target, "Formula file or corpus name")->required();
  learn->add_option("--strategy", learn_args.strategy, "first | random | minimal")
      ->capture_default_str();
  learn->add_option("--seed", learn_args.seed, "Seed for the random strategy")
      ->capture_default_str();
  learn->add_flag("--trace", learn_args.trace, "Print counterexample events as comments");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Count queries over random targets, as CSV");
  bench->add_option("--algos", bench_args.algos, "Comma-separated algorithms")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--n-range", bench_args.n_range, "Arities lo:hi")->capture_default_str();
  bench->add_option("--m-range", bench_args.m_range, "Listed implications lo:hi")
      ->capture_default_str();
  bench->add_option("--trials", bench_args.trials)->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--strategy", bench_args.strategy)->capture_default_str();
  bench->add_option("--out", bench_args.out, "CSV path, - for stdout")->capture_default_str();
  bench->add_option("--jobs", bench_args.jobs, "Runs in flight at once")->capture_default_str();

  LowerBoundArgs lb_args;
  auto* lb = app.add_subcommand("lowerbound", "Play membership queries against the adversary");
  lb->add_option("--n", lb_args.n)->required();
  lb->add_option("--strategy", lb_args.strategy, "exhaustive | top-first | random")
      ->capture_default_str();
  lb->add_option("--seed", lb_args.seed)->capture_default_str();
  lb->add_flag("--summary-only", lb_args.summary_only, "Skip the per-query rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gd) return cmd_gd(gd_file, out);
    if (*cl) return cmd_closure(closure_file, closure_set, out);
    if (*eq) return cmd_equiv(eq1, eq2, out);
    if (*learn) return cmd_learn(learn_args, out, err);
    if (*bench) return cmd_bench(bench_args, out);
    if (*lb) return cmd_lowerbound(lb_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}

}  // namespace hornlearn::cli
