#include "hornlearn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <ostream>
#include <stdexcept>

#include "hornlearn/gd_basis.hpp"
#include "hornlearn/generator.hpp"
#include "hornlearn/reductions.hpp"

namespace hornlearn {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "clh") return Algorithm::clh;
  if (name == "afp") return Algorithm::afp;
  if (name == "clh-entail") return Algorithm::clh_entail;
  if (name == "afp-closure") return Algorithm::afp_closure;
  throw std::invalid_argument("unknown algorithm \"" + std::string(name) +
                              "\" (expected clh, afp, clh-entail or afp-closure)");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::clh: return "clh";
    case Algorithm::afp: return "afp";
    case Algorithm::clh_entail: return "clh-entail";
    case Algorithm::afp_closure: return "afp-closure";
  }
  return "?";
}

LearnerReport run_learner(Algorithm algorithm, Teacher& teacher, const ClhOptions& options) {
  switch (algorithm) {
    case Algorithm::clh:
      return clh(teacher, teacher, options);
    case Algorithm::afp:
      return afp(teacher, teacher);
    case Algorithm::clh_entail: {
      CqFromEmq closures(teacher);
      SeqFromEeqEmq equivalence(teacher, teacher);
      return clh(closures, equivalence, options);
    }
    case Algorithm::afp_closure: {
      SmqFromCq membership(teacher);
      return afp(membership, teacher);
    }
  }
  throw std::logic_error("run_learner: unhandled algorithm");
}

namespace {

struct BenchTask {
  Algorithm algorithm;
  std::size_t n;
  std::size_t listed;
  std::uint64_t seed;
};

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t n, std::uint64_t m, std::uint64_t trial) {
  // splitmix64 over the combined key
  std::uint64_t z = base ^ (n << 48) ^ (m << 32) ^ trial;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BenchRow run_task(const BenchTask& task, CounterexampleStrategy strategy) {
  GenConfig cfg;
  cfg.arity = task.n;
  cfg.implications = task.listed;
  cfg.antecedent_min = 0;
  cfg.antecedent_max = std::min<std::size_t>(3, task.n);
  cfg.consequent_min = 1;
  cfg.consequent_max = std::min<std::size_t>(3, task.n);
  cfg.seed = task.seed;
  HornFormula target = random_formula(cfg);

  if (strategy.kind == CounterexampleStrategy::Kind::random) strategy.seed ^= task.seed;
  Teacher teacher(target, strategy);
  auto start = std::chrono::steady_clock::now();
  run_learner(task.algorithm, teacher);
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  BenchRow row;
  row.algorithm = to_string(task.algorithm);
  row.n = task.n;
  row.m = gd_basis(target).size();
  row.seed = task.seed;
  row.stats = teacher.stats();
  row.wall_time_s = elapsed.count();
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.n_min == 0 || config.n_min > config.n_max || config.m_min > config.m_max)
    throw std::invalid_argument("run_bench: empty or invalid n/m range");

  std::vector<BenchTask> tasks;
  for (Algorithm a : config.algorithms)
    for (std::size_t n = config.n_min; n <= config.n_max; ++n)
      for (std::size_t m = config.m_min; m <= config.m_max; ++m)
        for (std::size_t t = 0; t < config.trials; ++t)
          tasks.push_back({a, n, m, mix_seed(config.seed, n, m, t)});

  std::vector<BenchRow> rows(tasks.size());
  const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  for (std::size_t begin = 0; begin < tasks.size(); begin += jobs) {
    const std::size_t end = std::min(tasks.size(), begin + jobs);
    std::vector<std::future<BenchRow>> running;
    for (std::size_t i = begin; i < end; ++i)
      running.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                   run_task, tasks[i], config.strategy));
    for (std::size_t i = begin; i < end; ++i) rows[i] = running[i - begin].get();
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.stats.seq << ','
        << r.stats.cq << ',' << r.stats.smq << ',' << r.stats.emq << ',' << r.stats.eeq << ','
        << r.wall_time_s << '\n';
  }
}

}  // namespace hornlearn
