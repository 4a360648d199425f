#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hornlearn/learners.hpp"
#include "hornlearn/oracles.hpp"

namespace hornlearn {

/// Learner plus the protocol it talks to.
///   clh          ClH over the teacher's CQ and SEQ
///   afp          AFP over the teacher's SMQ and SEQ
///   clh-entail   ClH over CQ and SEQ simulated from EMQ and EEQ
///   afp-closure  AFP over SMQ simulated from CQ, and SEQ
enum class Algorithm { clh, afp, clh_entail, afp_closure };

/// Throws std::invalid_argument on unknown names.
Algorithm parse_algorithm(std::string_view name);
std::string to_string(Algorithm algorithm);

/// Runs `algorithm` against `teacher`. The teacher's counters then hold the
/// queries actually answered at the base protocol.
LearnerReport run_learner(Algorithm algorithm, Teacher& teacher, const ClhOptions& options = {});

struct BenchRow {
  std::string algorithm;
  std::size_t n = 0;
  /// Size of the target's Guigues-Duquenne basis.
  std::size_t m = 0;
  std::uint64_t seed = 0;
  QueryStats stats;
  double wall_time_s = 0.0;
};

struct BenchConfig {
  std::vector<Algorithm> algorithms{Algorithm::clh};
  std::size_t n_min = 4, n_max = 8;
  /// Implications listed in each random target (before reduction).
  std::size_t m_min = 1, m_max = 6;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  CounterexampleStrategy strategy = CounterexampleStrategy::first();
  std::size_t jobs = 1;
};

/// One row per (algorithm, n, listed m, trial), in that nesting order, each
/// run on a fresh teacher. Rows come back in this order whatever `jobs` is.
std::vector<BenchRow> run_bench(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,n,m,seed,seq,cq,smq,emq,eeq,wall_time_s";
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace hornlearn
