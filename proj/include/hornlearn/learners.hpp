#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hornlearn/formula.hpp"
#include "hornlearn/oracles.hpp"

namespace hornlearn {

/// One step of a learner run, recorded in order.
struct TraceEvent {
  enum class Kind {
    append,    ///< counterexample appended as a new negative entry
    refine,    ///< entry `index` replaced by its meet with the counterexample
    positive,  ///< positive counterexample used to shrink consequents (AFP only)
  };

  Kind kind;
  std::size_t index;
  Assignment counterexample;
};

const char* to_string(TraceEvent::Kind kind);

struct LearnerReport {
  HornFormula output;
  /// Queries issued by the learner at its own interface.
  QueryStats stats;
  std::vector<TraceEvent> trace;
};

/// Conjunction of ones(y) -> ones(y*) over the negative list, in order.
/// `closures[i]` must hold the closure of `negatives[i]`; a size mismatch
/// throws PreconditionError.
HornFormula hyp(std::size_t arity, std::span<const Assignment> negatives,
                std::span<const Assignment> closures);

struct ClhOptions {
  /// Keep scanning the negative list after a refinement instead of stopping
  /// at the first refinable entry. Non-default reading of the algorithm; the
  /// correctness guarantees are stated for the default only.
  bool continue_after_refine = false;
  /// Called with every hypothesis before it is submitted.
  std::function<void(const HornFormula&)> on_hypothesis;
  /// Called with every counterexample and the hypothesis it refutes.
  std::function<void(const HornFormula&, const Assignment&)> on_counterexample;
  /// Abort with TeacherError once this many equivalence queries were asked.
  std::uint64_t max_equivalence_queries = 1'000'000;
};

/// Learns a definite Horn target from closure and equivalence queries.
///
/// Keeps a list of negative examples y_1..y_k with their closures and asks
/// whether hyp(N) is equivalent to the target. Since the target entails every
/// hypothesis, every counterexample x is negative. The first y_i whose meet
/// y = x & y_i is strictly below y_i and still negative (y < y*) is replaced
/// by y; if there is none, x is appended. The final hypothesis is the
/// Guigues-Duquenne basis of the target, reached within nm + m + 1
/// equivalence queries where m is the size of that basis.
///
/// A counterexample that falsifies the hypothesis is positive, which no
/// correct teacher can produce here; it raises TeacherError.
LearnerReport clh(ClosureOracle& closures, EquivalenceOracle& equivalence,
                  const ClhOptions& options = {});

struct AfpOptions {
  std::function<void(const HornFormula&)> on_hypothesis;
  std::uint64_t max_equivalence_queries = 1'000'000;
};

/// Learns a definite Horn target from membership and equivalence queries.
///
/// Same negative-list bookkeeping as clh, with memberships in place of
/// closures. Without closures each entry's consequent starts as every
/// variable outside the entry and is cut down by the positive
/// counterexamples seen so far (the strongest consequent compatible with
/// them).
LearnerReport afp(MembershipOracle& membership, EquivalenceOracle& equivalence,
                  const AfpOptions& options = {});

}  // namespace hornlearn
