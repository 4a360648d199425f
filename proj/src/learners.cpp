#include "hornlearn/learners.hpp"

#include "hornlearn/errors.hpp"
#include "hornlearn/horn.hpp"

namespace hornlearn {

const char* to_string(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::append: return "append";
    case TraceEvent::Kind::refine: return "refine";
    case TraceEvent::Kind::positive: return "positive";
  }
  return "?";
}

HornFormula hyp(std::size_t arity, std::span<const Assignment> negatives,
                std::span<const Assignment> closures) {
  if (negatives.size() != closures.size())
    throw PreconditionError("hyp: " + std::to_string(negatives.size()) + " entries but " +
                            std::to_string(closures.size()) + " memoized closures");
  std::vector<Implication> imps;
  imps.reserve(negatives.size());
  for (std::size_t i = 0; i < negatives.size(); ++i) imps.push_back({negatives[i], closures[i]});
  return HornFormula(arity, std::move(imps));
}

namespace {

void check_counterexample_arity(const Assignment& x, std::size_t n) {
  if (x.arity() != n) throw_arity_mismatch("counterexample", n, x.arity());
}

}  // namespace

LearnerReport clh(ClosureOracle& closures, EquivalenceOracle& equivalence,
                  const ClhOptions& options) {
  const std::size_t n = closures.arity();
  if (equivalence.arity() != n) throw_arity_mismatch("clh", n, equivalence.arity());

  std::vector<Assignment> negatives;
  std::vector<Assignment> memo;  // memo[i] = closure of negatives[i]
  LearnerReport report;

  while (true) {
    HornFormula hypothesis = hyp(n, negatives, memo);
    if (options.on_hypothesis) options.on_hypothesis(hypothesis);
    if (report.stats.seq >= options.max_equivalence_queries)
      throw TeacherError("clh: equivalence query budget exhausted");
    ++report.stats.seq;
    SeqAnswer answer = equivalence.seq(hypothesis);
    if (answer.is_yes()) {
      report.output = std::move(hypothesis);
      return report;
    }

    const Assignment x = std::move(*answer.counterexample);
    check_counterexample_arity(x, n);
    if (options.on_counterexample) options.on_counterexample(hypothesis, x);
    // The target entails every hypothesis, so a valid counterexample must
    // satisfy the hypothesis and falsify the target.
    if (!satisfies(x, hypothesis))
      throw TeacherError("clh: received positive counterexample " + x.to_bitstring() +
                         "; the target entails every hypothesis, so this cannot happen");

    bool changed = false;
    for (std::size_t i = 0; i < negatives.size(); ++i) {
      Assignment meet = x & negatives[i];
      if (!meet.is_strict_subset_of(negatives[i])) continue;
      ++report.stats.cq;
      Assignment meet_closure = closures.cq(meet);
      if (!meet.is_strict_subset_of(meet_closure)) continue;  // positive
      negatives[i] = meet;
      memo[i] = std::move(meet_closure);
      report.trace.push_back({TraceEvent::Kind::refine, i, x});
      changed = true;
      if (!options.continue_after_refine) break;
    }
    if (!changed) {
      ++report.stats.cq;
      Assignment x_closure = closures.cq(x);
      if (x_closure == x)
        throw TeacherError("clh: counterexample " + x.to_bitstring() +
                           " is closed under the target, hence not negative");
      report.trace.push_back({TraceEvent::Kind::append, negatives.size(), x});
      negatives.push_back(x);
      memo.push_back(std::move(x_closure));
    }
  }
}

LearnerReport afp(MembershipOracle& membership, EquivalenceOracle& equivalence,
                  const AfpOptions& options) {
  const std::size_t n = membership.arity();
  if (equivalence.arity() != n) throw_arity_mismatch("afp", n, equivalence.arity());

  std::vector<Assignment> negatives;
  std::vector<VarSet> consequents;
  std::vector<Assignment> positives;
  LearnerReport report;

  // Strongest consequent for `entry` that every positive example seen so far
  // still satisfies.
  auto strongest_consequent = [&](const Assignment& entry) {
    VarSet cons = entry.complement();
    for (const auto& p : positives)
      if (entry.is_subset_of(p)) cons &= p;
    return cons;
  };

  while (true) {
    std::vector<Implication> imps;
    imps.reserve(negatives.size());
    for (std::size_t i = 0; i < negatives.size(); ++i) {
      if (consequents[i].none())
        throw TeacherError("afp: entry " + negatives[i].to_bitstring() +
                           " is contradicted by the positive examples");
      imps.push_back({negatives[i], consequents[i]});
    }
    HornFormula hypothesis(n, std::move(imps));
    if (options.on_hypothesis) options.on_hypothesis(hypothesis);
    if (report.stats.seq >= options.max_equivalence_queries)
      throw TeacherError("afp: equivalence query budget exhausted");
    ++report.stats.seq;
    SeqAnswer answer = equivalence.seq(hypothesis);
    if (answer.is_yes()) {
      report.output = std::move(hypothesis);
      return report;
    }

    const Assignment x = std::move(*answer.counterexample);
    check_counterexample_arity(x, n);

    if (!satisfies(x, hypothesis)) {
      // Positive: it satisfies the target, so every entry below it can only
      // imply variables of x.
      for (std::size_t i = 0; i < negatives.size(); ++i)
        if (negatives[i].is_subset_of(x)) consequents[i] &= x;
      positives.push_back(x);
      report.trace.push_back({TraceEvent::Kind::positive, positives.size() - 1, x});
      continue;
    }

    bool changed = false;
    for (std::size_t i = 0; i < negatives.size(); ++i) {
      Assignment meet = x & negatives[i];
      if (!meet.is_strict_subset_of(negatives[i])) continue;
      ++report.stats.smq;
      if (membership.smq(meet)) continue;
      negatives[i] = meet;
      consequents[i] = strongest_consequent(negatives[i]);
      report.trace.push_back({TraceEvent::Kind::refine, i, x});
      changed = true;
      break;
    }
    if (!changed) {
      report.trace.push_back({TraceEvent::Kind::append, negatives.size(), x});
      negatives.push_back(x);
      consequents.push_back(strongest_consequent(x));
    }
  }
}

}  // namespace hornlearn
