#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hornlearn/formula.hpp"
#include "hornlearn/varset.hpp"

namespace hornlearn {

/// Number of queries answered, per protocol.
struct QueryStats {
  std::uint64_t smq = 0;
  std::uint64_t seq = 0;
  std::uint64_t cq = 0;
  std::uint64_t emq = 0;
  std::uint64_t eeq = 0;

  QueryStats& operator+=(const QueryStats& o);
  friend QueryStats operator+(QueryStats a, const QueryStats& b) { return a += b; }
  friend QueryStats operator-(const QueryStats& a, const QueryStats& b);
  bool operator==(const QueryStats&) const = default;

  std::uint64_t total() const noexcept { return smq + seq + cq + emq + eeq; }
  /// "seq=<..> cq=<..> smq=<..> emq=<..> eeq=<..>"
  std::string to_string() const;
};

/// Answer to a standard equivalence query: YES, or an assignment satisfying
/// exactly one of target and hypothesis.
struct SeqAnswer {
  std::optional<Assignment> counterexample;

  static SeqAnswer yes() { return {}; }
  static SeqAnswer no(Assignment x) { return {std::move(x)}; }
  bool is_yes() const noexcept { return !counterexample.has_value(); }
};

/// Answer to an entailment equivalence query: YES, or a clause entailed by
/// exactly one of target and hypothesis.
struct EeqAnswer {
  std::optional<EntailmentClause> counterexample;

  static EeqAnswer yes() { return {}; }
  static EeqAnswer no(EntailmentClause c) { return {std::move(c)}; }
  bool is_yes() const noexcept { return !counterexample.has_value(); }
};

// One interface per query type. Teachers implement all of them; adapters in
// reductions.hpp implement one by calling others, so learners never see
// which protocol actually answers.

class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;
  virtual std::size_t arity() const = 0;
  /// Does x satisfy the target?
  virtual bool smq(const Assignment& x) = 0;
};

class ClosureOracle {
 public:
  virtual ~ClosureOracle() = default;
  virtual std::size_t arity() const = 0;
  /// Closure of y with respect to the target.
  virtual Assignment cq(const Assignment& y) = 0;
};

class EquivalenceOracle {
 public:
  virtual ~EquivalenceOracle() = default;
  virtual std::size_t arity() const = 0;
  virtual SeqAnswer seq(const HornFormula& hypothesis) = 0;
};

class EntailmentOracle {
 public:
  virtual ~EntailmentOracle() = default;
  virtual std::size_t arity() const = 0;
  /// Does the target entail the clause?
  virtual bool emq(const EntailmentClause& clause) = 0;
};

class EntailmentEquivalenceOracle {
 public:
  virtual ~EntailmentEquivalenceOracle() = default;
  virtual std::size_t arity() const = 0;
  virtual EeqAnswer eeq(const HornFormula& hypothesis) = 0;
};

/// How a teacher picks among several valid counterexamples.
///
///  - first:   deterministic scan in implication-list order.
///  - random:  seeded random choice, including random upward extensions.
///  - minimal: a counterexample of least popcount (hence bitwise minimal),
///             ties broken lexicographically.
///
/// Every strategy prefers counterexamples that satisfy the hypothesis and
/// falsify the target (negative ones) when any exist.
struct CounterexampleStrategy {
  enum class Kind { first, random, minimal };

  Kind kind = Kind::first;
  std::uint64_t seed = 0;

  static CounterexampleStrategy first() { return {Kind::first, 0}; }
  static CounterexampleStrategy random(std::uint64_t seed) { return {Kind::random, seed}; }
  static CounterexampleStrategy minimal() { return {Kind::minimal, 0}; }

  /// "first", "random" or "minimal"; throws std::invalid_argument otherwise.
  static CounterexampleStrategy parse(std::string_view name, std::uint64_t seed = 0);
  std::string name() const;
};

/// A fixed target answering all five query types, with per-type counters.
///
/// Counters mutate, so an instance belongs to one thread at a time. The
/// target itself never changes.
class Teacher final : public MembershipOracle,
                      public ClosureOracle,
                      public EquivalenceOracle,
                      public EntailmentOracle,
                      public EntailmentEquivalenceOracle {
 public:
  explicit Teacher(HornFormula target,
                   CounterexampleStrategy strategy = CounterexampleStrategy::first());

  std::size_t arity() const override { return target_.arity(); }
  const HornFormula& target() const noexcept { return target_; }
  const QueryStats& stats() const noexcept { return stats_; }
  const CounterexampleStrategy& strategy() const noexcept { return strategy_; }

  bool smq(const Assignment& x) override;
  Assignment cq(const Assignment& y) override;
  /// YES iff the hypothesis is equivalent to the target. Negative
  /// counterexamples are closures under the hypothesis of target antecedents
  /// it does not entail; only when there are none is a positive one (the
  /// target closure of a hypothesis antecedent the target does not entail)
  /// returned.
  SeqAnswer seq(const HornFormula& hypothesis) override;
  bool emq(const EntailmentClause& clause) override;
  /// Clauses entailed by the target but not the hypothesis are preferred.
  EeqAnswer eeq(const HornFormula& hypothesis) override;

 private:
  void check_arity(const char* where, std::size_t got) const;
  Assignment pick_assignment(const std::vector<Assignment>& candidates,
                             const HornFormula& close_under, const HornFormula& must_fail);
  EntailmentClause pick_clause(const std::vector<EntailmentClause>& candidates);

  HornFormula target_;
  CounterexampleStrategy strategy_;
  QueryStats stats_;
  std::mt19937_64 rng_;
};

/// The member f_x of the hard family: forces every variable of x and sends
/// every variable outside x to all variables. Its models are exactly x and
/// the top assignment. Throws PreconditionError when x is the top.
HornFormula family_member(const Assignment& x);

/// Membership teacher that answers NO to everything but the top assignment
/// while keeping track of which f_x (x != top) are still consistent with its
/// answers. Each answer rules out at most one candidate, so the closure of
/// the bottom assignment stays undetermined while two or more remain.
class AdversarialSmqTeacher final : public MembershipOracle {
 public:
  /// Requires 1 <= arity <= 24.
  explicit AdversarialSmqTeacher(std::size_t arity);

  std::size_t arity() const override { return arity_; }
  bool smq(const Assignment& x) override;

  std::uint64_t queries() const noexcept { return queries_; }
  std::uint64_t initial_candidates() const noexcept { return (std::uint64_t{1} << arity_) - 1; }
  std::uint64_t remaining_candidates() const noexcept { return remaining_; }
  bool is_consistent(const Assignment& x) const;
  /// The closure of the bottom assignment, once a single candidate is left.
  std::optional<Assignment> determined_bottom_closure() const;

 private:
  std::uint64_t key(const Assignment& x) const;

  std::size_t arity_;
  std::vector<bool> ruled_out_;
  std::uint64_t remaining_;
  std::uint64_t queries_ = 0;
};

}  // namespace hornlearn
