#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hornlearn/formula.hpp"
#include "hornlearn/learners.hpp"
#include "hornlearn/oracles.hpp"

namespace hornlearn {

// Query simulations between protocols. The free functions answer one outer
// query using inner oracles and add what they spent to `spent` when given.
// The adapter classes wrap them behind the outer interface, so they stack
// and learners run unchanged on top of any protocol.
//
// Inner-query ceilings per outer query (n = arity):
//   cq_from_emq      <= n EMQ        smq_from_emq     <= n EMQ
//   emq_from_cq       = 1 CQ         smq_from_cq       = 1 CQ
//   eeq_from_seq_cq   = 1 SEQ + <= 1 CQ
//   seq_from_eeq_emq  = 1 EEQ + <= n EMQ

/// One EMQ ones(y) -> b per variable b outside y.
Assignment cq_from_emq(EntailmentOracle& emq, const Assignment& y, QueryStats* spent = nullptr);

/// x is negative iff some b outside x follows from ones(x); stops at the
/// first such b.
bool smq_from_emq(EntailmentOracle& emq, const Assignment& x, QueryStats* spent = nullptr);

/// One EEQ. A clause a -> b entailed by the target but not the hypothesis
/// turns into the closure of a under the hypothesis (negative, no EMQs); a
/// clause entailed only by the hypothesis turns into the target closure of a
/// obtained through cq_from_emq (positive).
SeqAnswer seq_from_eeq_emq(EntailmentEquivalenceOracle& eeq, EntailmentOracle& emq,
                           const HornFormula& hypothesis, QueryStats* spent = nullptr);

/// head is in the closure of the antecedent.
bool emq_from_cq(ClosureOracle& cq, const EntailmentClause& clause, QueryStats* spent = nullptr);

/// x equals its closure.
bool smq_from_cq(ClosureOracle& cq, const Assignment& x, QueryStats* spent = nullptr);

/// One SEQ. A counterexample x that satisfies the hypothesis is negative: a
/// CQ gives x* and the clause is ones(x) -> v for the lowest v in x* - x.
/// Otherwise x is positive and the clause is ones(x) -> v for the lowest v
/// outside x that the hypothesis derives from x, with no further query.
EeqAnswer eeq_from_seq_cq(EquivalenceOracle& seq, ClosureOracle& cq,
                          const HornFormula& hypothesis, QueryStats* spent = nullptr);

/// Inner-query accounting of one adapter.
struct AdapterStats {
  std::uint64_t calls = 0;
  QueryStats total;
  QueryStats last;
  /// Componentwise maximum over all calls.
  QueryStats max_per_call;

  void record(const QueryStats& call);
};

class CqFromEmq final : public ClosureOracle {
 public:
  explicit CqFromEmq(EntailmentOracle& emq) : emq_(emq) {}
  std::size_t arity() const override { return emq_.arity(); }
  Assignment cq(const Assignment& y) override;
  const AdapterStats& adapter_stats() const noexcept { return stats_; }

 private:
  EntailmentOracle& emq_;
  AdapterStats stats_;
};

class SmqFromEmq final : public MembershipOracle {
 public:
  explicit SmqFromEmq(EntailmentOracle& emq) : emq_(emq) {}
  std::size_t arity() const override { return emq_.arity(); }
  bool smq(const Assignment& x) override;
  const AdapterStats& adapter_stats() const noexcept { return stats_; }

 private:
  EntailmentOracle& emq_;
  AdapterStats stats_;
};

class SeqFromEeqEmq final : public EquivalenceOracle {
 public:
  SeqFromEeqEmq(EntailmentEquivalenceOracle& eeq, EntailmentOracle& emq);
  std::size_t arity() const override { return eeq_.arity(); }
  SeqAnswer seq(const HornFormula& hypothesis) override;
  const AdapterStats& adapter_stats() const noexcept { return stats_; }

 private:
  EntailmentEquivalenceOracle& eeq_;
  EntailmentOracle& emq_;
  AdapterStats stats_;
};

class EmqFromCq final : public EntailmentOracle {
 public:
  explicit EmqFromCq(ClosureOracle& cq) : cq_(cq) {}
  std::size_t arity() const override { return cq_.arity(); }
  bool emq(const EntailmentClause& clause) override;
  const AdapterStats& adapter_stats() const noexcept { return stats_; }

 private:
  ClosureOracle& cq_;
  AdapterStats stats_;
};

class SmqFromCq final : public MembershipOracle {
 public:
  explicit SmqFromCq(ClosureOracle& cq) : cq_(cq) {}
  std::size_t arity() const override { return cq_.arity(); }
  bool smq(const Assignment& x) override;
  const AdapterStats& adapter_stats() const noexcept { return stats_; }

 private:
  ClosureOracle& cq_;
  AdapterStats stats_;
};

class EeqFromSeqCq final : public EntailmentEquivalenceOracle {
 public:
  EeqFromSeqCq(EquivalenceOracle& seq, ClosureOracle& cq);
  std::size_t arity() const override { return seq_.arity(); }
  EeqAnswer eeq(const HornFormula& hypothesis) override;
  const AdapterStats& adapter_stats() const noexcept { return stats_; }

 private:
  EquivalenceOracle& seq_;
  ClosureOracle& cq_;
  AdapterStats stats_;
};

/// Closure queries answered from membership and equivalence queries: the
/// first call learns the target with afp, later calls close locally over the
/// learned formula. The learned formula is cached for the adapter's lifetime.
class CqFromSmqSeq final : public ClosureOracle {
 public:
  CqFromSmqSeq(MembershipOracle& smq, EquivalenceOracle& seq);
  std::size_t arity() const override { return smq_.arity(); }
  Assignment cq(const Assignment& y) override;
  /// The learned formula, once the first closure query has been answered.
  const std::optional<HornFormula>& learned() const noexcept { return learned_; }
  const AdapterStats& adapter_stats() const noexcept { return stats_; }

 private:
  MembershipOracle& smq_;
  EquivalenceOracle& seq_;
  std::optional<HornFormula> learned_;
  AdapterStats stats_;
};

/// Order in which lower_bound_demo asks membership queries.
struct LowerBoundStrategy {
  enum class Kind {
    exhaustive,  ///< all assignments in lexicographic order, top last
    top_first,   ///< the top assignment, then as exhaustive
    random,      ///< a seeded random permutation
  };
  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
};

struct LowerBoundStep {
  Assignment query;
  bool answer;
  std::uint64_t remaining;
};

struct LowerBoundReport {
  std::size_t arity = 0;
  std::uint64_t initial_candidates = 0;
  std::uint64_t queries = 0;
  std::uint64_t remaining = 0;
  std::vector<LowerBoundStep> steps;
  /// remaining >= initial - queries held after every query.
  bool invariant_held = true;
  /// Candidates ruled out when the closure of the bottom got pinned down.
  std::optional<std::uint64_t> ruled_out_when_determined;
  std::optional<Assignment> determined_closure;
};

/// Plays `strategy` against AdversarialSmqTeacher(n), trying to determine
/// the closure of the bottom assignment, until one candidate remains or the
/// strategy runs out of queries. Requires 2 <= n <= 16.
LowerBoundReport lower_bound_demo(std::size_t n, LowerBoundStrategy strategy = {});

}  // namespace hornlearn
