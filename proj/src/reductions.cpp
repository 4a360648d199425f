#include "hornlearn/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "hornlearn/errors.hpp"
#include "hornlearn/horn.hpp"
#include "hornlearn/random.hpp"

namespace hornlearn {

namespace {

QueryStats& sink(QueryStats* spent, QueryStats& local) { return spent ? *spent : local; }

void require_arity(const char* where, std::size_t expected, std::size_t got) {
  if (expected != got) throw_arity_mismatch(where, expected, got);
}

}  // namespace

Assignment cq_from_emq(EntailmentOracle& emq, const Assignment& y, QueryStats* spent) {
  require_arity("cq_from_emq", emq.arity(), y.arity());
  QueryStats local;
  QueryStats& cost = sink(spent, local);
  Assignment result = y;
  for (std::size_t b = 0; b < y.arity(); ++b) {
    if (y.contains(b)) continue;
    ++cost.emq;
    if (emq.emq({y, b})) result.insert(b);
  }
  return result;
}

bool smq_from_emq(EntailmentOracle& emq, const Assignment& x, QueryStats* spent) {
  require_arity("smq_from_emq", emq.arity(), x.arity());
  QueryStats local;
  QueryStats& cost = sink(spent, local);
  for (std::size_t b = 0; b < x.arity(); ++b) {
    if (x.contains(b)) continue;
    ++cost.emq;
    if (emq.emq({x, b})) return false;
  }
  return true;
}

SeqAnswer seq_from_eeq_emq(EntailmentEquivalenceOracle& eeq, EntailmentOracle& emq,
                           const HornFormula& hypothesis, QueryStats* spent) {
  require_arity("seq_from_eeq_emq", eeq.arity(), hypothesis.arity());
  QueryStats local;
  QueryStats& cost = sink(spent, local);
  ++cost.eeq;
  EeqAnswer answer = eeq.eeq(hypothesis);
  if (answer.is_yes()) return SeqAnswer::yes();
  const EntailmentClause& clause = *answer.counterexample;
  if (entails(hypothesis, clause)) {
    // Entailed by the hypothesis only: the target closure of the antecedent
    // satisfies the target and misses something the hypothesis derives.
    return SeqAnswer::no(cq_from_emq(emq, clause.antecedent, &cost));
  }
  // Entailed by the target only: closing under the hypothesis keeps the head
  // out, so the result satisfies the hypothesis and falsifies the target.
  return SeqAnswer::no(closure(clause.antecedent, hypothesis));
}

bool emq_from_cq(ClosureOracle& cq, const EntailmentClause& clause, QueryStats* spent) {
  require_arity("emq_from_cq", cq.arity(), clause.antecedent.arity());
  QueryStats local;
  ++sink(spent, local).cq;
  return cq.cq(clause.antecedent).contains(clause.head);
}

bool smq_from_cq(ClosureOracle& cq, const Assignment& x, QueryStats* spent) {
  require_arity("smq_from_cq", cq.arity(), x.arity());
  QueryStats local;
  ++sink(spent, local).cq;
  return cq.cq(x) == x;
}

EeqAnswer eeq_from_seq_cq(EquivalenceOracle& seq, ClosureOracle& cq,
                          const HornFormula& hypothesis, QueryStats* spent) {
  require_arity("eeq_from_seq_cq", seq.arity(), hypothesis.arity());
  QueryStats local;
  QueryStats& cost = sink(spent, local);
  ++cost.seq;
  SeqAnswer answer = seq.seq(hypothesis);
  if (answer.is_yes()) return EeqAnswer::yes();
  const Assignment& x = *answer.counterexample;

  VarSet gap(x.arity());
  if (satisfies(x, hypothesis)) {
    ++cost.cq;
    gap = cq.cq(x) - x;
  } else {
    gap = closure(x, hypothesis) - x;
  }
  if (gap.none())
    throw TeacherError("eeq_from_seq_cq: " + x.to_bitstring() +
                       " does not separate target and hypothesis");
  return EeqAnswer::no({x, gap.first()});
}

void AdapterStats::record(const QueryStats& call) {
  ++calls;
  total += call;
  last = call;
  max_per_call.smq = std::max(max_per_call.smq, call.smq);
  max_per_call.seq = std::max(max_per_call.seq, call.seq);
  max_per_call.cq = std::max(max_per_call.cq, call.cq);
  max_per_call.emq = std::max(max_per_call.emq, call.emq);
  max_per_call.eeq = std::max(max_per_call.eeq, call.eeq);
}

Assignment CqFromEmq::cq(const Assignment& y) {
  QueryStats cost;
  Assignment r = cq_from_emq(emq_, y, &cost);
  stats_.record(cost);
  return r;
}

bool SmqFromEmq::smq(const Assignment& x) {
  QueryStats cost;
  bool r = smq_from_emq(emq_, x, &cost);
  stats_.record(cost);
  return r;
}

SeqFromEeqEmq::SeqFromEeqEmq(EntailmentEquivalenceOracle& eeq, EntailmentOracle& emq)
    : eeq_(eeq), emq_(emq) {
  require_arity("SeqFromEeqEmq", eeq.arity(), emq.arity());
}

SeqAnswer SeqFromEeqEmq::seq(const HornFormula& hypothesis) {
  QueryStats cost;
  SeqAnswer r = seq_from_eeq_emq(eeq_, emq_, hypothesis, &cost);
  stats_.record(cost);
  return r;
}

bool EmqFromCq::emq(const EntailmentClause& clause) {
  QueryStats cost;
  bool r = emq_from_cq(cq_, clause, &cost);
  stats_.record(cost);
  return r;
}

bool SmqFromCq::smq(const Assignment& x) {
  QueryStats cost;
  bool r = smq_from_cq(cq_, x, &cost);
  stats_.record(cost);
  return r;
}

EeqFromSeqCq::EeqFromSeqCq(EquivalenceOracle& seq, ClosureOracle& cq) : seq_(seq), cq_(cq) {
  require_arity("EeqFromSeqCq", seq.arity(), cq.arity());
}

EeqAnswer EeqFromSeqCq::eeq(const HornFormula& hypothesis) {
  QueryStats cost;
  EeqAnswer r = eeq_from_seq_cq(seq_, cq_, hypothesis, &cost);
  stats_.record(cost);
  return r;
}

CqFromSmqSeq::CqFromSmqSeq(MembershipOracle& smq, EquivalenceOracle& seq) : smq_(smq), seq_(seq) {
  require_arity("CqFromSmqSeq", smq.arity(), seq.arity());
}

Assignment CqFromSmqSeq::cq(const Assignment& y) {
  require_arity("CqFromSmqSeq::cq", arity(), y.arity());
  QueryStats cost;
  if (!learned_) {
    LearnerReport run = afp(smq_, seq_);
    cost = run.stats;
    learned_ = std::move(run.output);
  }
  stats_.record(cost);
  return closure(y, *learned_);
}

LowerBoundReport lower_bound_demo(std::size_t n, LowerBoundStrategy strategy) {
  if (n < 2 || n > 16) throw PreconditionError("lower_bound_demo: n must be in [2, 16]");
  AdversarialSmqTeacher teacher(n);

  const std::uint64_t total = std::uint64_t{1} << n;
  // Lexicographic bitstring order: variable 0 is the most significant bit.
  auto decode = [n](std::uint64_t k) {
    Assignment x(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((k >> (n - 1 - i)) & 1U) x.insert(i);
    return x;
  };

  std::vector<std::uint64_t> order(total);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  switch (strategy.kind) {
    case LowerBoundStrategy::Kind::exhaustive:
      break;
    case LowerBoundStrategy::Kind::top_first:
      std::rotate(order.begin(), order.end() - 1, order.end());
      break;
    case LowerBoundStrategy::Kind::random: {
      std::mt19937_64 rng(strategy.seed);
      for (std::uint64_t i = total - 1; i > 0; --i)
        std::swap(order[i], order[uniform_below(rng, i + 1)]);
      break;
    }
  }

  LowerBoundReport report;
  report.arity = n;
  report.initial_candidates = teacher.initial_candidates();
  report.remaining = teacher.remaining_candidates();
  for (std::uint64_t k : order) {
    Assignment x = decode(k);
    const bool answer = teacher.smq(x);
    report.queries = teacher.queries();
    report.remaining = teacher.remaining_candidates();
    if (report.remaining + report.queries < report.initial_candidates)
      report.invariant_held = false;
    report.steps.push_back({std::move(x), answer, report.remaining});
    if (report.remaining == 1) {
      report.ruled_out_when_determined = report.initial_candidates - report.remaining;
      report.determined_closure = teacher.determined_bottom_closure();
      break;
    }
  }
  return report;
}

}  // namespace hornlearn
