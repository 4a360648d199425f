#include "hornlearn/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "hornlearn/errors.hpp"
#include "hornlearn/horn.hpp"
#include "hornlearn/random.hpp"

namespace hornlearn {

QueryStats& QueryStats::operator+=(const QueryStats& o) {
  smq += o.smq;
  seq += o.seq;
  cq += o.cq;
  emq += o.emq;
  eeq += o.eeq;
  return *this;
}

QueryStats operator-(const QueryStats& a, const QueryStats& b) {
  return {a.smq - b.smq, a.seq - b.seq, a.cq - b.cq, a.emq - b.emq, a.eeq - b.eeq};
}

std::string QueryStats::to_string() const {
  return "seq=" + std::to_string(seq) + " cq=" + std::to_string(cq) +
         " smq=" + std::to_string(smq) + " emq=" + std::to_string(emq) +
         " eeq=" + std::to_string(eeq);
}

CounterexampleStrategy CounterexampleStrategy::parse(std::string_view name, std::uint64_t seed) {
  if (name == "first") return first();
  if (name == "random") return random(seed);
  if (name == "minimal") return minimal();
  throw std::invalid_argument("unknown counterexample strategy \"" + std::string(name) +
                              "\" (expected first, random or minimal)");
}

std::string CounterexampleStrategy::name() const {
  switch (kind) {
    case Kind::first: return "first";
    case Kind::random: return "random";
    case Kind::minimal: return "minimal";
  }
  return "?";
}

Teacher::Teacher(HornFormula target, CounterexampleStrategy strategy)
    : target_(std::move(target)), strategy_(strategy), rng_(strategy.seed) {}

void Teacher::check_arity(const char* where, std::size_t got) const {
  if (got != target_.arity()) throw_arity_mismatch(where, target_.arity(), got);
}

bool Teacher::smq(const Assignment& x) {
  check_arity("Teacher::smq", x.arity());
  ++stats_.smq;
  return satisfies(x, target_);
}

Assignment Teacher::cq(const Assignment& y) {
  check_arity("Teacher::cq", y.arity());
  ++stats_.cq;
  return closure(y, target_);
}

bool Teacher::emq(const EntailmentClause& clause) {
  check_arity("Teacher::emq", clause.antecedent.arity());
  ++stats_.emq;
  return entails(target_, clause);
}

SeqAnswer Teacher::seq(const HornFormula& hypothesis) {
  check_arity("Teacher::seq", hypothesis.arity());
  ++stats_.seq;
  const bool stop_at_first = strategy_.kind == CounterexampleStrategy::Kind::first;

  std::vector<Assignment> candidates;
  for (const auto& imp : target_.implications()) {
    if (entails(hypothesis, imp)) continue;
    candidates.push_back(closure(imp.antecedent, hypothesis));
    if (stop_at_first) break;
  }
  if (!candidates.empty()) return SeqAnswer::no(pick_assignment(candidates, hypothesis, target_));

  for (const auto& imp : hypothesis.implications()) {
    if (entails(target_, imp)) continue;
    candidates.push_back(closure(imp.antecedent, target_));
    if (stop_at_first) break;
  }
  if (!candidates.empty()) return SeqAnswer::no(pick_assignment(candidates, target_, hypothesis));
  return SeqAnswer::yes();
}

// Every candidate is a closure under `close_under` that falsifies
// `must_fail`. Any separator on that side lies above one of them, so the
// least-popcount candidate is a least-popcount separator overall.
Assignment Teacher::pick_assignment(const std::vector<Assignment>& candidates,
                                    const HornFormula& close_under,
                                    const HornFormula& must_fail) {
  switch (strategy_.kind) {
    case CounterexampleStrategy::Kind::first:
      return candidates.front();
    case CounterexampleStrategy::Kind::minimal:
      return *std::min_element(candidates.begin(), candidates.end(),
                               [](const Assignment& a, const Assignment& b) {
                                 if (a.count() != b.count()) return a.count() < b.count();
                                 return lex_less(a, b);
                               });
    case CounterexampleStrategy::Kind::random: {
      const Assignment& base = candidates[uniform_below(rng_, candidates.size())];
      if (uniform_below(rng_, 2) == 0) return base;
      for (int attempt = 0; attempt < 3; ++attempt) {
        Assignment lifted = base;
        for (std::size_t v = 0; v < lifted.arity(); ++v)
          if (uniform_below(rng_, 4) == 0) lifted.insert(v);
        lifted = closure(lifted, close_under);
        if (!satisfies(lifted, must_fail)) return lifted;
      }
      return base;
    }
  }
  return candidates.front();
}

EeqAnswer Teacher::eeq(const HornFormula& hypothesis) {
  check_arity("Teacher::eeq", hypothesis.arity());
  ++stats_.eeq;
  const bool stop_at_first = strategy_.kind == CounterexampleStrategy::Kind::first;

  std::vector<EntailmentClause> candidates;
  auto collect = [&](const HornFormula& from, const HornFormula& other) {
    for (const auto& imp : from.implications()) {
      VarSet gap = imp.consequent - closure(imp.antecedent, other);
      for (std::size_t b = gap.first(); b < gap.arity(); b = gap.next(b)) {
        candidates.push_back({imp.antecedent, b});
        if (stop_at_first) return;
      }
    }
  };
  collect(target_, hypothesis);
  if (candidates.empty()) collect(hypothesis, target_);
  if (candidates.empty()) return EeqAnswer::yes();
  return EeqAnswer::no(pick_clause(candidates));
}

EntailmentClause Teacher::pick_clause(const std::vector<EntailmentClause>& candidates) {
  switch (strategy_.kind) {
    case CounterexampleStrategy::Kind::first:
      return candidates.front();
    case CounterexampleStrategy::Kind::minimal:
      return *std::min_element(
          candidates.begin(), candidates.end(),
          [](const EntailmentClause& a, const EntailmentClause& b) {
            if (a.antecedent.count() != b.antecedent.count())
              return a.antecedent.count() < b.antecedent.count();
            if (a.antecedent != b.antecedent) return lex_less(a.antecedent, b.antecedent);
            return a.head < b.head;
          });
    case CounterexampleStrategy::Kind::random:
      return candidates[uniform_below(rng_, candidates.size())];
  }
  return candidates.front();
}

HornFormula family_member(const Assignment& x) {
  const std::size_t n = x.arity();
  if (x.all()) throw PreconditionError("family_member: x must differ from the top assignment");
  const VarSet top = VarSet::full(n);
  std::vector<Implication> imps;
  for (std::size_t v = 0; v < n; ++v) {
    if (x.contains(v)) {
      imps.push_back({VarSet(n), VarSet::of(n, {v})});
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (!x.contains(w)) imps.push_back({VarSet::of(n, {w}), top});
  }
  return HornFormula(n, std::move(imps));
}

AdversarialSmqTeacher::AdversarialSmqTeacher(std::size_t arity) : arity_(arity) {
  if (arity == 0 || arity > 24)
    throw PreconditionError("AdversarialSmqTeacher: arity must be in [1, 24]");
  ruled_out_.assign(std::size_t{1} << arity, false);
  remaining_ = initial_candidates();
}

std::uint64_t AdversarialSmqTeacher::key(const Assignment& x) const {
  if (x.arity() != arity_) throw_arity_mismatch("AdversarialSmqTeacher", arity_, x.arity());
  std::uint64_t k = 0;
  for_each_member(x, [&](std::size_t v) { k |= std::uint64_t{1} << v; });
  return k;
}

bool AdversarialSmqTeacher::smq(const Assignment& x) {
  const std::uint64_t k = key(x);
  ++queries_;
  if (x.all()) return true;
  // Answering NO is consistent with every f_z except z = x.
  if (!ruled_out_[k]) {
    ruled_out_[k] = true;
    --remaining_;
  }
  return false;
}

bool AdversarialSmqTeacher::is_consistent(const Assignment& x) const {
  return !x.all() && !ruled_out_[key(x)];
}

std::optional<Assignment> AdversarialSmqTeacher::determined_bottom_closure() const {
  if (remaining_ != 1) return std::nullopt;
  const std::uint64_t top = (std::uint64_t{1} << arity_) - 1;
  for (std::uint64_t k = 0; k < top; ++k) {
    if (ruled_out_[k]) continue;
    Assignment x(arity_);
    for (std::size_t v = 0; v < arity_; ++v)
      if ((k >> v) & 1U) x.insert(v);
    return x;
  }
  return std::nullopt;
}

}  // namespace hornlearn
