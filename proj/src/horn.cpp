#include "hornlearn/horn.hpp"

#include <unordered_set>

#include "hornlearn/errors.hpp"

namespace hornlearn {

namespace {

void require_arity(const char* where, std::size_t expected, std::size_t got) {
  if (expected != got) throw_arity_mismatch(where, expected, got);
}

}  // namespace

VarSet closure(const VarSet& start, std::span<const Implication> implications) {
  VarSet current = start;
  // Round-based fixpoint. An implication fires at most once.
  std::vector<char> fired(implications.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < implications.size(); ++i) {
      if (fired[i] || !implications[i].antecedent.is_subset_of(current)) continue;
      fired[i] = 1;
      if (!implications[i].consequent.is_subset_of(current)) {
        current |= implications[i].consequent;
        changed = true;
      }
    }
  }
  return current;
}

VarSet closure(const VarSet& start, const HornFormula& h) {
  require_arity("closure", h.arity(), start.arity());
  return closure(start, h.implications());
}

namespace {

// Splits h into the implications of alpha's class and the rest.
void partition_by_class(const VarSet& alpha, const HornFormula& h,
                        std::vector<Implication>* same, std::vector<Implication>* other) {
  const VarSet target_class = closure(alpha, h);
  for (const auto& imp : h.implications()) {
    if (closure(imp.antecedent, h) == target_class) {
      if (same) same->push_back(imp);
    } else if (other) {
      other->push_back(imp);
    }
  }
}

}  // namespace

HornFormula subformula_same_class(const VarSet& alpha, const HornFormula& h) {
  require_arity("subformula_same_class", h.arity(), alpha.arity());
  std::vector<Implication> same;
  partition_by_class(alpha, h, &same, nullptr);
  return h.with_implications(std::move(same));
}

VarSet quasi_closure(const VarSet& alpha, const HornFormula& h) {
  require_arity("quasi_closure", h.arity(), alpha.arity());
  std::vector<Implication> other;
  partition_by_class(alpha, h, nullptr, &other);
  return closure(alpha, other);
}

bool satisfies(const Assignment& x, const Implication& imp) {
  return !imp.antecedent.is_subset_of(x) || imp.consequent.is_subset_of(x);
}

bool satisfies(const Assignment& x, const HornFormula& h) {
  require_arity("satisfies", h.arity(), x.arity());
  for (const auto& imp : h.implications())
    if (!satisfies(x, imp)) return false;
  return true;
}

bool entails(const HornFormula& h, const EntailmentClause& clause) {
  require_arity("entails", h.arity(), clause.antecedent.arity());
  if (clause.head >= h.arity()) throw ArityError("entails: clause head out of range");
  if (clause.antecedent.contains(clause.head)) return true;
  return closure(clause.antecedent, h).contains(clause.head);
}

bool entails(const HornFormula& h, const Implication& imp) {
  require_arity("entails", h.arity(), imp.antecedent.arity());
  if (imp.consequent.is_subset_of(imp.antecedent)) return true;
  return imp.consequent.is_subset_of(closure(imp.antecedent, h));
}

bool entails(const HornFormula& a, const HornFormula& b) {
  require_arity("entails", a.arity(), b.arity());
  for (const auto& imp : b.implications())
    if (!entails(a, imp)) return false;
  return true;
}

bool equivalent(const HornFormula& a, const HornFormula& b) {
  require_arity("equivalent", a.arity(), b.arity());
  return entails(a, b) && entails(b, a);
}

std::optional<Assignment> separating_assignment(const HornFormula& a, const HornFormula& b) {
  require_arity("separating_assignment", a.arity(), b.arity());
  // The closure under `a` of an antecedent of `b` that `a` does not entail
  // satisfies `a` and falsifies `b`; symmetrically for the other side.
  for (const auto& imp : b.implications())
    if (!entails(a, imp)) return closure(imp.antecedent, a);
  for (const auto& imp : a.implications())
    if (!entails(b, imp)) return closure(imp.antecedent, b);
  return std::nullopt;
}

std::vector<Assignment> models(const HornFormula& h, std::size_t limit) {
  const std::size_t n = h.arity();
  if (n > limit || n >= 63)
    throw PreconditionError("models: arity " + std::to_string(n) +
                            " exceeds the brute-force limit " + std::to_string(limit));
  std::vector<Assignment> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    Assignment x(n);
    // Variable 0 is the most significant position so that counting up
    // walks the bitstrings in lexicographic order.
    for (std::size_t i = 0; i < n; ++i)
      if ((k >> (n - 1 - i)) & 1U) x.insert(i);
    if (satisfies(x, h)) out.push_back(std::move(x));
  }
  return out;
}

bool is_intersection_closed(std::span<const Assignment> assignments) {
  if (assignments.empty()) return true;
  const std::size_t n = assignments.front().arity();
  for (const auto& x : assignments) require_arity("is_intersection_closed", n, x.arity());
  std::unordered_set<Assignment> members(assignments.begin(), assignments.end());
  for (std::size_t i = 0; i < assignments.size(); ++i)
    for (std::size_t j = i + 1; j < assignments.size(); ++j)
      if (!members.contains(assignments[i] & assignments[j])) return false;
  return true;
}

}  // namespace hornlearn
