#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hornlearn/formula.hpp"
#include "hornlearn/varset.hpp"

namespace hornlearn {

/// Largest arity the exhaustive helpers (models, brute-force strategies)
/// accept unless told otherwise.
inline constexpr std::size_t kDefaultBruteForceLimit = 20;

/// Forward chaining: the least superset of `start` closed under every
/// implication in `implications`.
VarSet closure(const VarSet& start, std::span<const Implication> implications);
/// The closure of `start` with respect to `h` (written start* in the
/// literature). Extensive, monotone and idempotent.
VarSet closure(const VarSet& start, const HornFormula& h);

/// The implications of `h` whose antecedents have the same closure as
/// `alpha`, closures taken with respect to `h`, in list order.
HornFormula subformula_same_class(const VarSet& alpha, const HornFormula& h);

/// Closure of `alpha` under `h` minus subformula_same_class(alpha, h).
VarSet quasi_closure(const VarSet& alpha, const HornFormula& h);

bool satisfies(const Assignment& x, const Implication& imp);
bool satisfies(const Assignment& x, const HornFormula& h);

bool entails(const HornFormula& h, const EntailmentClause& clause);
bool entails(const HornFormula& h, const Implication& imp);
/// Every implication of `b` follows from `a`.
bool entails(const HornFormula& a, const HornFormula& b);

bool equivalent(const HornFormula& a, const HornFormula& b);

/// An assignment satisfying exactly one of the two formulas, or nullopt when
/// they are equivalent. Prefers one that satisfies `a`.
std::optional<Assignment> separating_assignment(const HornFormula& a, const HornFormula& b);

/// All satisfying assignments in lexicographic bitstring order.
/// Throws PreconditionError when h.arity() > limit.
std::vector<Assignment> models(const HornFormula& h,
                               std::size_t limit = kDefaultBruteForceLimit);

/// x & y is in `assignments` for every x, y in it. Throws ArityError on
/// mixed lengths.
bool is_intersection_closed(std::span<const Assignment> assignments);

}  // namespace hornlearn
