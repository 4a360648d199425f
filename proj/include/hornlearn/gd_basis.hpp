#pragma once

#include "hornlearn/formula.hpp"

namespace hornlearn {

// Saturation and the Guigues-Duquenne basis.
//
// An implication a -> b of H is right-saturated when b = a* and
// left-saturated when a equals its quasi-closure, both taken w.r.t. H.
// A saturated formula is irredundant, and every definite Horn function has
// exactly one saturated basis, which has the minimum number of implications.

/// Replaces every consequent by the closure of its antecedent.
HornFormula right_saturate(const HornFormula& h);

/// Replaces every antecedent by its quasi-closure w.r.t. the current formula,
/// rewriting in list order and updating the formula after each rewrite, until
/// nothing changes. Consequents are re-closed. Requires a right-saturated
/// input (PreconditionError otherwise).
HornFormula left_saturate(const HornFormula& h);

/// Scans in list order and drops every implication that the remaining ones
/// entail.
HornFormula remove_redundant(const HornFormula& h);

/// remove_redundant(left_saturate(right_saturate(h))).
HornFormula gd_basis(const HornFormula& h);

bool is_left_saturated(const HornFormula& h);
bool is_right_saturated(const HornFormula& h);
bool is_saturated(const HornFormula& h);

}  // namespace hornlearn
