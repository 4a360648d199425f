#include "hornlearn/gd_basis.hpp"

#include <vector>

#include "hornlearn/errors.hpp"
#include "hornlearn/horn.hpp"

namespace hornlearn {

HornFormula right_saturate(const HornFormula& h) {
  std::vector<Implication> out;
  out.reserve(h.size());
  for (const auto& imp : h.implications())
    out.push_back({imp.antecedent, closure(imp.antecedent, h)});
  return h.with_implications(std::move(out));
}

HornFormula left_saturate(const HornFormula& h) {
  if (!is_right_saturated(h))
    throw PreconditionError("left_saturate: input formula is not right-saturated");
  HornFormula current = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Implication& imp = current[i];
      VarSet lhs = quasi_closure(imp.antecedent, current);
      if (lhs == imp.antecedent) continue;
      std::vector<Implication> imps(current.implications().begin(),
                                    current.implications().end());
      // lhs lies between the antecedent and its closure, so the function and
      // hence every closure is unchanged; re-closing keeps the consequent exact.
      VarSet rhs = closure(lhs, current);
      imps[i] = {std::move(lhs), std::move(rhs)};
      current = current.with_implications(std::move(imps));
      changed = true;
    }
  }
  return current;
}

HornFormula remove_redundant(const HornFormula& h) {
  std::vector<Implication> kept(h.implications().begin(), h.implications().end());
  std::size_t i = 0;
  while (i < kept.size()) {
    std::vector<Implication> rest;
    rest.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.push_back(kept[j]);
    if (kept[i].consequent.is_subset_of(closure(kept[i].antecedent, rest))) {
      kept = std::move(rest);
    } else {
      ++i;
    }
  }
  return h.with_implications(std::move(kept));
}

HornFormula gd_basis(const HornFormula& h) {
  return remove_redundant(left_saturate(right_saturate(h)));
}

bool is_left_saturated(const HornFormula& h) {
  for (const auto& imp : h.implications())
    if (quasi_closure(imp.antecedent, h) != imp.antecedent) return false;
  return true;
}

bool is_right_saturated(const HornFormula& h) {
  for (const auto& imp : h.implications())
    if (closure(imp.antecedent, h) != imp.consequent) return false;
  return true;
}

bool is_saturated(const HornFormula& h) { return is_right_saturated(h) && is_left_saturated(h); }

}  // namespace hornlearn
