#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "hornlearn/formula.hpp"

namespace hornlearn {

/// Shape of a random definite Horn formula. Sizes are inclusive ranges;
/// antecedent and consequent of one implication are drawn independently and
/// may overlap.
struct GenConfig {
  std::size_t arity = 5;
  std::size_t implications = 6;
  std::size_t antecedent_min = 0;
  std::size_t antecedent_max = 2;
  std::size_t consequent_min = 1;
  std::size_t consequent_max = 2;
  std::uint64_t seed = 0;

  /// Throws FormulaError when the ranges are infeasible.
  void validate() const;
};

/// Deterministic per config. No deduplication or redundancy filtering.
HornFormula random_formula(const GenConfig& config);

/// The worked examples:
///   "gd-example"     e->d, bc->d, bd->c, cd->b, ad->bce, ce->ab over a..e
///   "bullet-example" a->b, a->c, c->d over a..d
HornFormula gd_example();
HornFormula bullet_example();
std::map<std::string, HornFormula> example_corpus();

/// Looks up a corpus formula by name. Also accepts "family-fx:<bits>", the
/// member f_x of the hard family for the given bitstring. Throws
/// std::out_of_range for unknown names.
HornFormula corpus_formula(std::string_view name);

}  // namespace hornlearn
