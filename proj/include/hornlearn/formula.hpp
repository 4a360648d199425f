#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hornlearn/varset.hpp"

namespace hornlearn {

/// antecedent -> consequent, shorthand for the conjunction of the definite
/// clauses antecedent -> b for every b in the consequent. The antecedent may
/// be empty; the consequent may not.
struct Implication {
  VarSet antecedent;
  VarSet consequent;

  bool operator==(const Implication&) const = default;
};

/// A single definite clause antecedent -> head.
struct EntailmentClause {
  VarSet antecedent;
  std::size_t head = 0;

  bool operator==(const EntailmentClause&) const = default;
};

/// A definite Horn formula in implicational form: an ordered list of
/// implications over `arity` variables. The empty list is the constant-true
/// function. Duplicates are allowed and carry no meaning.
///
/// The optional name table is only used for reading and printing.
class HornFormula {
 public:
  HornFormula() = default;
  explicit HornFormula(std::size_t arity, std::vector<Implication> implications = {},
                       std::vector<std::string> names = {});

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return implications_.size(); }
  bool empty() const noexcept { return implications_.empty(); }
  std::span<const Implication> implications() const noexcept { return implications_; }
  const Implication& operator[](std::size_t i) const { return implications_.at(i); }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Printable token for variable `var`; falls back to default_names().
  std::string name(std::size_t var) const;

  /// Same arity and names, new implication list.
  HornFormula with_implications(std::vector<Implication> implications) const;

  /// List equality (order and multiplicity matter); names are ignored.
  friend bool operator==(const HornFormula& a, const HornFormula& b) {
    return a.arity_ == b.arity_ && a.implications_ == b.implications_;
  }

 private:
  std::size_t arity_ = 0;
  std::vector<Implication> implications_;
  std::vector<std::string> names_;
};

/// a, b, ..., z for up to 26 variables, x0, x1, ... beyond that.
std::vector<std::string> default_names(std::size_t arity);

/// Implications sorted canonically with duplicates removed, so that two
/// formulas have the same implication set iff the results compare equal.
std::vector<Implication> canonical_implications(const HornFormula& h);
bool same_implication_set(const HornFormula& a, const HornFormula& b);

}  // namespace hornlearn
