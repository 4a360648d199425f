#include "hornlearn/formula.hpp"

#include <algorithm>
#include <set>

#include "hornlearn/errors.hpp"

namespace hornlearn {

HornFormula::HornFormula(std::size_t arity, std::vector<Implication> implications,
                         std::vector<std::string> names)
    : arity_(arity), implications_(std::move(implications)), names_(std::move(names)) {
  for (std::size_t i = 0; i < implications_.size(); ++i) {
    const auto& imp = implications_[i];
    if (imp.antecedent.arity() != arity_)
      throw_arity_mismatch("HornFormula antecedent", arity_, imp.antecedent.arity());
    if (imp.consequent.arity() != arity_)
      throw_arity_mismatch("HornFormula consequent", arity_, imp.consequent.arity());
    if (imp.consequent.none())
      throw FormulaError("implication " + std::to_string(i) + " has an empty consequent");
  }
  if (!names_.empty()) {
    if (names_.size() != arity_)
      throw FormulaError("name table has " + std::to_string(names_.size()) +
                         " entries for arity " + std::to_string(arity_));
    std::set<std::string> seen;
    for (const auto& n : names_)
      if (n.empty() || !seen.insert(n).second)
        throw FormulaError("variable names must be nonempty and distinct");
  }
}

std::string HornFormula::name(std::size_t var) const {
  if (var >= arity_) throw ArityError("variable index out of range");
  if (has_names()) return names_[var];
  return default_names(arity_)[var];
}

HornFormula HornFormula::with_implications(std::vector<Implication> implications) const {
  return HornFormula(arity_, std::move(implications), names_);
}

std::vector<std::string> default_names(std::size_t arity) {
  std::vector<std::string> names;
  names.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i)
    names.push_back(arity <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "x" + std::to_string(i));
  return names;
}

std::vector<Implication> canonical_implications(const HornFormula& h) {
  std::vector<Implication> imps(h.implications().begin(), h.implications().end());
  auto less = [](const Implication& x, const Implication& y) {
    if (x.antecedent != y.antecedent) return lex_less(x.antecedent, y.antecedent);
    return lex_less(x.consequent, y.consequent);
  };
  std::sort(imps.begin(), imps.end(), less);
  imps.erase(std::unique(imps.begin(), imps.end()), imps.end());
  return imps;
}

bool same_implication_set(const HornFormula& a, const HornFormula& b) {
  return a.arity() == b.arity() && canonical_implications(a) == canonical_implications(b);
}

}  // namespace hornlearn
