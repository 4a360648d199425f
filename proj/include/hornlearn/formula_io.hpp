#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hornlearn/formula.hpp"

namespace hornlearn {

// Text format, one item per line:
//
//   # comment (also allowed after content)
//   vars: a b c d
//   a -> b
//   a c -> d
//   -> a            (empty antecedent)
//
// Tokens are nonempty runs of letters, digits and '_'. The header is the
// first non-blank line; every token used later must appear in it.

/// Throws ParseError carrying the offending line number.
HornFormula parse_formula(std::string_view text);

/// Header, then one implication per line in list order, single spaces.
/// Uses the formula's name table, or default_names() without one.
std::string serialize_formula(const HornFormula& h);

HornFormula read_formula_file(const std::filesystem::path& path);

/// Members of `s` as space-separated names, in index order.
std::string format_varset(const VarSet& s, const std::vector<std::string>& names);

/// Tokens separated by whitespace or commas; "", "{}" and "-" mean the
/// empty set. Throws ParseError on unknown tokens.
VarSet parse_varset(std::string_view text, const std::vector<std::string>& names);

}  // namespace hornlearn
