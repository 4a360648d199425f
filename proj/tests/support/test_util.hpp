#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "hornlearn/formula.hpp"
#include "hornlearn/generator.hpp"
#include "hornlearn/varset.hpp"

namespace testutil {

using hornlearn::HornFormula;
using hornlearn::Implication;
using hornlearn::VarSet;

/// Letters a, b, c, ... name variables 0, 1, 2, ...
inline VarSet vs(std::size_t n, std::string_view letters) {
  VarSet s(n);
  for (char c : letters) s.insert(static_cast<std::size_t>(c - 'a'));
  return s;
}

inline HornFormula formula(std::size_t n,
                           std::vector<std::pair<std::string_view, std::string_view>> rows) {
  std::vector<Implication> imps;
  for (auto [lhs, rhs] : rows) imps.push_back({vs(n, lhs), vs(n, rhs)});
  return HornFormula(n, std::move(imps));
}

inline hornlearn::GenConfig config(std::size_t n, std::size_t m, std::uint64_t seed) {
  hornlearn::GenConfig cfg;
  cfg.arity = n;
  cfg.implications = m;
  cfg.antecedent_min = 0;
  cfg.antecedent_max = n < 3 ? n : 3;
  cfg.consequent_min = 1;
  cfg.consequent_max = n < 3 ? n : 3;
  cfg.seed = seed;
  return cfg;
}

inline HornFormula random_target(std::size_t n, std::size_t m, std::uint64_t seed) {
  return hornlearn::random_formula(config(n, m, seed));
}

}  // namespace testutil
