#include "hornlearn/generator.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "hornlearn/errors.hpp"
#include "hornlearn/oracles.hpp"
#include "hornlearn/random.hpp"

namespace hornlearn {

void GenConfig::validate() const {
  if (antecedent_min > antecedent_max || antecedent_max > arity)
    throw FormulaError("GenConfig: need 0 <= antecedent_min <= antecedent_max <= arity");
  if (consequent_min == 0 || consequent_min > consequent_max || consequent_max > arity)
    throw FormulaError("GenConfig: need 1 <= consequent_min <= consequent_max <= arity");
}

namespace {

// Uniform subset of the given size (partial Fisher-Yates).
VarSet random_subset(std::mt19937_64& rng, std::size_t arity, std::size_t size) {
  std::vector<std::size_t> pool(arity);
  for (std::size_t i = 0; i < arity; ++i) pool[i] = i;
  VarSet s(arity);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = i + uniform_below(rng, arity - i);
    std::swap(pool[i], pool[j]);
    s.insert(pool[i]);
  }
  return s;
}

std::size_t in_range(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

HornFormula from_text(std::size_t arity, std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<Implication> imps;
  auto to_set = [arity](const char* letters) {
    VarSet s(arity);
    for (const char* p = letters; *p; ++p) s.insert(static_cast<std::size_t>(*p - 'a'));
    return s;
  };
  for (const auto& [lhs, rhs] : rows) imps.push_back({to_set(lhs), to_set(rhs)});
  return HornFormula(arity, std::move(imps), default_names(arity));
}

}  // namespace

HornFormula random_formula(const GenConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::vector<Implication> imps;
  imps.reserve(config.implications);
  for (std::size_t i = 0; i < config.implications; ++i) {
    const std::size_t lhs = in_range(rng, config.antecedent_min, config.antecedent_max);
    const std::size_t rhs = in_range(rng, config.consequent_min, config.consequent_max);
    VarSet antecedent = random_subset(rng, config.arity, lhs);
    VarSet consequent = random_subset(rng, config.arity, rhs);
    imps.push_back({std::move(antecedent), std::move(consequent)});
  }
  return HornFormula(config.arity, std::move(imps));
}

HornFormula gd_example() {
  return from_text(5, {{"e", "d"}, {"bc", "d"}, {"bd", "c"}, {"cd", "b"}, {"ad", "bce"}, {"ce", "ab"}});
}

HornFormula bullet_example() { return from_text(4, {{"a", "b"}, {"a", "c"}, {"c", "d"}}); }

std::map<std::string, HornFormula> example_corpus() {
  return {{"gd-example", gd_example()}, {"bullet-example", bullet_example()}};
}

HornFormula corpus_formula(std::string_view name) {
  constexpr std::string_view kFamily = "family-fx:";
  if (name.starts_with(kFamily)) {
    Assignment x = Assignment::from_bitstring(name.substr(kFamily.size()));
    return family_member(x);
  }
  auto corpus = example_corpus();
  auto it = corpus.find(std::string(name));
  if (it == corpus.end()) throw std::out_of_range("unknown corpus formula \"" + std::string(name) + "\"");
  return it->second;
}

}  // namespace hornlearn
