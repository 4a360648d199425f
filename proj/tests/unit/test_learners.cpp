#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "hornlearn/errors.hpp"
#include "hornlearn/gd_basis.hpp"
#include "hornlearn/generator.hpp"
#include "hornlearn/horn.hpp"
#include "hornlearn/learners.hpp"
#include "test_util.hpp"

using namespace hornlearn;
using testutil::formula;
using testutil::vs;

namespace {

const CounterexampleStrategy kStrategies[] = {
    CounterexampleStrategy::first(), CounterexampleStrategy::random(5),
    CounterexampleStrategy::minimal()};

/// Answers every equivalence query with a fixed assignment.
class StubbornEquivalence final : public EquivalenceOracle {
 public:
  explicit StubbornEquivalence(Assignment x) : x_(std::move(x)) {}
  std::size_t arity() const override { return x_.arity(); }
  SeqAnswer seq(const HornFormula&) override { return SeqAnswer::no(x_); }

 private:
  Assignment x_;
};

}  // namespace

TEST_CASE("hypothesis from a negative list") {
  CHECK(hyp(2, {}, {}).empty());
  std::vector<Assignment> n1{vs(2, "a")}, c1{vs(2, "ab")};
  CHECK(hyp(2, n1, c1) == formula(2, {{"a", "ab"}}));
  std::vector<Assignment> n2{vs(5, "e")}, c2{vs(5, "de")};
  CHECK(hyp(5, n2, c2) == formula(5, {{"e", "de"}}));
  std::vector<Assignment> none;
  CHECK_THROWS_AS(hyp(2, n1, none), PreconditionError);
}

TEST_CASE("clh on small targets") {
  Teacher t(formula(2, {{"a", "b"}}));
  auto r = clh(t, t);
  CHECK(r.output == formula(2, {{"a", "ab"}}));
  CHECK(same_implication_set(r.output, gd_basis(t.target())));
  CHECK(t.stats().seq == 2);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].kind == TraceEvent::Kind::append);
  CHECK(r.trace[0].counterexample.to_bitstring() == "10");
  CHECK(r.stats == t.stats());

  Teacher e(HornFormula(3));
  auto re = clh(e, e);
  CHECK(re.output.empty());
  CHECK(e.stats() == QueryStats{0, 1, 0, 0, 0});
}

TEST_CASE("clh on the five-variable example") {
  for (auto strategy : kStrategies) {
    Teacher t(gd_example(), strategy);
    auto r = clh(t, t);
    CHECK(same_implication_set(r.output, gd_basis(gd_example())));
    CHECK(t.stats().seq <= 37);
  }
}

TEST_CASE("clh invariants on random targets") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const auto target = testutil::random_target(n, 1 + rng() % 8, rng());
    const auto gd = gd_basis(target);
    const std::size_t m = gd.size();
    for (auto strategy : kStrategies) {
      Teacher t(target, strategy);
      ClhOptions opts;
      std::size_t max_len = 0;
      opts.on_hypothesis = [&](const HornFormula& h) {
        CHECK(is_left_saturated(h));
        CHECK(entails(target, h));
        max_len = std::max(max_len, h.size());
      };
      opts.on_counterexample = [&](const HornFormula& h, const Assignment& x) {
        CHECK(bf::sat(bf::mask_of(x), bf::raw(h)));
        CHECK_FALSE(bf::sat(bf::mask_of(x), bf::raw(target)));
      };
      auto r = clh(t, t, opts);
      CHECK(same_implication_set(r.output, gd));
      CHECK(bf::equivalent(r.output, target));
      CHECK(max_len <= m);
      CHECK(t.stats().seq <= n * m + m + 1);
      CHECK(t.stats().cq <= (m + 1) * (n * m + m + 1));
      CHECK(t.stats().smq + t.stats().emq + t.stats().eeq == 0);

      // Entries of the final list: for i < j some model z has
      // y_i & y_j <= z <= y_j.
      std::vector<bf::Mask> ys;
      for (const auto& imp : r.output.implications()) ys.push_back(bf::mask_of(imp.antecedent));
      const auto ms = bf::models(bf::raw(target), n);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
          bool found = false;
          for (bf::Mask z : ms)
            if (((ys[i] & ys[j]) & ~z) == 0 && (z & ~ys[j]) == 0) found = true;
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("clh variant that keeps scanning still learns an equivalent formula") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto target = testutil::random_target(n, 1 + rng() % 6, rng());
    Teacher t(target);
    ClhOptions opts;
    opts.continue_after_refine = true;
    opts.max_equivalence_queries = 10'000;
    auto r = clh(t, t, opts);
    CHECK(bf::equivalent(r.output, target));
  }
}

TEST_CASE("clh reports a positive counterexample as a teacher fault") {
  Teacher closures(formula(2, {{"a", "b"}}));
  StubbornEquivalence liar(VarSet::from_bitstring("10"));
  // The first hypothesis is empty, so 10 satisfies it and clh appends it.
  // Then hyp = {a -> ab} and 10 falsifies it.
  CHECK_THROWS_AS(clh(closures, liar), TeacherError);
}

TEST_CASE("clh gives up after the configured number of equivalence queries") {
  Teacher t(formula(2, {{"a", "b"}}));
  ClhOptions opts;
  opts.max_equivalence_queries = 1;
  CHECK_THROWS_AS(clh(t, t, opts), TeacherError);
  CHECK(t.stats().seq == 1);
}

TEST_CASE("afp on small targets") {
  Teacher e(HornFormula(3));
  auto re = afp(e, e);
  CHECK(re.output.empty());
  CHECK(e.stats().seq == 1);

  Teacher t(formula(2, {{"a", "b"}}));
  auto r = afp(t, t);
  CHECK(bf::equivalent(r.output, t.target()));
  CHECK(t.stats().cq == 0);

  Teacher g(gd_example());
  auto rg = afp(g, g);
  CHECK(bf::equivalent(rg.output, gd_example()));
  const std::size_t m = gd_basis(gd_example()).size(), n = 5;
  CHECK(g.stats().smq <= 4 * m * m * n);
  CHECK(g.stats().seq <= 4 * m * n);
}

TEST_CASE("afp learns random targets under every strategy") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const auto target = testutil::random_target(n, 1 + rng() % 8, rng());
    for (auto strategy : kStrategies) {
      Teacher t(target, strategy);
      auto r = afp(t, t);
      CHECK(bf::equivalent(r.output, target));
      CHECK(r.stats == t.stats());
    }
  }
}
