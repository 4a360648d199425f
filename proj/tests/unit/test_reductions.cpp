#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "hornlearn/bench.hpp"
#include "hornlearn/gd_basis.hpp"
#include "hornlearn/generator.hpp"
#include "hornlearn/horn.hpp"
#include "hornlearn/reductions.hpp"
#include "test_util.hpp"

using namespace hornlearn;
using testutil::formula;
using testutil::vs;

TEST_CASE("closures from entailment queries") {
  Teacher t(gd_example());
  QueryStats spent;
  CHECK(cq_from_emq(t, vs(5, "ad"), &spent) == vs(5, "abcde"));
  CHECK(spent.emq == 3);
  spent = {};
  CHECK(cq_from_emq(t, VarSet::full(5), &spent) == VarSet::full(5));
  CHECK(spent.emq == 0);
  Teacher b(bullet_example());
  CHECK(cq_from_emq(b, vs(4, "c")) == vs(4, "cd"));
}

TEST_CASE("membership from entailment queries") {
  Teacher t(gd_example());
  QueryStats spent;
  CHECK(smq_from_emq(t, VarSet::full(5), &spent));
  CHECK(spent.emq == 0);
  CHECK_FALSE(smq_from_emq(t, vs(5, "e")));
  Teacher e(HornFormula(4));
  spent = {};
  CHECK(smq_from_emq(e, vs(4, "b"), &spent));
  CHECK(spent.emq == 3);
}

TEST_CASE("standard equivalence from entailment queries") {
  Teacher same(formula(2, {{"a", "b"}}));
  QueryStats spent;
  CHECK(seq_from_eeq_emq(same, same, formula(2, {{"a", "b"}}), &spent).is_yes());
  CHECK(spent == QueryStats{0, 0, 0, 0, 1});

  Teacher t(formula(2, {{"a", "b"}}));
  auto neg = seq_from_eeq_emq(t, t, HornFormula(2));
  REQUIRE_FALSE(neg.is_yes());
  CHECK(neg.counterexample->to_bitstring() == "10");
  CHECK(satisfies(*neg.counterexample, HornFormula(2)));
  CHECK_FALSE(satisfies(*neg.counterexample, t.target()));

  Teacher e(HornFormula(2));
  auto pos = seq_from_eeq_emq(e, e, formula(2, {{"a", "b"}}));
  REQUIRE_FALSE(pos.is_yes());
  CHECK(pos.counterexample->to_bitstring() == "10");
  CHECK(satisfies(*pos.counterexample, e.target()));
  CHECK_FALSE(satisfies(*pos.counterexample, formula(2, {{"a", "b"}})));
}

TEST_CASE("entailment and membership from closure queries") {
  Teacher t(gd_example());
  QueryStats spent;
  CHECK(emq_from_cq(t, {vs(5, "ad"), 4}, &spent));
  CHECK(emq_from_cq(t, {vs(5, "ab"), 0}, &spent));
  CHECK(spent.cq == 2);
  CHECK_FALSE(emq_from_cq(t, {vs(5, "e"), 0}));

  Teacher b(formula(2, {{"a", "b"}}));
  CHECK(smq_from_cq(b, VarSet::full(2)));
  CHECK_FALSE(smq_from_cq(b, VarSet::from_bitstring("10")));
  CHECK(smq_from_cq(t, VarSet::full(5)));
}

TEST_CASE("entailment equivalence from standard queries") {
  Teacher same(formula(2, {{"a", "b"}}));
  QueryStats spent;
  CHECK(eeq_from_seq_cq(same, same, formula(2, {{"a", "ab"}}), &spent).is_yes());
  CHECK(spent == QueryStats{0, 1, 0, 0, 0});

  Teacher t(formula(2, {{"a", "b"}}));
  spent = {};
  auto neg = eeq_from_seq_cq(t, t, HornFormula(2), &spent);
  REQUIRE_FALSE(neg.is_yes());
  CHECK(*neg.counterexample == EntailmentClause{vs(2, "a"), 1});
  CHECK(spent == QueryStats{0, 1, 1, 0, 0});

  Teacher e(HornFormula(2));
  auto pos = eeq_from_seq_cq(e, e, formula(2, {{"a", "b"}}));
  REQUIRE_FALSE(pos.is_yes());
  CHECK(*pos.counterexample == EntailmentClause{vs(2, "a"), 1});
}

TEST_CASE("closures from membership and equivalence queries") {
  Teacher e(HornFormula(3));
  CqFromSmqSeq ce(e, e);
  CHECK(ce.cq(vs(3, "b")) == vs(3, "b"));
  CHECK(e.stats().seq == 1);

  Teacher t(formula(2, {{"a", "b"}}));
  CqFromSmqSeq ct(t, t);
  CHECK(ct.cq(VarSet::from_bitstring("10")) == VarSet::from_bitstring("11"));

  Teacher g(gd_example());
  CqFromSmqSeq cg(g, g);
  CHECK(cg.cq(vs(5, "bd")) == vs(5, "bcd"));
  const auto after_first = g.stats();
  for (bf::Mask m = 0; m < 32; ++m)
    CHECK(cg.cq(bf::to_varset(m, 5)) == closure(bf::to_varset(m, 5), gd_example()));
  CHECK(g.stats() == after_first);
  REQUIRE(cg.learned().has_value());
  CHECK(equivalent(*cg.learned(), gd_example()));
}

TEST_CASE("adapters agree with the teacher exhaustively at small arity") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto target = testutil::random_target(n, rng() % 7, rng());
    const auto hyp = testutil::random_target(n, rng() % 4, rng());
    Teacher t(target);
    CqFromEmq cq_e(t);
    SmqFromEmq smq_e(t);
    EmqFromCq emq_c(t);
    SmqFromCq smq_c(t);
    SeqFromEeqEmq seq_ee(t, t);
    EeqFromSeqCq eeq_sc(t, t);
    for (bf::Mask m = 0; m <= bf::full(n); ++m) {
      const auto x = bf::to_varset(m, n);
      CHECK(cq_e.cq(x) == t.cq(x));
      CHECK(smq_e.smq(x) == t.smq(x));
      CHECK(smq_c.smq(x) == t.smq(x));
      for (std::size_t b = 0; b < n; ++b) CHECK(emq_c.emq({x, b}) == t.emq({x, b}));
    }
    auto s = seq_ee.seq(hyp);
    CHECK(s.is_yes() == bf::equivalent(target, hyp));
    if (!s.is_yes()) CHECK(satisfies(*s.counterexample, target) != satisfies(*s.counterexample, hyp));
    auto e = eeq_sc.eeq(hyp);
    CHECK(e.is_yes() == bf::equivalent(target, hyp));
    if (!e.is_yes()) {
      const auto& c = *e.counterexample;
      CHECK(entails(target, c) != entails(hyp, c));
    }

    CHECK(cq_e.adapter_stats().max_per_call.emq <= n);
    CHECK(smq_e.adapter_stats().max_per_call.emq <= n);
    CHECK(emq_c.adapter_stats().max_per_call.cq == 1);
    CHECK(smq_c.adapter_stats().max_per_call.cq == 1);
    CHECK(seq_ee.adapter_stats().max_per_call.eeq == 1);
    CHECK(seq_ee.adapter_stats().max_per_call.emq <= n);
    CHECK(eeq_sc.adapter_stats().max_per_call.seq == 1);
    CHECK(eeq_sc.adapter_stats().max_per_call.cq <= 1);
  }
}

TEST_CASE("learners over simulated protocols") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    const auto target = testutil::random_target(n, 1 + rng() % 7, rng());
    Teacher a(target);
    auto r = run_learner(Algorithm::clh_entail, a);
    CHECK(same_implication_set(r.output, gd_basis(target)));
    CHECK(a.stats().cq + a.stats().seq + a.stats().smq == 0);

    Teacher b(target);
    auto q = run_learner(Algorithm::afp_closure, b);
    CHECK(bf::equivalent(q.output, target));
    CHECK(b.stats().smq + b.stats().emq + b.stats().eeq == 0);
  }
}

TEST_CASE("lower bound demonstration") {
  auto r3 = lower_bound_demo(3);
  CHECK(r3.initial_candidates == 7);
  CHECK(r3.invariant_held);
  REQUIRE(r3.ruled_out_when_determined.has_value());
  CHECK(*r3.ruled_out_when_determined == 6);
  CHECK(r3.queries >= 6);
  REQUIRE(r3.determined_closure.has_value());

  CHECK(lower_bound_demo(2).initial_candidates == 3);

  auto top = lower_bound_demo(4, {LowerBoundStrategy::Kind::top_first, 0});
  REQUIRE_FALSE(top.steps.empty());
  CHECK(top.steps[0].query == VarSet::full(4));
  CHECK(top.steps[0].answer);
  CHECK(top.steps[0].remaining == 15);

  for (std::uint64_t seed : {1, 2, 3}) {
    auto rr = lower_bound_demo(6, {LowerBoundStrategy::Kind::random, seed});
    CHECK(rr.invariant_held);
    for (std::size_t i = 0; i < rr.steps.size(); ++i)
      CHECK(rr.steps[i].remaining + i + 1 >= rr.initial_candidates);
    if (rr.ruled_out_when_determined) CHECK(*rr.ruled_out_when_determined == 62);
  }
}
