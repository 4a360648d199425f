import hornlearn as hl


def gd_example():
    return hl.corpus_formula("gd-example")


def test_closure_and_quasi_closure():
    h = hl.corpus_formula("bullet-example")
    ac = hl.VarSet(4, [0, 2])
    assert hl.closure(ac, h).to_bitstring() == "1111"
    assert hl.quasi_closure(ac, h).to_bitstring() == "1011"


def test_parse_serialize_round_trip():
    text = "vars: a b c\na -> b\nb -> c\n"
    h = hl.parse_formula(text)
    assert len(h) == 2
    assert hl.serialize_formula(h) == text
    assert hl.equivalent(h, hl.parse_formula("vars: a b c\na -> b c\nb -> c\n"))


def test_parse_error_is_value_error():
    try:
        hl.parse_formula("vars: a\na -> z\n")
    except ValueError as e:
        assert "line 2" in str(e)
    else:
        raise AssertionError("expected a parse error")


def test_gd_basis():
    g = hl.gd_basis(hl.corpus_formula("bullet-example"))
    assert str(g) == "vars: a b c d\na -> a b c d\nc -> c d\n"
    assert hl.is_saturated(g)


def test_models():
    h = hl.HornFormula.from_indices(2, [([0], [1])])
    assert [x.to_bitstring() for x in hl.models(h)] == ["00", "01", "11"]
    assert hl.is_intersection_closed(hl.models(gd_example()))


def test_teacher_queries():
    t = hl.Teacher(gd_example())
    assert t.smq(hl.VarSet.full(5))
    assert not t.smq(hl.VarSet(5, [4]))
    assert t.cq(hl.VarSet(5, [0, 3])).to_bitstring() == "11111"
    assert t.emq(hl.EntailmentClause(hl.VarSet(5, [2, 3]), 1))
    assert t.seq(gd_example()) is None
    assert t.seq(hl.HornFormula(5)) is not None
    assert t.stats == {"seq": 2, "cq": 1, "smq": 2, "emq": 1, "eeq": 0}


def test_learners_reach_the_target():
    target = gd_example()
    for algorithm in ["clh", "afp", "clh-entail", "afp-closure"]:
        for strategy in ["first", "random", "minimal"]:
            out, stats = hl.learn(target, algorithm, strategy, seed=3)
            assert hl.equivalent(out, target)
            if algorithm.startswith("clh"):
                assert hl.same_implication_set(out, hl.gd_basis(target))
            if algorithm == "clh":
                assert stats["seq"] <= 5 * 6 + 6 + 1


def test_random_formula_is_deterministic():
    a = hl.random_formula(8, 6, seed=4)
    b = hl.random_formula(8, 6, seed=4)
    assert a == b
    assert hl.equivalent(hl.gd_basis(a), a)


def test_lower_bound():
    r = hl.lower_bound_demo(6)
    assert r["invariant_held"]
    assert r["ruled_out_when_determined"] == 2**6 - 2


def test_bench_csv():
    csv = hl.bench_csv(["clh", "afp"], 3, 4, 1, 2, trials=1, seed=2)
    lines = csv.strip().split("\n")
    assert lines[0] == "algorithm,n,m,seed,seq,cq,smq,emq,eeq,wall_time_s"
    assert len(lines) == 1 + 2 * 2 * 2
