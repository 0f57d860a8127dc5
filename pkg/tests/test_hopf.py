"""Hopf/comodule structure maps, axiom suites, coinvariants, charges."""

import pytest

from qpb.builtins import PODLES_COACTION, SUQ2_SOURCE, U1_SOURCE
from qpb.hopf import (
    ComoduleData, HopfData, adjoint_coaction, charge_decompose,
    coinvariant_elements, coinvariants_up_to, verify_bialgebra_axioms,
    verify_comodule_axioms,
)
from qpb.presentation import (
    PresentationError, TensorElement, parse_presentation, parse_tensor,
)
from qpb.reporting import FAIL, PASS
from qpb.scalars import RF_ONE, rf_int, rf_q


@pytest.fixture(scope="module")
def u1():
    return HopfData.from_source(U1_SOURCE)


@pytest.fixture(scope="module")
def suq2():
    return HopfData.from_source(SUQ2_SOURCE)


@pytest.fixture(scope="module")
def podles(u1, suq2):
    apres, _ = parse_presentation(SUQ2_SOURCE)
    _, lines = parse_presentation("algebra dummy\n" + "".join(
        "gen %s charge %d\n" % (g.symbol, g.charge) for g in apres.gens)
        + PODLES_COACTION)
    return ComoduleData.from_lines(u1, apres, lines)


def test_group_like_coproduct(u1):
    t = u1.pres.gen("t")
    assert u1.coproduct(t) == TensorElement.pure([t, t])
    assert u1.counit(t) == RF_ONE
    assert u1.antipode_of(t) == u1.pres.gen("tinv")


def test_unit_axioms(u1):
    one = u1.pres.one()
    assert u1.counit(one) == RF_ONE
    assert u1.antipode_of(one) == one


def test_podles_coaction_table(podles):
    apres = podles.alg
    hpres = podles.hopf.pres
    a = apres.gen("alpha")
    assert podles.coaction(a) == TensorElement.pure([a, hpres.gen("t")])
    gs = apres.gen("gamma*")
    assert podles.coaction(gs) == TensorElement.pure([gs, hpres.gen("tinv")])


def test_bialgebra_axioms_u1(u1):
    entries = verify_bialgebra_axioms(u1, 3)
    assert all(e.status == PASS for e in entries)


def test_bialgebra_axioms_suq2(suq2):
    entries = verify_bialgebra_axioms(suq2, 2)
    assert all(e.status == PASS for e in entries), [
        (e.check, e.status, e.witness) for e in entries if e.status != PASS]


def test_corrupted_coproduct_fails_counit_law_with_witness(u1):
    bad_delta = dict(u1.delta)
    hpres = u1.pres
    bad_delta["t"] = TensorElement.pure([hpres.gen("t"), hpres.one()])
    bad = HopfData(hpres, bad_delta, u1.eps, u1.antipode, u1.antipode_inv)
    entries = verify_bialgebra_axioms(bad, 2)
    by_check = {e.check: e for e in entries}
    assert by_check["coassociativity"].status == PASS
    failing = by_check["counit-law-left"]
    assert failing.status == FAIL
    assert failing.witness.split()[0] == "t"


def test_comodule_axioms_podles(podles):
    entries = verify_comodule_axioms(podles, 2)
    assert all(e.status == PASS for e in entries)


def test_trivial_comodule_axioms(u1):
    trivial = ComoduleData(u1, u1.pres, u1.delta)
    entries = verify_comodule_axioms(trivial, 3)
    assert all(e.status == PASS for e in entries)


def test_corrupted_coaction_fails_algebra_map(podles, u1):
    bad_delta = dict(podles.delta)
    apres = podles.alg
    bad_delta["gamma"] = TensorElement.pure([apres.gen("gamma"), u1.pres.one()])
    bad = ComoduleData(u1, apres, bad_delta)
    entries = verify_comodule_axioms(bad, 1)
    by_check = {e.check: e for e in entries}
    assert by_check["coaction-respects-relations"].status == FAIL


def test_coinvariants_trivial_bundle(u1):
    trivial = ComoduleData(u1, u1.pres, u1.delta)
    for degree in (1, 2, 3):
        basis = coinvariants_up_to(trivial, degree)
        assert basis.dim == 1
        elems = coinvariant_elements(trivial, degree)
        assert elems[0] == u1.pres.one()


def test_coinvariants_podles_degree2(podles):
    basis = coinvariants_up_to(podles, 2)
    # charge-0 irreducible words of length <= 2
    apres = podles.alg
    expected = [w for w in apres.basis_words(2) if apres.charge_of_word(w) == 0]
    assert basis.dim == len(expected) == 4
    names = {apres.word_str(w) for w in expected}
    assert names == {"1", "gamma* gamma", "gamma* alpha", "gamma alpha*"}


def test_coinvariants_form_subalgebra(podles):
    elems = coinvariant_elements(podles, 2)
    deeper = coinvariants_up_to(podles, 4)
    words = {w: j for j, w in enumerate(deeper.ambient)}
    from qpb.linalg import membership
    for x in elems:
        for y in elems:
            prod = x * y
            vec = {words[w]: c for w, c in prod.terms.items()}
            assert membership(vec, deeper) is not None


def test_charge_decompose(podles):
    apres = podles.alg
    a = apres.gen("alpha")
    g, gs = apres.gen("gamma"), apres.gen("gamma*")
    x = a + g * gs
    dec = charge_decompose(x, podles)
    assert set(dec.components) == {0, 1}
    assert dec.components[1] == a
    assert dec.components[0] == g * gs
    assert sum(dec.components.values(), apres.zero()) == x

    one = apres.one()
    assert set(charge_decompose(one, podles).components) == {0}

    astar_g = apres.gen("alpha*") * g
    assert set(charge_decompose(astar_g, podles).components) == {0}


def test_charge_decompose_rejects_non_diagonal(suq2):
    self_comodule = ComoduleData(suq2, suq2.pres, suq2.delta)
    with pytest.raises(PresentationError, match="not charge-graded"):
        charge_decompose(suq2.pres.gen("alpha"), self_comodule)


def test_adjoint_coaction_group_like(u1):
    pres = u1.pres
    t = pres.gen("t")
    h = t - 1
    out = adjoint_coaction(u1, h)
    assert out == TensorElement.pure([h, pres.one()])
    t3 = t * t * t
    out3 = adjoint_coaction(u1, t3 - 1)
    assert out3 == TensorElement.pure([t3 - 1, pres.one()])


def test_adjoint_coaction_requires_counit_kernel(u1):
    with pytest.raises(PresentationError):
        adjoint_coaction(u1, u1.pres.gen("t"))
