"""Hopf algebras and right comodule algebras from presentations plus tables.

Structure maps are given on generators and extended (anti)multiplicatively
along words; consistency with the defining relations is verified, never
assumed.  All verification functions return report entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import SubspaceBasis, kernel_with_tail, span
from .presentation import (
    NCElement, Presentation, PresentationError, TensorElement, element_str,
    parse_element, parse_presentation, parse_scalar, parse_tensor, tensor_str,
)
from .reporting import combine
from .scalars import RF_ONE, RF_ZERO, RationalFunction


class StructureMapError(PresentationError):
    pass


class HopfData:
    """A presented Hopf algebra with generator tables for delta, eps, S."""

    def __init__(self, pres, delta, eps, antipode, antipode_inv=None):
        self.pres = pres
        self.delta = delta              # sym -> TensorElement(H, H)
        self.eps = eps                  # sym -> RationalFunction
        self.antipode = antipode        # sym -> NCElement
        self.antipode_inv = antipode_inv
        for sym in pres.symbols:
            for table, kind in ((delta, "delta"), (eps, "eps"),
                                (antipode, "antipode")):
                if sym not in table:
                    raise StructureMapError(
                        "symbol %s missing from %s table" % (sym, kind))
        self._cop: dict[str, TensorElement] = {}
        self._anti: dict[str, NCElement] = {}
        self._anti_inv: dict[str, NCElement] = {}

    @classmethod
    def from_source(cls, text):
        pres, structure = parse_presentation(text)
        delta, eps, anti, anti_inv = {}, {}, {}, {}
        for line in structure:
            if line.kind == "delta":
                delta[line.symbol] = parse_tensor(line.rhs_text, [pres, pres],
                                                  line.line)
            elif line.kind == "eps":
                eps[line.symbol] = parse_scalar(line.rhs_text, line.line)
            elif line.kind == "antipode":
                anti[line.symbol] = parse_element(line.rhs_text, pres, line.line)
            elif line.kind == "antipodeinv":
                anti_inv[line.symbol] = parse_element(line.rhs_text, pres,
                                                      line.line)
        return cls(pres, delta, eps, anti, anti_inv or None)

    # -- multiplicative extensions ------------------------------------------

    def coproduct_word(self, w: str) -> TensorElement:
        hit = self._cop.get(w)
        if hit is not None:
            return hit
        pres = self.pres
        if w == "":
            out = TensorElement.unit((pres, pres))
        else:
            head = self.coproduct_word(w[:-1])
            sym = pres._sym[w[-1]]
            out = head * self.delta[sym]
        self._cop[w] = out
        return out

    def coproduct(self, x: NCElement) -> TensorElement:
        out = TensorElement.zero((self.pres, self.pres))
        for w, c in x.terms.items():
            out = out + self.coproduct_word(w).scale(c)
        return out

    def counit_word(self, w: str) -> RationalFunction:
        c = RF_ONE
        for ch in w:
            c = c * self.eps[self.pres._sym[ch]]
            if c.is_zero:
                return RF_ZERO
        return c

    def counit(self, x: NCElement) -> RationalFunction:
        total = RF_ZERO
        for w, c in x.terms.items():
            total = total + c * self.counit_word(w)
        return total

    def _anti_word(self, w, table, cache):
        hit = cache.get(w)
        if hit is not None:
            return hit
        pres = self.pres
        if w == "":
            out = pres.one()
        else:
            out = self._anti_word(w[1:], table, cache) * table[pres._sym[w[0]]]
        cache[w] = out
        return out

    def antipode_word(self, w: str) -> NCElement:
        return self._anti_word(w, self.antipode, self._anti)

    def antipode_of(self, x: NCElement) -> NCElement:
        out = self.pres.zero()
        for w, c in x.terms.items():
            out = out + self.antipode_word(w).scale(c)
        return out

    def antipode_inverse_of(self, x: NCElement) -> NCElement:
        table = self.antipode_inv if self.antipode_inv else self.antipode
        out = self.pres.zero()
        for w, c in x.terms.items():
            out = out + self._anti_word(w, table, self._anti_inv).scale(c)
        return out

    def group_like_word(self, charge: int, window: int):
        """Basis word that is group-like with the given coaction charge."""
        for w in self.pres.basis_words(window):
            if self.pres.charge_of_word(w) != charge:
                continue
            if (self.coproduct_word(w) == TensorElement.pure(
                    [self.pres.element({w: RF_ONE}, reduce=False)] * 2)
                    and self.counit_word(w) == RF_ONE):
                return w
        return None


class ComoduleData:
    """A presented right comodule algebra over a HopfData."""

    def __init__(self, hopf: HopfData, alg: Presentation, delta):
        self.hopf = hopf
        self.alg = alg
        self.delta = delta              # sym -> TensorElement(A, H)
        for sym in alg.symbols:
            if sym not in delta:
                raise StructureMapError("symbol %s missing from delta table" % sym)
        self._coact: dict[str, TensorElement] = {}

    @classmethod
    def from_lines(cls, hopf, alg, structure):
        delta = {}
        for line in structure:
            if line.kind == "delta":
                delta[line.symbol] = parse_tensor(
                    line.rhs_text, [alg, hopf.pres], line.line)
        return cls(hopf, alg, delta)

    def coaction_word(self, w: str) -> TensorElement:
        hit = self._coact.get(w)
        if hit is not None:
            return hit
        if w == "":
            out = TensorElement.unit((self.alg, self.hopf.pres))
        else:
            head = self.coaction_word(w[:-1])
            out = head * self.delta[self.alg._sym[w[-1]]]
        self._coact[w] = out
        return out

    def coaction(self, x: NCElement) -> TensorElement:
        out = TensorElement.zero((self.alg, self.hopf.pres))
        for w, c in x.terms.items():
            out = out + self.coaction_word(w).scale(c)
        return out


# -- verification suites ------------------------------------------------------

def _rule_products(pres, lhs, fn_gen, unit, mul, reverse=False):
    chars = reversed(lhs) if reverse else lhs
    out = unit
    for ch in chars:
        out = mul(out, fn_gen(pres._sym[ch]))
    return out


def verify_bialgebra_axioms(h: HopfData, degree: int):
    """Coassociativity, counit, antipode convolution and relation consistency."""
    pres = h.pres
    entries = []
    words = pres.basis_words(degree)

    fails = []
    for rule in pres.rules:
        lhs_cop = _rule_products(
            pres, rule.lhs, lambda s: h.delta[s],
            TensorElement.unit((pres, pres)), lambda a, b: a * b)
        rhs_cop = h.coproduct(pres.element(dict(rule.rhs), reduce=False))
        diff = lhs_cop - rhs_cop
        if not diff.is_zero:
            fails.append(tensor_str(diff))
    entries.append(combine("hopf", "coproduct-respects-relations",
                           "bialgebra.coproduct-algebra-map", fails,
                           total=len(pres.rules)))

    fails = []
    for rule in pres.rules:
        lhs_eps = RF_ONE
        for ch in rule.lhs:
            lhs_eps = lhs_eps * h.eps[pres._sym[ch]]
        rhs_eps = h.counit(pres.element(dict(rule.rhs), reduce=False))
        if lhs_eps != rhs_eps:
            fails.append(pres.word_str(rule.lhs))
    entries.append(combine("hopf", "counit-respects-relations",
                           "bialgebra.counit-algebra-map", fails,
                           total=len(pres.rules)))

    fails = []
    for rule in pres.rules:
        lhs_s = _rule_products(pres, rule.lhs, lambda s: h.antipode[s],
                               pres.one(), lambda a, b: a * b, reverse=True)
        rhs_s = h.antipode_of(pres.element(dict(rule.rhs), reduce=False))
        diff = lhs_s - rhs_s
        if not diff.is_zero:
            fails.append(element_str(diff))
    entries.append(combine("hopf", "antipode-respects-relations",
                           "bialgebra.antipode-anti-algebra-map", fails,
                           total=len(pres.rules)))

    coassoc, counit_l, counit_r, conv_l, conv_r = [], [], [], [], []
    for w in words:
        cop = h.coproduct_word(w)
        left = cop.map_leg(0, h.coproduct_word, (pres, pres, pres))
        right = cop.map_leg(1, h.coproduct_word, (pres, pres, pres))
        if left != right:
            coassoc.append(pres.word_str(w))
        ew = pres.element({w: RF_ONE}, reduce=False)
        lhs = _contract_scalar(cop, 0, h.counit_word, pres)
        if lhs != ew:
            counit_l.append(pres.word_str(w))
        rhs = _contract_scalar(cop, 1, h.counit_word, pres)
        if rhs != ew:
            counit_r.append(pres.word_str(w))
        target = pres.one(h.counit_word(w))
        if cop.map_leg(0, h.antipode_word).mul_into(0) != TensorElement.pure([target]):
            conv_l.append(pres.word_str(w))
        if cop.map_leg(1, h.antipode_word).mul_into(0) != TensorElement.pure([target]):
            conv_r.append(pres.word_str(w))
    n = len(words)
    entries.append(combine("hopf", "coassociativity",
                           "coalgebra.coassociativity", coassoc, total=n))
    entries.append(combine("hopf", "counit-law-left",
                           "coalgebra.counit-law", counit_l, total=n))
    entries.append(combine("hopf", "counit-law-right",
                           "coalgebra.counit-law", counit_r, total=n))
    entries.append(combine("hopf", "antipode-convolution-left",
                           "hopf.antipode-convolution", conv_l, total=n))
    entries.append(combine("hopf", "antipode-convolution-right",
                           "hopf.antipode-convolution", conv_r, total=n))

    fails = []
    for w in words:
        x = pres.element({w: RF_ONE}, reduce=False)
        if h.antipode_inverse_of(h.antipode_of(x)) != x:
            fails.append(pres.word_str(w))
        elif h.antipode_of(h.antipode_inverse_of(x)) != x:
            fails.append(pres.word_str(w))
    entries.append(combine("hopf", "antipode-bijective",
                           "hopf.antipode-bijectivity", fails, total=n))
    return entries


def _contract_scalar(tensor, i, scalar_fn, keep_pres):
    out = keep_pres.zero()
    for k, c in tensor.terms.items():
        other = k[1 - i]
        out = out + keep_pres.element({other: c * scalar_fn(k[i])}, reduce=False)
    return out


def verify_comodule_axioms(c: ComoduleData, degree: int):
    """Coaction coassociativity, counit law, and algebra-map consistency."""
    alg, h = c.alg, c.hopf
    entries = []

    fails = []
    for rule in alg.rules:
        lhs = _rule_products(alg, rule.lhs, lambda s: c.delta[s],
                             TensorElement.unit((alg, h.pres)),
                             lambda a, b: a * b)
        rhs = c.coaction(alg.element(dict(rule.rhs), reduce=False))
        diff = lhs - rhs
        if not diff.is_zero:
            fails.append(tensor_str(diff))
    entries.append(combine("hopf", "coaction-respects-relations",
                           "comodule.coaction-algebra-map", fails,
                           total=len(alg.rules)))

    words = alg.basis_words(degree)
    coassoc, counit = [], []
    for w in words:
        act = c.coaction_word(w)
        left = act.map_leg(0, c.coaction_word, (alg, h.pres, h.pres))
        right = act.map_leg(1, h.coproduct_word, (alg, h.pres, h.pres))
        if left != right:
            coassoc.append(alg.word_str(w))
        back = _contract_scalar(act, 1, h.counit_word, alg)
        if back != alg.element({w: RF_ONE}, reduce=False):
            counit.append(alg.word_str(w))
    entries.append(combine("hopf", "coaction-coassociativity",
                           "comodule.coassociativity", coassoc, total=len(words)))
    entries.append(combine("hopf", "coaction-counit-law",
                           "comodule.counit-law", counit, total=len(words)))
    return entries


# -- coinvariants and charge decomposition ------------------------------------

def coinvariants_up_to(c: ComoduleData, degree: int) -> SubspaceBasis:
    """Kernel of delta - (.)x1 on the span of basis words of length <= degree."""
    alg, h = c.alg, c.hopf
    words = alg.basis_words(degree)
    labels = []
    index = {}
    rows = []
    for i, w in enumerate(words):
        img = c.coaction_word(w) - TensorElement(
            (alg, h.pres), {(w, ""): RF_ONE})
        v = {}
        for k, coeff in img.terms.items():
            j = index.get(k)
            if j is None:
                j = index[k] = len(labels)
                labels.append(k)
            v[j] = coeff
        rows.append(v)
    ncols = len(labels)
    tagged = []
    for i, v in enumerate(rows):
        v = dict(v)
        v[ncols + i] = RF_ONE
        tagged.append(v)
    combos = kernel_with_tail(tagged, ncols)
    return span(combos, tuple(words))


def coinvariant_elements(c: ComoduleData, degree: int) -> list[NCElement]:
    basis = coinvariants_up_to(c, degree)
    words = basis.ambient
    out = []
    for row in basis.rows:
        out.append(c.alg.element({words[j]: coeff for j, coeff in row},
                                 reduce=False))
    return out


@dataclass
class ChargeDecomposition:
    element: NCElement
    components: dict[int, NCElement]


def charge_decompose(a: NCElement, c: ComoduleData) -> ChargeDecomposition:
    """Split by coaction weight; requires a diagonal group-like coaction."""
    alg, h = a.pres, c.hopf
    components: dict[int, NCElement] = {}
    for w, coeff in a.terms.items():
        act = c.coaction_word(w)
        terms = list(act.terms.items())
        diagonal = (len(terms) == 1 and terms[0][0][0] == w
                    and terms[0][1] == RF_ONE)
        if not diagonal:
            raise PresentationError("not charge-graded")
        hword = terms[0][0][1]
        n = h.pres.charge_of_word(hword)
        if n != alg.charge_of_word(w):
            raise PresentationError("not charge-graded")
        glike = h.group_like_word(n, window=max(abs(n), 1))
        if glike != hword:
            raise PresentationError("not charge-graded")
        comp = components.get(n, alg.zero())
        components[n] = comp + alg.element({w: coeff}, reduce=False)
    for n, comp in components.items():
        glike = h.group_like_word(n, window=max(abs(n), 1))
        expected = TensorElement.pure(
            [comp, h.pres.element({glike: RF_ONE}, reduce=False)])
        if c.coaction(comp) != expected:
            raise PresentationError("not charge-graded")
    return ChargeDecomposition(a, components)


def adjoint_coaction(h: HopfData, x: NCElement) -> TensorElement:
    """Right adjoint coaction h2 (x) S(h1) h3 on counit-kernel elements."""
    if not h.counit(x).is_zero:
        raise PresentationError("adjoint coaction requires a counit-kernel element")
    pres = h.pres
    out = TensorElement.zero((pres, pres))
    cop = h.coproduct(x)
    three = cop.map_leg(1, h.coproduct_word, (pres, pres, pres))
    for (w1, w2, w3), c in three.terms.items():
        tail = h.antipode_word(w1) * pres.element({w3: RF_ONE}, reduce=False)
        out = out + TensorElement.pure(
            [pres.element({w2: c}, reduce=False), tail])
    return out
