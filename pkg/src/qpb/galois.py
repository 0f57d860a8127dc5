"""Balanced tensors over the coinvariants, the canonical map, and the braiding.

A balanced class is represented by its image under the (bijective) canonical
map, with an optional raw representative in the two-fold tensor algebra kept
for cross-checking the defining formulas.  Equality of balanced elements is
equality of canonical images.
"""

from __future__ import annotations

from itertools import product

from .hopf import ComoduleData
from .presentation import (
    NCElement, PresentationError, TensorElement, element_str, tensor_str,
)
from .reporting import combine
from .scalars import RF_ONE

COVERAGE_MESSAGE = "translation table exhausted - raise degree window"


class CoverageError(PresentationError):
    def __init__(self, msg=COVERAGE_MESSAGE):
        super().__init__(msg)


class BalancedConsistencyError(PresentationError):
    pass


def _acc(d, key, c):
    s = d.get(key)
    s = c if s is None else s + c
    if s.is_zero:
        d.pop(key, None)
    else:
        d[key] = s


def _lc_pair(com: ComoduleData, u: str, v: str):
    cache = getattr(com, "_lc_cache", None)
    if cache is None:
        cache = com._lc_cache = {}
    hit = cache.get((u, v))
    if hit is not None:
        return hit
    alg = com.alg
    out = {}
    for (v0, h), cv in com.coaction_word(v).terms.items():
        for pw, pc in alg.nf_word(u + v0).items():
            _acc(out, (pw, h), cv * pc)
    cache[(u, v)] = out
    return out


def lifted_canonical(com: ComoduleData, x: TensorElement) -> TensorElement:
    """u (x) v  ->  u v0 (x) v1, the canonical map lifted to the raw tensors."""
    out = {}
    for (u, v), c in x.terms.items():
        for key, lc in _lc_pair(com, u, v).items():
            _acc(out, key, c * lc)
    return TensorElement((com.alg, com.hopf.pres), out)


def diag_coaction2(com: ComoduleData, x: TensorElement) -> TensorElement:
    """Right coaction on two-fold tensors: u (x) v -> u0 (x) v0 (x) u1 v1."""
    alg, hp = com.alg, com.hopf.pres
    out = TensorElement.zero((alg, alg, hp))
    for (u, v), c in x.terms.items():
        au = com.coaction_word(u)
        av = com.coaction_word(v)
        for (u0, h1), cu in au.terms.items():
            for (v0, h2), cv in av.terms.items():
                hh = hp.element({h1 + h2: c * cu * cv})
                for hw, hc in hh.terms.items():
                    out = out + TensorElement(
                        (alg, alg, hp), {(u0, v0, hw): hc})
    return out


class BalancedElement:
    """Element of the balanced tensor square, keyed by canonical image."""

    __slots__ = ("com", "canim", "rep")

    def __init__(self, com, canim=None, rep=None, check=True):
        self.com = com
        if canim is None:
            if rep is None:
                rep = TensorElement.zero((com.alg, com.alg))
            canim = lifted_canonical(com, rep)
        elif rep is not None and check:
            if lifted_canonical(com, rep) != canim:
                raise BalancedConsistencyError(
                    "representative disagrees with canonical image")
        self.canim = canim
        self.rep = rep

    @classmethod
    def from_rep(cls, com, rep):
        return cls(com, rep=rep)

    @classmethod
    def zero(cls, com):
        return cls(com, canim=TensorElement.zero((com.alg, com.hopf.pres)),
                   rep=TensorElement.zero((com.alg, com.alg)), check=False)

    def __add__(self, other):
        rep = None
        if self.rep is not None and other.rep is not None:
            rep = self.rep + other.rep
        return BalancedElement(self.com, self.canim + other.canim, rep,
                               check=False)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        rep = self.rep.scale(c) if self.rep is not None else None
        return BalancedElement(self.com, self.canim.scale(c), rep, check=False)

    def left_mul(self, a: NCElement) -> "BalancedElement":
        front = TensorElement.pure([a, self.com.hopf.pres.one()])
        canim = front * self.canim
        rep = None
        if self.rep is not None:
            rep = TensorElement.pure([a, self.com.alg.one()]) * self.rep
        return BalancedElement(self.com, canim, rep, check=False)

    def right_mul(self, a: NCElement) -> "BalancedElement":
        canim = self.canim * self.com.coaction(a)
        rep = None
        if self.rep is not None:
            rep = self.rep * TensorElement.pure([self.com.alg.one(), a])
        return BalancedElement(self.com, canim, rep, check=False)

    @property
    def is_zero(self):
        return self.canim.is_zero

    def __eq__(self, other):
        return isinstance(other, BalancedElement) and self.canim == other.canim

    def __hash__(self):
        return hash(self.canim)

    def __repr__(self):
        return "<balanced: %s>" % tensor_str(self.canim)


class TranslationTable:
    """h |-> can^{-1}(1 (x) h) on a basis of the structure Hopf algebra."""

    def __init__(self, com, entries: dict):
        self.com = com
        self.entries = entries
        self._braid_cache: dict = {}
        self._braid_inv_cache: dict = {}
        for w, bal in entries.items():
            expected = TensorElement(
                (com.alg, com.hopf.pres), {("", w): RF_ONE})
            if bal.canim != expected:
                raise BalancedConsistencyError(
                    "translation entry for %s has wrong canonical image"
                    % com.hopf.pres.word_str(w))

    @property
    def coverage(self):
        return set(self.entries)

    def translate_word(self, w: str) -> BalancedElement:
        bal = self.entries.get(w)
        if bal is None:
            raise CoverageError()
        return bal

    def translate(self, y: NCElement) -> BalancedElement:
        out = BalancedElement.zero(self.com)
        for w, c in y.terms.items():
            out = out + self.translate_word(w).scale(c)
        return out


def canonical_map(com, x) -> TensorElement:
    """Canonical image of a raw tensor or balanced element."""
    if isinstance(x, BalancedElement):
        return x.canim
    return lifted_canonical(com, x)


def canonical_inverse(table: TranslationTable, y: TensorElement) -> BalancedElement:
    """a (x) h  ->  a . tau(h); exact within the table's coverage."""
    out = BalancedElement.zero(table.com)
    for (a, h), c in y.terms.items():
        tau = table.translate_word(h)
        out = out + tau.left_mul(table.com.alg.element({a: c}, reduce=False))
    if out.canim != y:
        raise BalancedConsistencyError("canonical inverse failed to verify")
    return out


# -- the braiding -------------------------------------------------------------

def braid_pair(table: TranslationTable, u: str, v: str):
    """Cached representative braiding of a basis pair: u (x) v -> u0 v tau(u1)."""
    hit = table._braid_cache.get((u, v))
    if hit is not None:
        return hit
    com = table.com
    alg = com.alg
    out = {}
    for (u0, h), cu in com.coaction_word(u).terms.items():
        tau = table.translate_word(h)
        if tau.rep is None:
            raise CoverageError()
        for fw, fc in alg.nf_word(u0 + v).items():
            for (x1, x2), tc in tau.rep.terms.items():
                c = cu * fc * tc
                for pw, pc in alg.nf_word(fw + x1).items():
                    _acc(out, (pw, x2), c * pc)
    table._braid_cache[(u, v)] = out
    return out


def braid_inverse_pair(table: TranslationTable, u: str, v: str):
    """Cached inverse braiding of a basis pair: u (x) v -> tau(S^{-1}(v1)) u v0."""
    hit = table._braid_inv_cache.get((u, v))
    if hit is not None:
        return hit
    com = table.com
    alg = com.alg
    out = {}
    for (v0, h), cv in com.coaction_word(v).terms.items():
        sh = com.hopf.antipode_inverse_of(
            com.hopf.pres.element({h: RF_ONE}, reduce=False))
        tau = table.translate(sh)
        if tau.rep is None:
            raise CoverageError()
        for bw, bc in alg.nf_word(u + v0).items():
            for (x1, x2), tc in tau.rep.terms.items():
                c = cv * bc * tc
                for pw, pc in alg.nf_word(x2 + bw).items():
                    _acc(out, (x1, pw), c * pc)
    table._braid_inv_cache[(u, v)] = out
    return out


def braid_tensor2(table: TranslationTable, x: TensorElement) -> TensorElement:
    """Representative-level braiding: u (x) v -> u0 v tau(u1) in raw tensors."""
    alg = table.com.alg
    out = {}
    for (u, v), c in x.terms.items():
        for key, bc in braid_pair(table, u, v).items():
            _acc(out, key, c * bc)
    return TensorElement((alg, alg), out)


def braid_inverse_tensor2(table: TranslationTable, x: TensorElement) -> TensorElement:
    """Inverse braiding: u (x) v -> tau(S^{-1}(v1)) u v0 in raw tensors."""
    alg = table.com.alg
    out = {}
    for (u, v), c in x.terms.items():
        for key, bc in braid_inverse_pair(table, u, v).items():
            _acc(out, key, c * bc)
    return TensorElement((alg, alg), out)


def braiding(table: TranslationTable, x: BalancedElement) -> BalancedElement:
    rep = x.rep
    if rep is None:
        rep = canonical_inverse(table, x.canim).rep
    return BalancedElement.from_rep(table.com, braid_tensor2(table, rep))


def braiding_inverse(table: TranslationTable, x: BalancedElement) -> BalancedElement:
    rep = x.rep
    if rep is None:
        rep = canonical_inverse(table, x.canim).rep
    return BalancedElement.from_rep(table.com, braid_inverse_tensor2(table, rep))


def braid_legs(table, x: TensorElement, pos: int) -> TensorElement:
    """Apply the representative braiding to legs (pos, pos+1) of a raw tensor."""
    out = {}
    for k, c in x.terms.items():
        for (w1, w2), bc in braid_pair(table, k[pos], k[pos + 1]).items():
            _acc(out, k[:pos] + (w1, w2) + k[pos + 2:], c * bc)
    return TensorElement(x.legs, out)


def _can3_triple(com: ComoduleData, x: str, y: str, z: str):
    cache = getattr(com, "_can3_cache", None)
    if cache is None:
        cache = com._can3_cache = {}
    hit = cache.get((x, y, z))
    if hit is not None:
        return hit
    alg = com.alg
    out = {}
    for (z0, z1), cz in com.coaction_word(z).terms.items():
        for mw, mc in alg.nf_word(y + z0).items():
            for (m0, h1), cm in com.coaction_word(mw).terms.items():
                c = cz * mc * cm
                for fw, fc in alg.nf_word(x + m0).items():
                    _acc(out, (fw, h1, z1), c * fc)
    cache[(x, y, z)] = out
    return out


def can3(com: ComoduleData, x: TensorElement) -> TensorElement:
    """Iterated canonical coordinates of a three-fold raw tensor."""
    hp = com.hopf.pres
    out = {}
    for (a, b, c), coeff in x.terms.items():
        for key, v in _can3_triple(com, a, b, c).items():
            _acc(out, key, coeff * v)
    return TensorElement((com.alg, hp, hp), out)


# -- verification suite --------------------------------------------------------

def verify_braiding_properties(bundle, degree: int):
    """Braid relation, sigma-commutativity, product compatibility, inverses."""
    com = bundle.comodule
    table = bundle.translation
    alg = com.alg
    hp = com.hopf.pres
    words = bundle.a_basis_words(degree)
    entries = []

    def pair_tensor(u, v):
        return TensorElement((alg, alg), {(u, v): RF_ONE})

    fails, truncated = [], 0
    for u, v in product(words, repeat=2):
        x = pair_tensor(u, v)
        try:
            braided = braid_tensor2(table, x)
        except CoverageError:
            truncated += 1
            continue
        lhs = lifted_canonical(com, braided)
        rhs = TensorElement.zero((alg, hp))
        for (u0, h), cu in com.coaction_word(u).terms.items():
            rhs = rhs + TensorElement.pure(
                [alg.element({u0 + v: cu}), hp.element({h: RF_ONE}, reduce=False)])
        if lhs != rhs:
            fails.append("%s (x) %s" % (alg.word_str(u), alg.word_str(v)))
    n2 = len(words) ** 2
    entries.append(combine("braiding", "canonical-image-of-braiding",
                           "braiding.canonical-image", fails, truncated, n2))

    fails, truncated = [], 0
    for u, v in product(words, repeat=2):
        x = pair_tensor(u, v)
        try:
            fwd = braid_tensor2(table, x)
            back = braid_inverse_tensor2(table, fwd)
            fwd2 = braid_tensor2(table, braid_inverse_tensor2(table, x))
        except CoverageError:
            truncated += 1
            continue
        if (lifted_canonical(com, back) != lifted_canonical(com, x)
                or lifted_canonical(com, fwd2) != lifted_canonical(com, x)):
            fails.append("%s (x) %s" % (alg.word_str(u), alg.word_str(v)))
    entries.append(combine("braiding", "inverse-round-trip",
                           "braiding.isomorphism", fails, truncated, n2))

    fails, truncated = [], 0
    for u, v in product(words, repeat=2):
        x = pair_tensor(u, v)
        try:
            braided = braid_tensor2(table, x)
        except CoverageError:
            truncated += 1
            continue
        if braided.mul_into(0) != x.mul_into(0):
            fails.append("%s (x) %s" % (alg.word_str(u), alg.word_str(v)))
    entries.append(combine("braiding", "sigma-commutativity",
                           "braiding.multiplication-invariance", fails,
                           truncated, n2))

    def triple(u, v, w):
        return TensorElement((alg, alg, alg), {(u, v, w): RF_ONE})

    fails, truncated = [], 0
    for u, v, w in product(words, repeat=3):
        x = triple(u, v, w)
        try:
            lhs = braid_legs(table, braid_legs(table, braid_legs(table, x, 0), 1), 0)
            rhs = braid_legs(table, braid_legs(table, braid_legs(table, x, 1), 0), 1)
        except CoverageError:
            truncated += 1
            continue
        if can3(com, lhs) != can3(com, rhs):
            fails.append("%s (x) %s (x) %s" % tuple(map(alg.word_str, (u, v, w))))
    n3 = len(words) ** 3
    entries.append(combine("braiding", "braid-relation",
                           "braiding.braid-relation", fails, truncated, n3))

    fails, truncated = [], 0
    for u, v, w in product(words, repeat=3):
        x = triple(u, v, w)
        try:
            lhs_a = braid_tensor2(table, x.mul_into(0))
            rhs_a = braid_legs(table, braid_legs(table, x, 1), 0).mul_into(1)
            lhs_b = braid_tensor2(table, x.mul_into(1))
            rhs_b = braid_legs(table, braid_legs(table, x, 0), 1).mul_into(0)
        except CoverageError:
            truncated += 1
            continue
        if (lifted_canonical(com, lhs_a) != lifted_canonical(com, rhs_a)
                or lifted_canonical(com, lhs_b) != lifted_canonical(com, rhs_b)):
            fails.append("%s (x) %s (x) %s" % tuple(map(alg.word_str, (u, v, w))))
    entries.append(combine("braiding", "product-compatibility",
                           "braiding.product-compatibility", fails, truncated, n3))

    fails = []
    coinv = bundle.coinvariant_elements(min(degree, 2))
    for b in coinv:
        for u, v in product(words, repeat=2):
            left = TensorElement.pure([alg.element({u: RF_ONE}, reduce=False) * b,
                                       alg.element({v: RF_ONE}, reduce=False)])
            right = TensorElement.pure([alg.element({u: RF_ONE}, reduce=False),
                                        b * alg.element({v: RF_ONE}, reduce=False)])
            if lifted_canonical(com, left) != lifted_canonical(com, right):
                fails.append("%s | %s (x) %s"
                             % (element_str(b), alg.word_str(u), alg.word_str(v)))
    entries.append(combine("braiding", "coinvariant-slide",
                           "balanced.coinvariant-slide", fails,
                           total=len(coinv) * n2))
    return entries
