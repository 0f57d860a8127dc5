"""Universal calculus, strong connections, connection one-forms, vertical map."""

from __future__ import annotations

from .galois import (
    BalancedElement, TranslationTable, diag_coaction2, lifted_canonical,
)
from .hopf import ComoduleData, adjoint_coaction
from .presentation import (
    NCElement, PresentationError, TensorElement, element_str, tensor_str,
)
from .reporting import combine
from .scalars import RF_ONE, RF_ZERO


class ConnectionError_(PresentationError):
    pass


def to_element(x: TensorElement) -> NCElement:
    """Unwrap a one-leg tensor."""
    pres = x.legs[0]
    return pres.element({k[0]: c for k, c in x.terms.items()}, reduce=False)


def multiply_legs(x: TensorElement) -> NCElement:
    return to_element(x.mul_into(0))


class UniversalOneForm:
    """Element of the multiplication kernel inside the tensor square."""

    __slots__ = ("value",)

    def __init__(self, value: TensorElement):
        if not multiply_legs(value).is_zero:
            raise ConnectionError_("not in the multiplication kernel")
        self.value = value

    def __eq__(self, other):
        return isinstance(other, UniversalOneForm) and self.value == other.value

    def __repr__(self):
        return "<one-form: %s>" % tensor_str(self.value)


def d_universal(com: ComoduleData, a: NCElement) -> UniversalOneForm:
    """The universal differential 1 (x) a - a (x) 1."""
    alg = com.alg
    value = TensorElement.pure([alg.one(), a]) - TensorElement.pure([a, alg.one()])
    return UniversalOneForm(value)


def vertical_universal(com: ComoduleData, x: TensorElement) -> TensorElement:
    """u (x) v -> u v0 (x) (v1 - eps(v1) 1), landing in counit-kernel legs."""
    lc = lifted_canonical(com, x)
    hp = com.hopf.pres
    out = lc
    for (a, h), c in lc.terms.items():
        e = com.hopf.counit_word(h)
        if not e.is_zero:
            out = out - TensorElement((com.alg, hp), {(a, ""): c * e})
    return out


class StrongConnectionTable:
    """h |-> ell(h) in the tensor square, on a basis of H up to a degree bound."""

    def __init__(self, com: ComoduleData, entries: dict, provenance: dict):
        self.com = com
        self.entries = entries          # h word -> TensorElement(A, A)
        self.provenance = provenance    # h word -> "seed" | "recursion" | ...

    @property
    def coverage(self):
        return set(self.entries)

    def ell_word(self, w: str) -> TensorElement:
        try:
            return self.entries[w]
        except KeyError:
            raise ConnectionError_(
                "connection table coverage exhausted at %s"
                % self.com.hopf.pres.word_str(w))

    def ell(self, x: NCElement) -> TensorElement:
        out = TensorElement.zero((self.com.alg, self.com.alg))
        for w, c in x.terms.items():
            out = out + self.ell_word(w).scale(c)
        return out

    def translation_table(self) -> TranslationTable:
        """tau := (balanced class of) ell; valid because of the lifted-can axiom."""
        entries = {w: BalancedElement.from_rep(self.com, t)
                   for w, t in self.entries.items()}
        return TranslationTable(self.com, entries)


def omega(conn: StrongConnectionTable, h: NCElement) -> UniversalOneForm:
    """Connection one-form ell(h) - eps(h) 1 (x) 1; input is counit-projected."""
    com = conn.com
    value = conn.ell(h)
    e = com.hopf.counit(h)
    if not e.is_zero:
        value = value - TensorElement.unit((com.alg, com.alg), e)
    form = UniversalOneForm(value)
    expected = _one_tensor_hplus(com, h)
    if vertical_universal(com, value) != expected:
        raise ConnectionError_("connection one-form fails the vertical identity")
    return form


def _one_tensor_hplus(com, h: NCElement) -> TensorElement:
    """1 (x) (h - eps(h) 1) as a tensor with an algebra leg and a Hopf leg."""
    hp = com.hopf.pres
    out = TensorElement.zero((com.alg, hp))
    for w, c in h.terms.items():
        out = out + TensorElement((com.alg, hp), {("", w): c})
        e = com.hopf.counit_word(w)
        if not e.is_zero:
            out = out - TensorElement((com.alg, hp), {("", ""): c * e})
    return out


# -- constructors --------------------------------------------------------------

def connection_from_antipode(com: ComoduleData, window: int) -> StrongConnectionTable:
    """Trivial-bundle connection (S (x) id) after the coproduct."""
    h = com.hopf
    entries, prov = {}, {}
    for w in h.pres.basis_words(window):
        cop = h.coproduct_word(w)
        entries[w] = cop.map_leg(0, h.antipode_word)
        prov[w] = "formula"
    return StrongConnectionTable(com, entries, prov)


def connection_from_u1_seeds(com: ComoduleData, seed_pos: TensorElement,
                             seed_neg: TensorElement, window: int,
                             ) -> StrongConnectionTable:
    """Two-seed sandwich recursion for circle-structure bundles.

    seed_pos = ell(t), seed_neg = ell(t^{-1}); each must satisfy the
    lifted-canonical identity exactly or the seed is rejected.
    """
    hp = com.hopf.pres
    t = hp.word("t")
    tinv = hp.word("tinv")
    for seed, target in ((seed_pos, t), (seed_neg, tinv)):
        want = TensorElement((com.alg, hp), {("", target): RF_ONE})
        if lifted_canonical(com, seed) != want:
            raise ConnectionError_("invalid connection seed")
    entries = {"": TensorElement.unit((com.alg, com.alg))}
    prov = {"": "seed"}
    entries[t], prov[t] = seed_pos, "seed"
    entries[tinv], prov[tinv] = seed_neg, "seed"
    for n in range(2, window + 1):
        entries[t * n] = _sandwich(seed_pos, entries[t * (n - 1)])
        prov[t * n] = "recursion"
        entries[tinv * n] = _sandwich(seed_neg, entries[tinv * (n - 1)])
        prov[tinv * n] = "recursion"
    return StrongConnectionTable(com, entries, prov)


def _sandwich(outer: TensorElement, inner: TensorElement) -> TensorElement:
    """first legs multiply left-to-right, second legs right-to-left."""
    alg = outer.legs[0]
    out = TensorElement.zero((alg, alg))
    for (x, y), c in outer.terms.items():
        for (u, v), d in inner.terms.items():
            first = alg.element({x + u: c * d})
            second = alg.element({v + y: RF_ONE})
            out = out + TensorElement.pure([first, second])
    return out


# -- verification ----------------------------------------------------------------

def verify_connection_properties(conn: StrongConnectionTable, degree: int):
    """The three strong-connection axioms plus the one-form properties."""
    com = conn.com
    h = com.hopf
    hp = h.pres
    alg = com.alg
    words = sorted((w for w in conn.coverage if len(w) <= degree),
                   key=hp.word_key)
    entries = []

    unit_ok = conn.entries.get("") == TensorElement.unit((alg, alg))
    entries.append(combine("connection", "unit-value",
                           "strong-connection.unit",
                           [] if unit_ok else [tensor_str(conn.entries.get(""))]))

    fails = []
    for w in words:
        ell = conn.ell_word(w)
        lhs = ell.map_leg(1, com.coaction_word, (alg, alg, hp))
        rhs = TensorElement.zero((alg, alg, hp))
        for (h1, h2), c in h.coproduct_word(w).terms.items():
            if h1 not in conn.coverage:
                fails.append("coverage gap at %s" % hp.word_str(h1))
                continue
            for (x, y), d in conn.ell_word(h1).terms.items():
                rhs = rhs + TensorElement((alg, alg, hp), {(x, y, h2): c * d})
        if lhs != rhs:
            fails.append(hp.word_str(w))
    entries.append(combine("connection", "right-colinearity",
                           "strong-connection.colinearity", fails,
                           total=len(words)))

    fails = []
    for w in words:
        want = TensorElement((alg, hp), {("", w): RF_ONE})
        if lifted_canonical(com, conn.ell_word(w)) != want:
            fails.append(hp.word_str(w))
    entries.append(combine("connection", "lifted-canonical-identity",
                           "strong-connection.lifted-canonical", fails,
                           total=len(words)))

    fails = []
    for w in words:
        x = hp.element({w: RF_ONE}, reduce=False)
        try:
            omega(conn, x)
        except ConnectionError_ as err:
            fails.append("%s: %s" % (hp.word_str(w), err))
    entries.append(combine("connection", "one-form-kernel-and-vertical",
                           "connection-form.vertical-identity", fails,
                           total=len(words)))

    fails = []
    for w in words:
        if w == "":
            continue
        x = hp.element({w: RF_ONE}, reduce=False)
        xplus = x - hp.one(h.counit(x))
        if xplus.is_zero:
            continue
        try:
            form = omega(conn, x).value
            ad = adjoint_coaction(h, xplus)
            rhs = TensorElement.zero((alg, alg, hp))
            for (h2, hrest), c in ad.terms.items():
                om = omega(conn, hp.element({h2: RF_ONE}, reduce=False)).value
                for (x1, x2), d in om.terms.items():
                    rhs = rhs + TensorElement((alg, alg, hp),
                                              {(x1, x2, hrest): c * d})
        except ConnectionError_ as err:
            fails.append("%s: %s" % (hp.word_str(w), err))
            continue
        if diag_coaction2(com, form) != rhs:
            fails.append(hp.word_str(w))
    entries.append(combine("connection", "one-form-adjoint-covariance",
                           "connection-form.adjoint-covariance", fails,
                           total=len(words)))
    return entries
