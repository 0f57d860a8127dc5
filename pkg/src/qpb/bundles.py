"""Built-in principal comodule algebras: trivial, finite function-algebra, Podles.

Each bundle carries a comodule, a strong connection table, and a translation
table.  The finite bundle is truncation-free and doubles as the exhaustive
test model; its connection comes from an exact linear solve and its
translation map from an independent solve of the canonical-map system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .builtins import PODLES_COACTION, SUQ2_SOURCE, U1_SOURCE
from .connection import (
    StrongConnectionTable, connection_from_antipode, connection_from_u1_seeds,
    multiply_legs, to_element,
)
from .galois import (
    BalancedElement, TranslationTable, canonical_inverse, lifted_canonical,
)
from .hopf import (
    ComoduleData, HopfData, coinvariant_elements, verify_bialgebra_axioms,
)
from .linalg import solve_particular
from .presentation import (
    Generator, NCElement, Presentation, PresentationError,
    PresentationSyntaxError, TensorElement, element_str, parse_presentation,
    parse_tensor, tensor_str,
)
from .reporting import FAIL, NOT_EVALUATED, ReportEntry, combine
from .scalars import RF_ONE, RF_ZERO, rf_int, rf_q


class BundleError(PresentationError):
    pass


@dataclass
class Bundle:
    kind: str
    comodule: ComoduleData
    connection: StrongConnectionTable
    translation: TranslationTable
    h_window: int
    action: "FiniteAction | None" = None
    _coinv: dict = field(default_factory=dict)

    def a_basis_words(self, degree):
        return self.comodule.alg.basis_words(degree)

    def h_basis_words(self, degree=None):
        degree = self.h_window if degree is None else degree
        return self.comodule.hopf.pres.basis_words(degree)

    def hplus_labels(self, degree=None):
        """Nonunit basis words; w labels the counit-kernel element w - eps(w)."""
        return tuple(w for w in self.h_basis_words(degree) if w)

    def coinvariant_elements(self, degree):
        if degree not in self._coinv:
            self._coinv[degree] = coinvariant_elements(self.comodule, degree)
        return self._coinv[degree]


# -- trivial bundle ------------------------------------------------------------

def make_trivial_bundle(hopf: HopfData, window: int) -> Bundle:
    """A = H with the coproduct as coaction; coinvariants reduce to scalars."""
    axioms = verify_bialgebra_axioms(hopf, min(window, 2))
    bad = [e for e in axioms if e.status == FAIL]
    if bad:
        raise BundleError("Hopf axiom failure: %s" % bad[0].check)
    com = ComoduleData(hopf, hopf.pres, hopf.delta)
    conn = connection_from_antipode(com, window)
    trans = conn.translation_table()
    return Bundle("trivial", com, conn, trans, window)


def default_u1() -> HopfData:
    return HopfData.from_source(U1_SOURCE)


# -- Podles (quantum Hopf fibration) -------------------------------------------

def _parse_coaction_lines(text, apres, hpres):
    table = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        head, rest = stripped.split(None, 1)
        if head != "delta" or "=" not in rest:
            raise PresentationSyntaxError("expected 'delta <sym> = <tensor>'", lineno)
        sym, rhs = rest.split("=", 1)
        table[sym.strip()] = parse_tensor(rhs, [apres, hpres], lineno)
    return table


def make_podles_bundle(coverage: int) -> Bundle:
    """Quantum SU(2) fibered over the standard Podles sphere by the circle."""
    if coverage < 1:
        raise BundleError("coverage must be at least 1")
    hopf = default_u1()
    apres, _ = parse_presentation(SUQ2_SOURCE)
    table = _parse_coaction_lines(PODLES_COACTION, apres, hopf.pres)
    com = ComoduleData(hopf, apres, table)
    aw = apres.word
    seed_pos = TensorElement((apres, apres), {
        (aw("alpha*"), aw("alpha")): RF_ONE,
        (aw("gamma*"), aw("gamma")): RF_ONE,
    })
    seed_neg = TensorElement((apres, apres), {
        (aw("alpha"), aw("alpha*")): RF_ONE,
        (aw("gamma"), aw("gamma*")): rf_q(2),
    })
    conn = connection_from_u1_seeds(com, seed_pos, seed_neg, coverage)
    trans = conn.translation_table()
    return Bundle("podles", com, conn, trans, coverage)


# -- finite bundle ---------------------------------------------------------------

@dataclass
class FiniteAction:
    """A free right action of a finite group on a finite set."""

    npoints: int
    mult: list[list[int]]        # group multiplication table; 0 is the identity
    act: dict[tuple[int, int], int]

    def __post_init__(self):
        m = self.mult
        n = len(m)
        for row in m:
            if len(row) != n or sorted(row) != list(range(n)):
                raise BundleError("group table rows must be permutations")
        for j in range(n):
            if sorted(m[i][j] for i in range(n)) != list(range(n)):
                raise BundleError("group table columns must be permutations")
        for i in range(n):
            if m[0][i] != i or m[i][0] != i:
                raise BundleError("group element 0 must be the identity")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if m[m[a][b]][c] != m[a][m[b][c]]:
                        raise BundleError("group table is not associative")
        for x in range(self.npoints):
            self.act[(x, 0)] = x
        for x in range(self.npoints):
            for g in range(n):
                if (x, g) not in self.act:
                    raise BundleError("action table incomplete at (%d, %d)" % (x, g))
                if not 0 <= self.act[(x, g)] < self.npoints:
                    raise BundleError("action leaves the point set")
        for x in range(self.npoints):
            for g in range(n):
                for h in range(n):
                    if self.act[(self.act[(x, g)], h)] != self.act[(x, m[g][h])]:
                        raise BundleError("action is not associative")
        for x in range(self.npoints):
            for g in range(1, n):
                if self.act[(x, g)] == x:
                    raise BundleError("canonical map not injective")

    @property
    def order(self):
        return len(self.mult)

    def inverse(self, g):
        return next(h for h in range(self.order) if self.mult[g][h] == 0)

    def orbits(self):
        seen = set()
        out = []
        for x in range(self.npoints):
            if x in seen:
                continue
            orbit = sorted({self.act[(x, g)] for g in range(self.order)})
            seen.update(orbit)
            out.append(orbit)
        return out

    @classmethod
    def parse(cls, text) -> "FiniteAction":
        npoints = None
        mult = None
        act = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.split("#", 1)[0].strip()
            if not stripped:
                continue
            parts = stripped.split()
            if parts[0] == "points":
                npoints = int(parts[1])
            elif parts[0] == "group":
                rows = " ".join(parts[1:]).split(";")
                mult = [[int(v) for v in row.split()] for row in rows]
            elif parts[0] == "act":
                if len(parts) != 5 or parts[3] != "->":
                    raise PresentationSyntaxError(
                        "expected 'act <x> <g> -> <y>'", lineno)
                act[(int(parts[1]), int(parts[2]))] = int(parts[4])
            else:
                raise PresentationSyntaxError(
                    "unknown directive %r" % parts[0], lineno)
        if npoints is None or mult is None:
            raise PresentationSyntaxError("missing points or group line", 1)
        return cls(npoints, mult, act)


def z2_on_four_points() -> FiniteAction:
    return FiniteAction(4, [[0, 1], [1, 0]],
                        {(0, 1): 1, (1, 1): 0, (2, 1): 3, (3, 1): 2})


def z3_on_six_points() -> FiniteAction:
    mult = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    act = {}
    for base in (0, 3):
        for i in range(3):
            for g in range(3):
                act[(base + i, g)] = base + (i + g) % 3
    return FiniteAction(6, mult, act)


def _idempotent_presentation(name, symbols) -> Presentation:
    """Functions on a finite set, with one idempotent eliminated by the unit."""
    gens = [Generator(s, 0) for s in symbols]
    relations = []
    for s in symbols:
        for t in symbols:
            rhs = {(s,): 1} if s == t else {}
            relations.append(([s, t], rhs))
    return Presentation.build(name, gens, relations)


def make_finite_bundle(action: FiniteAction) -> Bundle:
    """Functions on the total set, coacted by functions on the group."""
    n, m = action.npoints, action.order
    apres = _idempotent_presentation("FunX", ["e%d" % x for x in range(1, n)])
    hpres = _idempotent_presentation("FunG", ["u%d" % g for g in range(1, m)])

    def elem_e(x):
        if x == 0:
            out = apres.one()
            for y in range(1, n):
                out = out - apres.gen("e%d" % y)
            return out
        return apres.gen("e%d" % x)

    def elem_u(g):
        if g == 0:
            out = hpres.one()
            for h in range(1, m):
                out = out - hpres.gen("u%d" % h)
            return out
        return hpres.gen("u%d" % g)

    delta_h = {}
    eps_h = {}
    anti_h = {}
    for g in range(1, m):
        cop = TensorElement.zero((hpres, hpres))
        for a in range(m):
            for b in range(m):
                if action.mult[a][b] == g:
                    cop = cop + TensorElement.pure([elem_u(a), elem_u(b)])
        delta_h["u%d" % g] = cop
        eps_h["u%d" % g] = RF_ZERO
        anti_h["u%d" % g] = elem_u(action.inverse(g))
    hopf = HopfData(hpres, delta_h, eps_h, anti_h)

    delta_a = {}
    for x in range(1, n):
        act = TensorElement.zero((apres, hpres))
        for g in range(m):
            y = action.act[(x, action.inverse(g))]
            act = act + TensorElement.pure([elem_e(y), elem_u(g)])
        delta_a["e%d" % x] = act
    com = ComoduleData(hopf, apres, delta_a)

    conn = _solve_finite_connection(com)
    trans = _solve_finite_translation(com)
    bundle = Bundle("finite", com, conn, trans, 1, action=action)
    return bundle


def _aa_basis(com):
    words = com.alg.basis_words(1)
    return [(w1, w2) for w1 in words for w2 in words]


def _solve_finite_connection(com) -> StrongConnectionTable:
    """Exact joint solve of the lifted-canonical and colinearity constraints."""
    alg, hopf = com.alg, com.hopf
    hp = hopf.pres
    hwords = [w for w in hp.basis_words(1) if w]
    aa = _aa_basis(com)
    var = {}
    for g in hwords:
        for pair in aa:
            var[(g, pair)] = len(var)
    nvars = len(var)
    one_tensor = TensorElement.unit((alg, alg))

    lc_of_pair = {pair: lifted_canonical(
        com, TensorElement((alg, alg), {pair: RF_ONE})) for pair in aa}
    rows = []
    for g in hwords:
        # lifted-canonical identity: sum x_pair lc(pair) = 1 (x) u_g
        target = TensorElement((alg, hp), {("", g): RF_ONE})
        coords = {}
        for pair in aa:
            for key, c in lc_of_pair[pair].terms.items():
                coords.setdefault(key, {})[var[(g, pair)]] = c
        keys = set(coords) | set(target.terms)
        for key in sorted(keys):
            rows.append((coords.get(key, {}), target.terms.get(key, RF_ZERO)))
        # right colinearity: (id x delta) ell(u_g) = (ell x id) Delta(u_g)
        coords = {}
        const = {}

        def add(key, v, c):
            row = coords.setdefault(key, {})
            s = row.get(v, RF_ZERO) + c
            if s.is_zero:
                row.pop(v, None)
            else:
                row[v] = s

        for pair in aa:
            v = var[(g, pair)]
            img = TensorElement((alg, alg), {pair: RF_ONE}).map_leg(
                1, com.coaction_word, (alg, alg, hp))
            for key, c in img.terms.items():
                add(key, v, c)
        cop = hopf.coproduct_word(g)
        for (h1, h2), c in cop.terms.items():
            if h1 == "":
                for (w1, w2), d in one_tensor.terms.items():
                    key = (w1, w2, h2)
                    const[key] = const.get(key, RF_ZERO) + c * d
            else:
                for pair in aa:
                    add((pair[0], pair[1], h2), var[(h1, pair)], -c)
        keys = set(coords) | set(const)
        for key in sorted(keys):
            rows.append((coords.get(key, {}), const.get(key, RF_ZERO)))
    sol = solve_particular(rows, nvars)
    if sol is None:
        raise BundleError("no strong connection: constraint system inconsistent")
    entries = {"": one_tensor}
    prov = {"": "solve"}
    for g in hwords:
        terms = {}
        for pair in aa:
            c = sol[var[(g, pair)]]
            if not c.is_zero:
                terms[pair] = c
        entries[g] = TensorElement((alg, alg), terms)
        prov[g] = "solve"
    return StrongConnectionTable(com, entries, prov)


def _solve_finite_translation(com) -> TranslationTable:
    """Independent inversion of the canonical map by dense linear solving."""
    alg, hp = com.alg, com.hopf.pres
    aa = _aa_basis(com)
    lc_of_pair = {pair: lifted_canonical(
        com, TensorElement((alg, alg), {pair: RF_ONE})) for pair in aa}
    entries = {}
    for h in hp.basis_words(1):
        target = TensorElement((alg, hp), {("", h): RF_ONE})
        coords = {}
        for i, pair in enumerate(aa):
            for key, c in lc_of_pair[pair].terms.items():
                coords.setdefault(key, {})[i] = c
        rows = []
        keys = set(coords) | set(target.terms)
        for key in sorted(keys):
            rows.append((coords.get(key, {}), target.terms.get(key, RF_ZERO)))
        sol = solve_particular(rows, len(aa))
        if sol is None:
            raise BundleError("canonical map not injective")
        rep = TensorElement((alg, alg), {
            pair: sol[i] for i, pair in enumerate(aa) if not sol[i].is_zero})
        entries[h] = BalancedElement.from_rep(com, rep)
    return TranslationTable(com, entries)


def enumerate_hplus_right_ideals(bundle: Bundle):
    """All right ideals of the counit kernel for a finite-group bundle.

    Every submodule of functions on G is spanned by point masses, so the
    ideals inside the counit kernel correspond to subsets avoiding the
    identity.  Returns (name, generator list) pairs.
    """
    if bundle.kind != "finite":
        raise BundleError("right-ideal enumeration needs the finite bundle")
    hp = bundle.comodule.hopf.pres
    syms = hp.symbols
    out = []
    for r in range(len(syms) + 1):
        for subset in combinations(syms, r):
            gens = [hp.gen(s) for s in subset]
            out.append(("{%s}" % ",".join(subset), gens))
    return out


# -- splitting and principality ---------------------------------------------------

def splitting(bundle: Bundle, a: NCElement) -> TensorElement:
    """Connection-induced section of multiplication, verified to land in B (x) A."""
    com = bundle.comodule
    alg = com.alg
    act = com.coaction(a)
    out = TensorElement.zero((alg, alg))
    for (a0, h), c in act.terms.items():
        ell = bundle.connection.ell_word(h)
        out = out + TensorElement.pure(
            [alg.element({a0: c}, reduce=False), alg.one()]) * ell
    by_second = {}
    for (b, y), c in out.terms.items():
        grp = by_second.setdefault(y, {})
        grp[b] = grp.get(b, RF_ZERO) + c
    for y, terms in by_second.items():
        b = alg.element(terms, reduce=False)
        expected = TensorElement.pure([b, com.hopf.pres.one()])
        if com.coaction(b) != expected:
            raise BundleError("splitting first leg is not coinvariant")
    if multiply_legs(out) != a:
        raise BundleError("splitting does not section the multiplication")
    return out


def verify_principality(bundle: Bundle, degree: int):
    """Canonical-map bijectivity within the window plus the splitting axioms."""
    com = bundle.comodule
    alg, hp = com.alg, com.hopf.pres
    entries = []
    words = bundle.a_basis_words(degree)
    hwords = bundle.h_basis_words()

    fails = []
    for a in words:
        for h in hwords:
            y = TensorElement((alg, hp), {(a, h): RF_ONE})
            try:
                canonical_inverse(bundle.translation, y)
            except PresentationError as err:
                fails.append("%s (x) %s: %s" % (alg.word_str(a), hp.word_str(h), err))
    entries.append(combine("principality", "canonical-right-inverse",
                           "galois.bijectivity", fails,
                           total=len(words) * len(hwords)))

    fails = []
    for u in words:
        for v in words:
            x = TensorElement((alg, alg), {(u, v): RF_ONE})
            z = lifted_canonical(com, x)
            try:
                back = canonical_inverse(bundle.translation, z)
            except PresentationError as err:
                fails.append("%s (x) %s: %s" % (alg.word_str(u), alg.word_str(v), err))
                continue
            if multiply_legs(back.rep) != multiply_legs(x):
                fails.append("%s (x) %s" % (alg.word_str(u), alg.word_str(v)))
    entries.append(combine("principality", "canonical-left-inverse",
                           "galois.bijectivity", fails, total=len(words) ** 2))

    sec_fails, colin_fails = [], []
    sections = {}
    for w in words:
        a = alg.element({w: RF_ONE}, reduce=False)
        try:
            s = splitting(bundle, a)
        except BundleError as err:
            sec_fails.append("%s: %s" % (alg.word_str(w), err))
            continue
        sections[w] = s
        lhs = s.map_leg(1, com.coaction_word, (alg, alg, hp))
        rhs = TensorElement.zero((alg, alg, hp))
        for (a0, h), c in com.coaction_word(w).terms.items():
            s0 = splitting(bundle, alg.element({a0: RF_ONE}, reduce=False))
            for (b, y), d in s0.terms.items():
                rhs = rhs + TensorElement((alg, alg, hp), {(b, y, h): c * d})
        if lhs != rhs:
            colin_fails.append(alg.word_str(w))
    entries.append(combine("principality", "splitting-sections-multiplication",
                           "principal.splitting-section", sec_fails,
                           total=len(words)))
    entries.append(combine("principality", "splitting-right-colinearity",
                           "principal.splitting-colinearity", colin_fails,
                           total=len(words)))

    fails = []
    coinv = bundle.coinvariant_elements(min(degree, 2))
    for b in coinv:
        for w in words:
            a = alg.element({w: RF_ONE}, reduce=False)
            if w not in sections:
                continue
            lhs = splitting(bundle, b * a)
            rhs = TensorElement.pure([b, alg.one()]) * sections[w]
            if lhs != rhs:
                fails.append("%s | %s" % (element_str(b), alg.word_str(w)))
    entries.append(combine("principality", "splitting-left-linearity",
                           "principal.splitting-base-linearity", fails,
                           total=len(coinv) * len(words)))
    entries.append(ReportEntry(
        "principality", "splitting-construction", "principal.splitting-choice",
        NOT_EVALUATED,
        "splitting is the strong-connection-induced section; a direct "
        "free-decomposition of the total algebra is not used"))
    return entries
