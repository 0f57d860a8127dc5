"""Exact linear algebra over Q(q): canonical echelon bases of labelled subspaces.

Vectors are sparse dicts {column index: RationalFunction}; columns are indices
into an ordered tuple of opaque ambient labels supplied by the caller.  All
results are reduced row echelon with pivot 1, so equal subspaces produce
identical rows.
"""

from __future__ import annotations

from .scalars import RF_ONE, RF_ZERO, RationalFunction

Vec = dict[int, RationalFunction]


class AmbientMismatch(ValueError):
    pass


class Echelon:
    """Incremental reduced row echelon form over Q(q).

    Intermediate rows are rescaled to primitive integer-polynomial vectors
    before insertion (fraction control); pivots are normalized to 1 on the
    way in and kept reduced against each other.
    """

    def __init__(self):
        self.pivots: list[int] = []       # pivot column per row, ascending
        self.rows: list[Vec] = []

    def reduce(self, v: Vec) -> Vec:
        """Return v reduced modulo the current row space."""
        v = {j: c for j, c in v.items() if not c.is_zero}
        for piv, row in zip(self.pivots, self.rows):
            c = v.get(piv)
            if c is not None and not c.is_zero:
                _axpy(v, -c, row)
        return v

    def reduce_with_coeffs(self, v: Vec):
        """Reduce v, also returning the coefficients over the stored rows."""
        v = {j: c for j, c in v.items() if not c.is_zero}
        coeffs = []
        for piv, row in zip(self.pivots, self.rows):
            c = v.get(piv, RF_ZERO)
            coeffs.append(c)
            if not c.is_zero:
                _axpy(v, -c, row)
        return v, coeffs

    def insert(self, v: Vec) -> bool:
        """Reduce v and add it to the basis; True if the dimension grew."""
        v = self.reduce(v)
        if not v:
            return False
        v = _primitive(v)
        piv = min(v)
        lead = v[piv]
        if not lead.is_one:
            inv = lead.inverse()
            v = {j: c * inv for j, c in v.items()}
        for row in self.rows:
            c = row.get(piv)
            if c is not None and not c.is_zero:
                _axpy(row, -c, v)
        k = 0
        while k < len(self.pivots) and self.pivots[k] < piv:
            k += 1
        self.pivots.insert(k, piv)
        self.rows.insert(k, v)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def _axpy(v: Vec, c: RationalFunction, row: Vec):
    """v += c * row in place, dropping exact zeros."""
    for j, a in row.items():
        s = v.get(j, RF_ZERO) + c * a
        if s.is_zero:
            v.pop(j, None)
        else:
            v[j] = s


def _primitive(v: Vec) -> Vec:
    """Clear denominators and content: smallest integer-polynomial multiple."""
    from .scalars import P_ONE, RationalFunction as RF, p_gcd, p_mul

    den = P_ONE
    for c in v.values():
        den = p_mul(den, c.den)
    if den == P_ONE:
        nums = list(v.values())
    else:
        scale = RF(den)
        v = {j: c * scale for j, c in v.items()}
        nums = list(v.values())
    g = ()
    for c in nums:
        g = p_gcd(g, c.num)
    if g and g != P_ONE:
        inv = RF(P_ONE, g)
        v = {j: c * inv for j, c in v.items()}
    return v


class SubspaceBasis:
    """Canonical echelon basis of a subspace of a labelled ambient space."""

    def __init__(self, ambient: tuple, rows: tuple[tuple, ...]):
        self.ambient = ambient
        self.rows = rows            # each row: tuple of (col, coeff) pairs

    @property
    def dim(self) -> int:
        return len(self.rows)

    def row_vecs(self) -> list[Vec]:
        return [dict(r) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis)
                and self.ambient == other.ambient and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return "SubspaceBasis(dim=%d, ambient=%d)" % (self.dim, len(self.ambient))


def _freeze(ech: Echelon, ambient: tuple) -> SubspaceBasis:
    rows = tuple(tuple(sorted(r.items())) for r in ech.rows)
    return SubspaceBasis(ambient, rows)


def _check_ambient(S: SubspaceBasis, T: SubspaceBasis):
    if S.ambient != T.ambient:
        raise AmbientMismatch("subspaces live over different ambient bases")


def span(vectors, ambient: tuple) -> SubspaceBasis:
    """Canonical echelon basis of the span of sparse vectors over ambient."""
    n = len(ambient)
    ech = Echelon()
    for v in vectors:
        for j in v:
            if not 0 <= j < n:
                raise AmbientMismatch("vector index %r outside ambient" % (j,))
        ech.insert(v)
    return _freeze(ech, ambient)


def _echelon_of(S: SubspaceBasis) -> Echelon:
    ech = Echelon()
    ech.pivots = [r[0][0] for r in S.rows]
    ech.rows = [dict(r) for r in S.rows]
    return ech


def membership(v: Vec, S: SubspaceBasis):
    """Expansion coefficients of v over S's rows, or None if v is outside."""
    for j in v:
        if not 0 <= j < len(S.ambient):
            raise AmbientMismatch("vector index %r outside ambient" % (j,))
    ech = _echelon_of(S)
    rem, coeffs = ech.reduce_with_coeffs(v)
    if rem:
        return None
    return coeffs


def contains(S: SubspaceBasis, vectors) -> bool:
    ech = _echelon_of(S)
    return all(not ech.reduce(v) for v in vectors)


def subspace_sum(S: SubspaceBasis, T: SubspaceBasis) -> SubspaceBasis:
    _check_ambient(S, T)
    return span(S.row_vecs() + T.row_vecs(), S.ambient)


def subspace_intersection(S: SubspaceBasis, T: SubspaceBasis) -> SubspaceBasis:
    """Zassenhaus: echelonize [v|v] for v in S and [w|0] for w in T."""
    _check_ambient(S, T)
    n = len(S.ambient)
    ech = Echelon()
    for v in S.row_vecs():
        w = dict(v)
        w.update({j + n: c for j, c in v.items()})
        ech.insert(w)
    for v in T.row_vecs():
        ech.insert(dict(v))
    out = Echelon()
    for piv, row in zip(ech.pivots, ech.rows):
        if piv >= n:
            out.insert({j - n: c for j, c in row.items()})
    return _freeze(out, S.ambient)


def quotient_reps(S: SubspaceBasis, T: SubspaceBasis) -> SubspaceBasis:
    """Coset representatives of S modulo a subspace T of S (echelon extension)."""
    _check_ambient(S, T)
    ech = _echelon_of(T)
    out = Echelon()
    for v in S.row_vecs():
        r = ech.reduce(v)
        if r and ech.insert(dict(r)):
            out.insert(r)
    return _freeze(out, S.ambient)


def kernel_with_tail(rows: list[Vec], split: int) -> list[Vec]:
    """Kernel combinations of labelled rows.

    Each input row is [image | tag] with image columns < split and tag columns
    >= split.  Echelonizing and collecting rows whose image part vanished
    yields, in the tag part, a basis of the combinations that kill the image.
    """
    ech = Echelon()
    for v in rows:
        ech.insert(dict(v))
    out = []
    for piv, row in zip(ech.pivots, ech.rows):
        if piv >= split:
            out.append({j - split: c for j, c in row.items()})
    return out


def preimage_basis(images: list[Vec], target: SubspaceBasis) -> list[Vec]:
    """Coefficient vectors c with sum_i c_i * images_i inside target's span."""
    tech = _echelon_of(target)
    n = len(target.ambient)
    rows = []
    for i, img in enumerate(images):
        v = tech.reduce(img)
        v[n + i] = RF_ONE
        rows.append(v)
    return kernel_with_tail(rows, n)


def solve_particular(rows: list[tuple[Vec, RationalFunction]], nvars: int):
    """One exact solution of a sparse linear system, or None if inconsistent.

    rows are (coefficients, rhs) pairs for equations sum_j c_j x_j = rhs.
    Free variables are set to zero, so the solution is deterministic for a
    fixed row order.
    """
    ech = Echelon()
    for coeffs, rhs in rows:
        v = dict(coeffs)
        if not rhs.is_zero:
            v[nvars] = rhs
        ech.insert(v)
    sol = [RF_ZERO] * nvars
    for piv, row in reversed(list(zip(ech.pivots, ech.rows))):
        if piv == nvars:
            return None     # a row reduced to 0 = nonzero
        x = row.get(nvars, RF_ZERO)
        for j, c in row.items():
            if j != piv and j != nvars:
                x = x - c * sol[j]
        sol[piv] = x
    return sol
