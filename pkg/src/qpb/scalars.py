"""Exact arithmetic in Q(q), the field of rational functions in one variable.

Polynomials are little-endian tuples of ints with no trailing zeros; () is
the zero polynomial.  RationalFunction keeps a fully reduced numerator /
denominator pair, so equality of values is equality of the stored tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


Poly = tuple[int, ...]

P_ZERO: Poly = ()
P_ONE: Poly = (1,)


def p_norm(coeffs) -> Poly:
    """Strip trailing zeros and return a tuple."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def p_add(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    cs = list(f)
    for i, c in enumerate(g):
        cs[i] += c
    return p_norm(cs)


def p_neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def p_sub(f: Poly, g: Poly) -> Poly:
    return p_add(f, p_neg(g))


def p_mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return P_ZERO
    cs = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                cs[i + j] += a * b
    return p_norm(cs)


def p_mul_int(f: Poly, n: int) -> Poly:
    if n == 0:
        return P_ZERO
    return tuple(c * n for c in f)


def p_content(f: Poly) -> int:
    c = 0
    for a in f:
        c = gcd(c, a)
    return c


def p_primitive(f: Poly) -> Poly:
    """Divide out the content; normalize the leading coefficient to positive."""
    if not f:
        return P_ZERO
    c = p_content(f)
    if f[-1] < 0:
        c = -c
    return tuple(a // c for a in f)


def p_exact_div(f: Poly, g: Poly) -> Poly:
    """Exact division f / g; raises if g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by zero in scalar field")
    if not f:
        return P_ZERO
    rem = [Fraction(c) for c in f]
    dg = len(g) - 1
    lead = Fraction(g[-1])
    quo = [Fraction(0)] * (len(f) - len(g) + 1)
    for i in range(len(f) - 1, dg - 1, -1):
        c = rem[i]
        if c:
            k = c / lead
            quo[i - dg] = k
            for j, b in enumerate(g):
                rem[i - dg + j] -= k * b
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in quo:
        if c.denominator != 1:
            raise ArithmeticError("inexact polynomial division")
        out.append(int(c))
    return p_norm(out)


def _pseudo_rem(f: Poly, g: Poly) -> Poly:
    """Pseudo-remainder of f by g over the integers."""
    dg = len(g) - 1
    lead = g[-1]
    rem = list(f)
    while len(rem) - 1 >= dg and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg:
            break
        c = rem[-1]
        shift = len(rem) - 1 - dg
        rem = [a * lead for a in rem]
        for j, b in enumerate(g):
            rem[shift + j] -= c * b
        rem.pop()
    return p_norm(rem)


def p_gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor in Z[q] (content included, positive leading)."""
    if not f:
        return _possign(g)
    if not g:
        return _possign(f)
    cont = gcd(p_content(f), p_content(g))
    a, b = p_primitive(f), p_primitive(g)
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, p_primitive(r)
    return p_mul_int(a, cont)


def _possign(f: Poly) -> Poly:
    return p_neg(f) if f and f[-1] < 0 else f


def p_str(f: Poly, var: str = "q") -> str:
    """Render a polynomial in the expression syntax (descending powers)."""
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if i == 0:
            body = str(c)
        elif i == 1:
            body = var if c == 1 else "%d %s" % (c, var)
        else:
            body = "%s^%d" % (var, i) if c == 1 else "%d %s^%d" % (c, var, i)
        parts.append((sign, body))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


class RationalFunction:
    """Element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = P_ONE, _reduced: bool = False):
        if not _reduced:
            num, den = _reduce(p_norm(num), p_norm(den))
        self.num = num
        self.den = den

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            if self.den == P_ONE:
                return RationalFunction(p_add(self.num, other.num), P_ONE,
                                        _reduced=True)
            return RationalFunction(p_add(self.num, other.num), self.den)
        return RationalFunction(
            p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(p_neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return RF_ZERO
        if self.den == P_ONE and other.den == P_ONE:
            return RationalFunction(p_mul(self.num, other.num), P_ONE,
                                    _reduced=True)
        return RationalFunction(p_mul(self.num, other.num),
                                p_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in scalar field")
        return RationalFunction(p_mul(self.num, other.den),
                                p_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self):
        return RF_ONE / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_one(self) -> bool:
        return self.num == P_ONE and self.den == P_ONE

    def __repr__(self):
        return "RationalFunction(%s)" % rf_str(self)


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("division by zero in scalar field")
    if not num:
        return P_ZERO, P_ONE
    if den == P_ONE:
        return num, den
    if sum(1 for c in den if c) == 1:
        # monomial denominator c q^k: cancel the q-valuation and the content
        k = len(den) - 1
        c = den[-1]
        val = 0
        while num[val] == 0:
            val += 1
        j = min(val, k)
        if j:
            num = num[j:]
            k -= j
        g = gcd(p_content(num), abs(c))
        if c < 0:
            g = -g
        if g != 1:
            num = tuple(a // g for a in num)
            c //= g
        if k == 0 and c == 1:
            return num, P_ONE
        return num, (0,) * k + (c,)
    g = p_gcd(num, den)
    if g != P_ONE:
        num = p_exact_div(num, g)
        den = p_exact_div(den, g)
    if den[-1] < 0:
        num, den = p_neg(num), p_neg(den)
    return num, den


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return rf_int(x)
    return NotImplemented


def rf_int(n: int) -> RationalFunction:
    if n == 0:
        return RF_ZERO
    if n == 1:
        return RF_ONE
    return RationalFunction((n,), P_ONE, _reduced=True)


def rf_q(power: int = 1) -> RationalFunction:
    """The monomial q^power, with negative powers allowed."""
    if power >= 0:
        return RationalFunction((0,) * power + (1,), P_ONE, _reduced=True)
    return RationalFunction(P_ONE, (0,) * (-power) + (1,), _reduced=True)


def rf_str(x: RationalFunction) -> str:
    """Canonical display form, re-parseable by the expression parser."""
    if x.den == P_ONE:
        return p_str(x.num)
    num = p_str(x.num)
    den = p_str(x.den)
    if sum(1 for c in x.num if c) > 1 or x.num and x.num[-1] < 0:
        num = "(%s)" % num
    if sum(1 for c in x.den if c) > 1:
        den = "(%s)" % den
    return "%s/%s" % (num, den)


def rf_factor_str(x: RationalFunction) -> str:
    """Display form safe to use as one factor of a juxtaposition product."""
    s = rf_str(x)
    if x.den == P_ONE and (sum(1 for c in x.num if c) > 1 or
                           (x.num and x.num[-1] < 0)):
        return "(%s)" % s
    return s


RF_ZERO = RationalFunction(P_ZERO, P_ONE, _reduced=True)
RF_ONE = RationalFunction(P_ONE, P_ONE, _reduced=True)
RF_Q = rf_q(1)
