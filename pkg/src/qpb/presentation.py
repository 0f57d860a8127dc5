"""Presented noncommutative algebras: rewriting, tensors, expression syntax.

Generators are mapped to single internal characters in listing order, so the
degree-lexicographic term order is (len(word), word) on internal strings.
Normal forms are computed by exhaustive leftmost rewriting with a per-call
step budget and are cached per word.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

from .scalars import (
    RF_ONE, RF_ZERO, RationalFunction, rf_factor_str, rf_int, rf_q,
)

DEFAULT_BUDGET = 10 ** 6
BUDGET_ENV = "QPB_REWRITE_BUDGET"

RESERVED = {"q", "(x)", "(", ")", "^", "/", "+", "-", "=", "0", "1"}


class PresentationError(Exception):
    pass


class PresentationSyntaxError(PresentationError):
    def __init__(self, message, line, col=None):
        where = "line %d" % line if col is None else "line %d, col %d" % (line, col)
        super().__init__("%s (%s)" % (message, where))
        self.line = line
        self.col = col


class UnorientableRelation(PresentationError):
    pass


class RewritingBudgetExceeded(PresentationError):
    pass


class ConfluenceRequired(PresentationError):
    pass


@dataclass(frozen=True)
class Generator:
    symbol: str
    charge: int = 0


@dataclass(frozen=True)
class Rule:
    lhs: str                                  # internal word
    rhs: tuple[tuple[str, RationalFunction], ...]


def _acc(d, key, c):
    s = d.get(key, RF_ZERO) + c
    if s.is_zero:
        d.pop(key, None)
    else:
        d[key] = s


class Presentation:
    """A finitely presented algebra with an oriented rewriting system."""

    def __init__(self, name, gens, rules, warnings=()):
        self.name = name
        self.gens = tuple(gens)
        self.rules = tuple(rules)
        self.warnings = list(warnings)
        self._char = {g.symbol: chr(33 + i) for i, g in enumerate(self.gens)}
        self._sym = {chr(33 + i): g.symbol for i, g in enumerate(self.gens)}
        self._charge = {chr(33 + i): g.charge for i, g in enumerate(self.gens)}
        self._nf_cache: dict[str, dict[str, RationalFunction]] = {}
        self._steps = 0
        self._budget = int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))
        self._max_lhs = max((len(r.lhs) for r in self.rules), default=0)
        self._lhs_first = {r.lhs[0] for r in self.rules if r.lhs}
        self.confluence_report = None

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, name, gens, relations, warnings=()):
        """Assemble a presentation from (lhs symbol list, rhs term dict) pairs.

        rhs term dicts map symbol tuples to coefficients; orientation under
        the induced term order is checked.
        """
        gens = [g if isinstance(g, Generator) else Generator(*g) for g in gens]
        seen = set()
        for g in gens:
            if g.symbol in seen:
                raise PresentationError("duplicate generator name: %s" % g.symbol)
            if g.symbol in RESERVED:
                raise PresentationError("reserved symbol: %s" % g.symbol)
            seen.add(g.symbol)
        char = {g.symbol: chr(33 + i) for i, g in enumerate(gens)}
        inv = {v: k for k, v in char.items()}
        rules = []
        warns = list(warnings)
        for lhs_syms, rhs_terms in relations:
            lhs = "".join(char[s] for s in lhs_syms)
            rhs = {}
            for syms, c in rhs_terms.items():
                if not isinstance(c, RationalFunction):
                    c = rf_int(c)
                if not c.is_zero:
                    _acc(rhs, "".join(char[s] for s in syms), c)
            key = (len(lhs), lhs)
            for w in rhs:
                if (len(w), w) >= key:
                    raise UnorientableRelation(
                        "unorientable relation: %s does not exceed %s"
                        % (" ".join(lhs_syms),
                           " ".join(inv[ch] for ch in w) or "1"))
            rules.append(Rule(lhs, tuple(sorted(rhs.items()))))
        pres = cls(name, gens, rules, warns)
        pres._flag_redundant_and_nested()
        return pres

    def _flag_redundant_and_nested(self):
        for i, r in enumerate(self.rules):
            for j, s in enumerate(self.rules):
                if i != j and r.lhs in s.lhs:
                    self.warnings.append(
                        "rule %d leading word is a subword of rule %d" % (i, j))
        for i, r in enumerate(self.rules):
            others = [s for j, s in enumerate(self.rules) if j != i]
            sub = Presentation(self.name, self.gens, others)
            diff = dict(r.rhs)
            _acc(diff, r.lhs, -RF_ONE)
            if not sub.nf_terms(diff):
                self.warnings.append("redundant relation: rule %d" % i)

    # -- words -------------------------------------------------------------

    def word(self, *symbols) -> str:
        return "".join(self._char[s] for s in symbols)

    def word_str(self, w: str) -> str:
        return " ".join(self._sym[ch] for ch in w) if w else "1"

    def word_key(self, w: str):
        return (len(w), w)

    def charge_of_word(self, w: str) -> int:
        return sum(self._charge[ch] for ch in w)

    @property
    def symbols(self):
        return tuple(g.symbol for g in self.gens)

    # -- elements ----------------------------------------------------------

    def element(self, terms=None, reduce=True) -> "NCElement":
        t = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, RationalFunction):
                    c = rf_int(c)
                if not c.is_zero:
                    _acc(t, w, c)
        if reduce:
            t = self.nf_terms(t)
        return NCElement(self, t)

    def zero(self) -> "NCElement":
        return NCElement(self, {})

    def one(self, coeff=RF_ONE) -> "NCElement":
        return self.element({"": coeff}, reduce=False)

    def gen(self, symbol) -> "NCElement":
        return self.element({self._char[symbol]: RF_ONE})

    # -- rewriting ---------------------------------------------------------

    def _find_redex(self, w: str):
        rules = self.rules
        first = self._lhs_first
        for i in range(len(w)):
            if w[i] not in first:
                continue
            rest = w[i:]
            for rule in rules:
                if rest.startswith(rule.lhs):
                    return i, rule
        return None

    def nf_word(self, w: str) -> dict[str, RationalFunction]:
        cache = self._nf_cache
        hit = cache.get(w)
        if hit is not None:
            return hit
        pending = [w]
        budget = self._budget
        while pending:
            u = pending[-1]
            if u in cache:
                pending.pop()
                continue
            red = self._find_redex(u)
            if red is None:
                cache[u] = {u: RF_ONE}
                pending.pop()
                continue
            i, rule = red
            pre, suf = u[:i], u[i + len(rule.lhs):]
            self._steps += 1
            if self._steps > budget:
                raise RewritingBudgetExceeded("rewriting budget exceeded")
            children = [(pre + rw + suf, rc) for rw, rc in rule.rhs]
            missing = [cw for cw, _ in children if cw not in cache]
            if missing:
                pending.extend(missing)
                continue
            out = {}
            for cw, rc in children:
                for fw, fc in cache[cw].items():
                    _acc(out, fw, rc * fc)
            cache[u] = out
            pending.pop()
        return cache[w]

    def nf_terms(self, terms) -> dict[str, RationalFunction]:
        self._steps = 0
        out = {}
        for w, c in terms.items():
            if c.is_zero:
                continue
            for fw, fc in self.nf_word(w).items():
                _acc(out, fw, c * fc)
        return out

    # -- confluence and bases ----------------------------------------------

    def check_local_confluence(self, degree) -> "ConfluenceReport":
        """Resolve every overlap/inclusion ambiguity of total length <= degree."""
        if degree < self._max_lhs:
            raise PresentationError("confluence degree below max rule length")
        overlaps = []
        for i, r in enumerate(self.rules):
            for j, s in enumerate(self.rules):
                for k in range(1, min(len(r.lhs), len(s.lhs))):
                    if r.lhs.endswith(s.lhs[:k]):
                        w = r.lhs + s.lhs[k:]
                        if len(w) <= degree:
                            overlaps.append((w, i, 0, j, len(r.lhs) - k))
                if i != j and len(r.lhs) <= degree:
                    start = 0
                    while True:
                        p = r.lhs.find(s.lhs, start)
                        if p < 0:
                            break
                        if not (p == 0 and len(s.lhs) == len(r.lhs)):
                            overlaps.append((r.lhs, i, 0, j, p))
                        start = p + 1
        results = []
        confluent = True
        for w, i, pi, j, pj in overlaps:
            a = self._one_step(w, self.rules[i], pi)
            b = self._one_step(w, self.rules[j], pj)
            na = self.nf_terms(a)
            nb = self.nf_terms(b)
            ok = na == nb
            confluent = confluent and ok
            results.append(OverlapResult(w, i, j, ok, na, nb))
        report = ConfluenceReport(degree, confluent, results)
        if self.confluence_report is None or degree >= self.confluence_report.degree:
            self.confluence_report = report
        return report

    def _one_step(self, w, rule, pos):
        pre, suf = w[:pos], w[pos + len(rule.lhs):]
        out = {}
        for rw, rc in rule.rhs:
            _acc(out, pre + rw + suf, rc)
        return out

    def ensure_confluent(self):
        if self.confluence_report is None:
            full = max(2 * self._max_lhs - 1, self._max_lhs, 1)
            self.check_local_confluence(full)
        if not self.confluence_report.confluent:
            raise ConfluenceRequired("basis requires confluence")

    def basis_words(self, degree) -> tuple[str, ...]:
        """All irreducible words of length <= degree, in term order."""
        self.ensure_confluent()
        alphabet = [chr(33 + i) for i in range(len(self.gens))]
        lhs = [r.lhs for r in self.rules]
        out = [""]
        layer = [""]
        for _ in range(degree):
            nxt = []
            for w in layer:
                for ch in alphabet:
                    u = w + ch
                    tail_reducible = any(
                        u.endswith(l) for l in lhs if len(l) <= len(u))
                    if not tail_reducible:
                        nxt.append(u)
            out.extend(nxt)
            layer = nxt
        return tuple(sorted(out, key=self.word_key))

    def __repr__(self):
        return "Presentation(%s, %d gens, %d rules)" % (
            self.name, len(self.gens), len(self.rules))


@dataclass
class OverlapResult:
    word: str
    rule_a: int
    rule_b: int
    resolved: bool
    nf_a: dict
    nf_b: dict


@dataclass
class ConfluenceReport:
    degree: int
    confluent: bool
    overlaps: list

    @property
    def unresolved(self):
        return [o for o in self.overlaps if not o.resolved]


class NCElement:
    """Normal-form noncommutative polynomial over a presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = terms

    @property
    def is_zero(self):
        return not self.terms

    def length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def charge(self):
        """Common charge of all terms, or None when mixed; 0 for zero."""
        charges = {self.pres.charge_of_word(w) for w in self.terms}
        if not charges:
            return 0
        if len(charges) == 1:
            return charges.pop()
        return None

    def coeff(self, w) -> RationalFunction:
        return self.terms.get(w, RF_ZERO)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NCElement(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return NCElement(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, RationalFunction)):
            return self.scale(other)
        other = self._coerce(other)
        pres = self.pres
        out = {}
        pres._steps = 0
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for fw, fc in pres.nf_word(w1 + w2).items():
                    _acc(out, fw, c * fc)
        return NCElement(pres, out)

    def __rmul__(self, other):
        if isinstance(other, (int, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        if not isinstance(c, RationalFunction):
            c = rf_int(c)
        if c.is_zero:
            return NCElement(self.pres, {})
        return NCElement(self.pres, {w: c * v for w, v in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, NCElement):
            if other.pres is not self.pres:
                raise PresentationError("elements of different presentations")
            return other
        if isinstance(other, (int, RationalFunction)):
            return self.pres.one(other if isinstance(other, RationalFunction)
                                 else rf_int(other))
        raise TypeError(type(other))

    def __eq__(self, other):
        if isinstance(other, (int, RationalFunction)):
            other = self._coerce(other)
        return isinstance(other, NCElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return element_str(self)

    def __repr__(self):
        return "<%s: %s>" % (self.pres.name, element_str(self))


class TensorElement:
    """Sparse tensor with legs in (possibly different) presentations."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs, terms, reduce=False):
        self.legs = tuple(legs)
        if reduce:
            terms = self._reduce(terms)
        self.terms = terms

    def _reduce(self, terms):
        out = {}
        for words, c in terms.items():
            if c.is_zero:
                continue
            parts = [leg.nf_word(w) for leg, w in zip(self.legs, words)]
            self._expand(out, parts, c)
        return out

    @staticmethod
    def _expand(out, parts, c):
        keys = [()]
        coeffs = [c]
        for part in parts:
            nkeys, ncoeffs = [], []
            for k, kc in zip(keys, coeffs):
                for w, wc in part.items():
                    nkeys.append(k + (w,))
                    ncoeffs.append(kc * wc)
            keys, coeffs = nkeys, ncoeffs
        for k, kc in zip(keys, coeffs):
            _acc(out, k, kc)

    @classmethod
    def zero(cls, legs):
        return cls(legs, {})

    @classmethod
    def unit(cls, legs, coeff=RF_ONE):
        return cls(legs, {("",) * len(legs): coeff} if not coeff.is_zero else {})

    @classmethod
    def pure(cls, factors):
        """Tensor product of NCElements, one per leg."""
        legs = tuple(f.pres for f in factors)
        out = {}
        cls._expand(out, [f.terms for f in factors], RF_ONE)
        return cls(legs, out)

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(self.legs, out)

    def __neg__(self):
        return TensorElement(self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, RationalFunction):
            c = rf_int(c)
        if c.is_zero:
            return TensorElement(self.legs, {})
        return TensorElement(self.legs, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product (both factors over the same legs)."""
        if isinstance(other, (int, RationalFunction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                parts = [leg.nf_word(w1 + w2)
                         for leg, w1, w2 in zip(self.legs, k1, k2)]
                self._expand(out, parts, c1 * c2)
        return TensorElement(self.legs, out)

    def __rmul__(self, other):
        if isinstance(other, (int, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def _check(self, other):
        if not isinstance(other, TensorElement) or other.legs != self.legs:
            raise PresentationError("tensor legs mismatch")

    def mul_into(self, i):
        """Multiply legs i and i+1 (same presentation) into one leg."""
        legs = self.legs[:i] + self.legs[i + 1:]
        pres = self.legs[i]
        out = {}
        for k, c in self.terms.items():
            prod = pres.nf_word(k[i] + k[i + 1])
            for w, wc in prod.items():
                _acc(out, k[:i] + (w,) + k[i + 2:], c * wc)
        return TensorElement(legs, out)

    def map_leg(self, i, fn, new_legs=None):
        """Apply a linear map (word -> NCElement or TensorElement) to leg i."""
        out = {}
        legs = None
        for k, c in self.terms.items():
            val = fn(k[i])
            if isinstance(val, NCElement):
                val = TensorElement.pure([val])
            if legs is None:
                legs = self.legs[:i] + val.legs + self.legs[i + 1:]
            for vk, vc in val.terms.items():
                _acc(out, k[:i] + vk + k[i + 1:], c * vc)
        if legs is None:
            legs = new_legs if new_legs is not None else self.legs
        return TensorElement(legs, out)

    def leg_words(self, i):
        return {k[i] for k in self.terms}

    def max_leg_length(self, i):
        return max((len(k[i]) for k in self.terms), default=0)

    def __eq__(self, other):
        return (isinstance(other, TensorElement)
                and self.legs == other.legs and self.terms == other.terms)

    def __hash__(self):
        return hash((self.legs, frozenset(self.terms.items())))

    def __str__(self):
        return tensor_str(self)

    def __repr__(self):
        return "<tensor: %s>" % tensor_str(self)


# -- printing ---------------------------------------------------------------

def _term_str(coeff, body):
    if body == "":
        return rf_factor_str(coeff)
    if coeff.is_one:
        return body
    if (-coeff).is_one:
        return "- " + body
    return "%s %s" % (rf_factor_str(coeff), body)


def _joined(parts):
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("- "):
            out += " - " + p[2:]
        else:
            out += " + " + p
    return out


def element_str(x: NCElement) -> str:
    parts = []
    for w in sorted(x.terms, key=x.pres.word_key):
        parts.append(_term_str(x.terms[w], x.pres.word_str(w) if w else ""))
    return _joined(parts)


def tensor_str(x: TensorElement) -> str:
    parts = []
    for k in sorted(x.terms, key=lambda k: tuple(p.word_key(w) for p, w in zip(x.legs, k))):
        body = " (x) ".join(p.word_str(w) for p, w in zip(x.legs, k))
        parts.append(_term_str(x.terms[k], body))
    return _joined(parts)


# -- expression parsing -------------------------------------------------------

_TOKEN = re.compile(r"\(x\)|[()^/+\-=]|[^\s()^/+\-=]+")


def tokenize(text, line=1):
    out = []
    for m in _TOKEN.finditer(text):
        out.append((m.group(0), line, m.start() + 1))
    return out


class _ExprParser:
    """Recursive-descent parser for (tensor) expressions over presentations."""

    def __init__(self, tokens, legs):
        self.toks = tokens
        self.pos = 0
        self.legs = legs

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def advance(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def error(self, msg):
        if self.pos < len(self.toks):
            _, line, col = self.toks[self.pos]
        elif self.toks:
            _, line, col = self.toks[-1]
        else:
            line, col = 1, 1
        raise PresentationSyntaxError(msg, line, col)

    def parse_tensor(self) -> TensorElement:
        value = self.parse_tensor_sum()
        if self.pos != len(self.toks):
            self.error("unexpected token %r" % self.peek())
        return value

    def parse_tensor_sum(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        total = self.parse_tensor_term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.advance()[0]
            term = self.parse_tensor_term()
            total = total + term.scale(-1 if op == "-" else 1)
        return total

    def parse_tensor_term(self) -> TensorElement:
        factors = [self.parse_product(self.legs[0])]
        leg = 0
        while self.peek() == "(x)":
            self.advance()
            leg += 1
            if leg >= len(self.legs):
                self.error("too many tensor legs")
            factors.append(self.parse_product(self.legs[leg]))
        if len(factors) != len(self.legs):
            self.error("expected %d tensor legs, got %d"
                       % (len(self.legs), len(factors)))
        return TensorElement.pure(factors)

    def parse_element(self) -> NCElement:
        value = self.parse_sum(self.legs[0])
        if self.pos != len(self.toks):
            self.error("unexpected token %r" % self.peek())
        return value

    def parse_sum(self, pres):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        total = self.parse_product(pres).scale(sign)
        while self.peek() in ("+", "-"):
            op = self.advance()[0]
            term = self.parse_product(pres)
            total = total + term.scale(-1 if op == "-" else 1)
        return total

    def parse_product(self, pres):
        value = self.parse_factor(pres)
        while True:
            nxt = self.peek()
            if nxt is None or nxt in ("+", "-", ")", "(x)", "="):
                return value
            value = value * self.parse_factor(pres)

    def parse_factor(self, pres):
        value = self.parse_atom(pres)
        while True:
            nxt = self.peek()
            if nxt == "^":
                self.advance()
                value = self._power(value, self.parse_signed_int())
            elif nxt == "/":
                self.advance()
                div = self.parse_atom(pres)
                if self.peek() == "^":
                    self.advance()
                    div = self._power(div, self.parse_signed_int())
                value = value * self._invert(div)
            else:
                return value

    def _power(self, value, n):
        if n < 0:
            return self._power(self._invert(value), -n)
        pres = value.pres
        out = pres.one()
        for _ in range(n):
            out = out * value
        return out

    def _invert(self, value):
        c = _as_scalar(value)
        if c is None or c.is_zero:
            self.error("division requires a nonzero scalar")
        return value.pres.one(c.inverse())

    def parse_signed_int(self):
        sign = 1
        if self.peek() == "-":
            self.advance()
            sign = -1
        if self.peek() is None or not self.peek().isdigit():
            self.error("expected integer exponent")
        tok, _, _ = self.advance()
        return sign * int(tok)

    def parse_atom(self, pres):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        if tok == "(":
            self.advance()
            value = self.parse_sum(pres)
            if self.peek() != ")":
                self.error("unbalanced parenthesis")
            self.advance()
            return value
        if tok == ")":
            self.error("unbalanced parenthesis")
        self.advance()
        if tok.isdigit():
            return pres.one(rf_int(int(tok)))
        if tok == "q":
            return pres.one(rf_q(1))
        if tok in pres._char:
            return pres.gen(tok)
        self.error("unknown symbol %r" % tok)


def _as_scalar(x: NCElement):
    if x.is_zero:
        return RF_ZERO
    if set(x.terms) == {""}:
        return x.terms[""]
    return None


def parse_element(text, pres, line=1) -> NCElement:
    return _ExprParser(tokenize(text, line), [pres]).parse_element()


def parse_tensor(text, legs, line=1) -> TensorElement:
    return _ExprParser(tokenize(text, line), list(legs)).parse_tensor()


def parse_scalar(text, line=1) -> RationalFunction:
    scratch = Presentation("scalars", (), ())
    value = parse_element(text, scratch, line)
    c = _as_scalar(value)
    if c is None:
        raise PresentationSyntaxError("expected a scalar expression", line)
    return c


# -- presentation files -------------------------------------------------------

@dataclass
class StructureLine:
    kind: str            # delta | eps | antipode | antipodeinv | seed
    symbol: str
    rhs_text: str
    line: int


def parse_presentation(text):
    """Parse the line-oriented presentation format.

    Returns (Presentation, structure lines); structure-map right-hand sides
    are kept as raw text because their tensor legs may live in a different
    algebra, which only the consumer knows.
    """
    name = None
    gens = []
    relations = []
    structure = []
    pending_warnings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split(None, 1)
        head = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if head == "algebra":
            if not rest:
                raise PresentationSyntaxError("algebra line needs a name", lineno)
            name = rest.strip()
        elif head == "gen":
            toks = rest.split()
            if len(toks) != 3 or toks[1] != "charge":
                raise PresentationSyntaxError(
                    "expected 'gen <symbol> charge <integer>'", lineno)
            sym = toks[0]
            try:
                charge = int(toks[2])
            except ValueError:
                raise PresentationSyntaxError("charge must be an integer", lineno)
            if sym in RESERVED:
                raise PresentationSyntaxError("reserved symbol %r" % sym, lineno)
            gens.append(Generator(sym, charge))
        elif head == "rel":
            if "=" not in rest:
                raise PresentationSyntaxError("relation needs '='", lineno)
            lhs_text, rhs_text = rest.split("=", 1)
            lhs_syms = lhs_text.split()
            known = {g.symbol for g in gens}
            for s in lhs_syms:
                if s not in known:
                    raise PresentationSyntaxError("unknown symbol %r" % s, lineno)
            if not lhs_syms:
                raise PresentationSyntaxError("empty relation left side", lineno)
            relations.append((lhs_syms, rhs_text, lineno))
        elif head in ("delta", "eps", "antipode", "antipodeinv", "seed"):
            if "=" not in rest:
                raise PresentationSyntaxError("%s line needs '='" % head, lineno)
            sym, rhs_text = rest.split("=", 1)
            structure.append(StructureLine(head, sym.strip(), rhs_text.strip(), lineno))
        else:
            raise PresentationSyntaxError("unknown directive %r" % head, lineno)
    if name is None:
        raise PresentationSyntaxError("missing 'algebra <name>' line", 1)

    scratch = Presentation(name, gens, ())
    resolved = []
    for lhs_syms, rhs_text, lineno in relations:
        rhs = parse_element(rhs_text, scratch, lineno)
        resolved.append((lhs_syms, {tuple(scratch._sym[ch] for ch in w): c
                                    for w, c in rhs.terms.items()}))
    pres = Presentation.build(name, gens, resolved, pending_warnings)
    return pres, structure
