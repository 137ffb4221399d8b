"""Exact sparse multivariate polynomials over the rationals.

Monomials are dense exponent tuples over a fixed, ordered variable
universe (dense is the right trade-off here: universes stay small, at
most 2n+1 variables, and tuple comparisons are cheap).  Coefficients are
`fractions.Fraction`, so every identity test in the package is exact.

A text grammar `x1*y2 - x2*y1` (with `^` for powers) is supported both
ways, for debugging and golden tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Mono = tuple[int, ...]


# ---------------------------------------------------------------------------
# Monomial helpers (module-level functions on exponent tuples)

def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Mono) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# Variable universes

@dataclass(frozen=True)
class VariableUniverse:
    """Fixed ordered variable list; position = exponent-vector index."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")

    @classmethod
    def of(cls, *names: str) -> "VariableUniverse":
        return cls(tuple(names))

    @classmethod
    def xy(cls, n: int) -> "VariableUniverse":
        """The ring in x1..xn, y1..yn used for graphs on n vertices."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1))
                   + tuple(f"y{i}" for i in range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in universe {self.names}") from None

    def with_elim(self, name: str = "u") -> "VariableUniverse":
        """Extended universe with one elimination variable first."""
        return VariableUniverse((name,) + self.names)


# ---------------------------------------------------------------------------
# Monomial orders

@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative well-ordering on monomials.

    kinds:
      degrevlex  - degree first, then reverse lexicographic tie-break
      lex        - plain lexicographic on the exponent vector
      elim(k)    - degrevlex on the first k variables, then degrevlex on
                   the rest; an elimination order for the leading block
    """

    kind: str
    block: int = 0

    def key(self, m: Mono):
        if self.kind == "degrevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.kind == "lex":
            return m
        if self.kind == "elim":
            k = self.block
            head, tail = m[:k], m[k:]
            return (sum(head), tuple(-e for e in reversed(head)),
                    sum(tail), tuple(-e for e in reversed(tail)))
        raise ValueError(f"unknown order kind {self.kind!r}")

    def greater(self, a: Mono, b: Mono) -> bool:
        return self.key(a) > self.key(b)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elim_block(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


# ---------------------------------------------------------------------------
# Polynomials

class Polynomial:
    """Immutable sparse polynomial: {exponent tuple -> nonzero Fraction}."""

    __slots__ = ("universe", "terms")

    def __init__(self, universe: VariableUniverse, terms: dict[Mono, Fraction]):
        object.__setattr__(self, "universe", universe)
        # coerce so every coefficient is an exact Fraction, whatever the caller passed
        clean = {m: (c if type(c) is Fraction else Fraction(c))
                 for m, c in terms.items() if c != 0}
        for m in clean:
            if len(m) != universe.size:
                raise ValueError(f"exponent tuple {m} does not fit universe of size {universe.size}")
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, universe: VariableUniverse) -> "Polynomial":
        return cls(universe, {})

    @classmethod
    def const(cls, universe: VariableUniverse, value) -> "Polynomial":
        return cls(universe, {(0,) * universe.size: Fraction(value)})

    @classmethod
    def variable(cls, universe: VariableUniverse, name: str) -> "Polynomial":
        idx = universe.index(name)
        exp = [0] * universe.size
        exp[idx] = 1
        return cls(universe, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, universe: VariableUniverse, exps: Mono, coeff=1) -> "Polynomial":
        return cls(universe, {tuple(exps): Fraction(coeff)})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((mono_deg(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def leading_term(self, order: MonomialOrder) -> tuple[Mono, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder) -> Mono:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Mono, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.universe != other.universe:
            raise ValueError("polynomials live in different variable universes")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.universe, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return Polynomial(self.universe, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.universe, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        self._check(other)
        out: dict[Mono, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, Fraction(0)) + ca * cb
        return Polynomial(self.universe, out)

    __rmul__ = __mul__

    def scale(self, c: Fraction) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.universe)
        return Polynomial(self.universe, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Mono, coeff: Fraction) -> "Polynomial":
        """Fast multiply by a single term."""
        if coeff == 0:
            return Polynomial.zero(self.universe)
        return Polynomial(self.universe,
                          {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self if lc == 1 else self.scale(Fraction(1) / lc)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial)
                and self.universe == other.universe
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.universe, frozenset(self.terms.items())))

    # -- text format ---------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


# ---------------------------------------------------------------------------
# Text format: `x1*y2 - x2*y1`, `^` for powers, rational coefficients

def format_polynomial(p: Polynomial, order: MonomialOrder = LEX) -> str:
    if p.is_zero():
        return "0"
    names = p.universe.names
    chunks: list[str] = []
    for m, c in p.sorted_terms(order):
        factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                   for i, e in enumerate(m) if e > 0]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


_TERM_SPLIT = re.compile(r"(?=[+-])")
_FACTOR = re.compile(r"^([A-Za-z_]\w*)(?:\^(\d+))?$")


def parse_polynomial(universe: VariableUniverse, text: str) -> Polynomial:
    """Parse the grammar emitted by format_polynomial."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial string")
    if text == "0":
        return Polynomial.zero(universe)
    terms: dict[Mono, Fraction] = {}
    for raw in _TERM_SPLIT.split(text.replace(" ", "")):
        if not raw:
            continue
        sign = Fraction(1)
        if raw[0] == "+":
            raw = raw[1:]
        elif raw[0] == "-":
            sign = Fraction(-1)
            raw = raw[1:]
        if not raw:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        exps = [0] * universe.size
        for factor in raw.split("*"):
            if re.fullmatch(r"\d+(?:/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            idx = universe.index(m.group(1))
            exps[idx] += int(m.group(2)) if m.group(2) else 1
        mono = tuple(exps)
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return Polynomial(universe, terms)
