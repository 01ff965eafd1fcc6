"""The coefficient ring Q[a] of the shift parameters.

Everything downstream is linear over polynomials in commuting indeterminates
a_i, indexed by arbitrary (signed) integers.  Three structure maps act on the
index lattice:

* the shift tau, sending a_i to a_{i+1};
* the dual map, sending a_i to -a_{-i+1} (an involution);
* numeric substitution, assigning a rational value to every index.

Coefficients are exact rationals throughout so that every identity check in
the package is a zero-tolerance equality test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple[tuple[int, int], ...]  # ((index, exponent), ...) sorted by index


class MissingIndex(KeyError):
    """An explicit substitution was asked for an index it does not cover."""


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _monomial_sort_key(m: Monomial):
    # Graded order, then lex on the exponent vector with variables in
    # increasing index order.  Smaller key = earlier in the serialized form.
    return (-sum(e for _, e in m), tuple((i, -e) for i, e in m))


class ParamPoly:
    """Sparse polynomial in the a_i with Fraction coefficients.

    Instances are immutable by convention; all operations return new objects.
    The term map never stores zero coefficients or zero exponents.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms: dict[Monomial, Fraction] = dict(terms) if terms else {}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "ParamPoly":
        return ParamPoly()

    @staticmethod
    def const(c) -> "ParamPoly":
        c = as_fraction(c)
        return ParamPoly({(): c} if c else {})

    @staticmethod
    def one() -> "ParamPoly":
        return ParamPoly.const(1)

    @staticmethod
    def gen(i: int) -> "ParamPoly":
        """The indeterminate a_i."""
        return ParamPoly({((i, 1),): Fraction(1)})

    @staticmethod
    def coerce(x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        return ParamPoly.const(x)

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other) -> "ParamPoly":
        other = ParamPoly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "ParamPoly":
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other) -> "ParamPoly":
        return ParamPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "ParamPoly":
        other = ParamPoly.coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _merge_monomials(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return ParamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = ParamPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    # -- structure maps ----------------------------------------------------

    def tau(self, s: int) -> "ParamPoly":
        """Shift every index by s: a_i -> a_{i+s}.  A ring homomorphism."""
        if s == 0:
            return self
        return ParamPoly(
            {tuple(sorted((i + s, e) for i, e in m)): c for m, c in self.terms.items()}
        )

    def hat(self) -> "ParamPoly":
        """The dual-parameter map a_i -> -a_{-i+1}; an involution."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            sign = (-1) ** sum(e for _, e in m)
            mm = tuple(sorted((1 - i, e) for i, e in m))
            s = out.get(mm, Fraction(0)) + sign * c
            if s:
                out[mm] = s
            else:
                del out[mm]
        return ParamPoly(out)

    def substitute(self, sub: "ParamSubstitution") -> Fraction:
        """Numeric evaluation under a non-symbolic substitution."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for i, e in m:
                v *= sub.index_value(i) ** e
            total += v
        return total

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _monomial_sort_key(t[0]))

    def to_json(self) -> list:
        return [
            {"c": str(c), "e": {str(i): e for i, e in m}}
            for m, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data: Iterable) -> "ParamPoly":
        out = ParamPoly.zero()
        for item in data:
            m = tuple(sorted((int(i), int(e)) for i, e in item["e"].items()))
            out = out + ParamPoly({m: as_fraction(item["c"])})
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = "*".join(f"a[{i}]" + (f"^{e}" if e > 1 else "") for i, e in m)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    __repr__ = __str__

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = " ".join(
                f"a_{{{i}}}" + (f"^{{{e}}}" if e > 1 else "") for i, e in m
            )
            coeff = _latex_fraction(c)
            if not body:
                parts.append(coeff)
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff} {body}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for i, e in m2:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted(acc.items()))


def _latex_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


@dataclass(frozen=True)
class ParamSequence:
    """One of the parameter sequences tau^s(a) or tau^s(a-hat).

    value(i) is a_{i+offset} for the plain family and -a_{1-i-offset} for the
    dualized one.  The family is closed under tau and under dualization, which
    is all the generating-series calculus ever needs.
    """

    hat: bool = False
    offset: int = 0

    def term(self, i: int) -> ParamPoly:
        if self.hat:
            return -ParamPoly.gen(1 - i - self.offset)
        return ParamPoly.gen(i + self.offset)

    def tau(self, s: int) -> "ParamSequence":
        return ParamSequence(self.hat, self.offset + s)

    def dual(self) -> "ParamSequence":
        return ParamSequence(not self.hat, -self.offset)

    def values(self, n: int) -> list[ParamPoly]:
        """The first n entries (indices 1..n)."""
        return [self.term(i) for i in range(1, n + 1)]

    def label(self) -> str:
        core = "ahat" if self.hat else "a"
        if self.offset == 0:
            return core
        return f"tau^{self.offset}({core})"


#: the undressed sequence a
SEQ_A = ParamSequence(False, 0)
#: its dual a-hat
SEQ_AHAT = ParamSequence(True, 0)


@dataclass(frozen=True)
class ParamSubstitution:
    """Assignment of rational values to the indices of the sequence a.

    kind is one of 'symbolic', 'equidistant', 'explicit'.  The equidistant
    assignment is a_i = base + i*c for every integer i.
    """

    kind: str
    c: Fraction | None = None
    base: Fraction | None = None
    table: tuple[tuple[int, Fraction], ...] | None = None

    @staticmethod
    def symbolic() -> "ParamSubstitution":
        return ParamSubstitution("symbolic")

    @staticmethod
    def equidistant(c, base=0) -> "ParamSubstitution":
        return ParamSubstitution("equidistant", c=as_fraction(c), base=as_fraction(base))

    @staticmethod
    def explicit(mapping: Mapping[int, object]) -> "ParamSubstitution":
        table = tuple(sorted((int(i), as_fraction(v)) for i, v in mapping.items()))
        return ParamSubstitution("explicit", table=table)

    def index_value(self, i: int) -> Fraction:
        if self.kind == "equidistant":
            return self.base + i * self.c
        if self.kind == "explicit":
            for j, v in self.table:
                if j == i:
                    return v
            raise MissingIndex(i)
        raise ValueError("symbolic substitution has no numeric values")

    def is_whole_distant(self) -> bool:
        """Whether a_i - a_j is an integer for all covered i, j."""
        if self.kind == "equidistant":
            return self.c.denominator == 1
        if self.kind == "explicit":
            if not self.table:
                return True
            v0 = self.table[0][1]
            return all((v - v0).denominator == 1 for _, v in self.table)
        return False
