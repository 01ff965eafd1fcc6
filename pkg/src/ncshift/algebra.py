"""Free associative algebra over Q[a] in the generators S_1, S_2, ...

Elements are finite Q[a]-linear combinations of words; the word (k_1,...,k_m)
stands for the monomial S_{k_1}...S_{k_m} and the empty word is the unit.  The
generator S_k has degree k, so the degree of a word is the sum of its letters.
Words in other generating families (elementary, power-sum) reuse the same
container; which family the letters denote is purely contextual.

Two word orders matter:

* the serialization order (degree, then lex), used for canonical JSON;
* the elimination order (length, then degree, then lex), under which every
  ribbon expansion has its indexing composition as strict leading word.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .params import ParamPoly, ParamSubstitution, as_fraction

Word = tuple[int, ...]


def word_degree(w: Word) -> int:
    return sum(w)


def serial_key(w: Word):
    return (word_degree(w), w)


def elimination_key(w: Word):
    return (len(w), word_degree(w), w)


class NCElement:
    """A finite map word -> nonzero ParamPoly.

    Immutable by convention.  Multiplication concatenates words bilinearly;
    equality is equality of the underlying term maps, which is linear
    independence of the word basis made operational.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, ParamPoly] | None = None):
        self.terms: dict[Word, ParamPoly] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "NCElement":
        return NCElement()

    @staticmethod
    def one() -> "NCElement":
        return NCElement({(): ParamPoly.one()})

    @staticmethod
    def gen(k: int) -> "NCElement":
        """The generator S_k; S_0 is the unit and negative degrees vanish."""
        if k < 0:
            return NCElement.zero()
        if k == 0:
            return NCElement.one()
        return NCElement({(k,): ParamPoly.one()})

    @staticmethod
    def word(w: Iterable[int]) -> "NCElement":
        w = tuple(w)
        if any(k < 1 for k in w):
            raise ValueError(f"word letters must be positive, got {w}")
        return NCElement({w: ParamPoly.one()})

    @staticmethod
    def scalar(c) -> "NCElement":
        c = ParamPoly.coerce(c)
        return NCElement({(): c}) if c else NCElement.zero()

    # -- linear structure ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda t: t[0])))

    def __add__(self, other: "NCElement") -> "NCElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        res = NCElement()
        res.terms = out
        return res

    def __neg__(self) -> "NCElement":
        res = NCElement()
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __sub__(self, other: "NCElement") -> "NCElement":
        return self + (-other)

    def scale(self, c) -> "NCElement":
        c = ParamPoly.coerce(c)
        if not c:
            return NCElement.zero()
        res = NCElement()
        res.terms = {w: c * v for w, v in self.terms.items()}
        return res

    def __mul__(self, other) -> "NCElement":
        if not isinstance(other, NCElement):
            return self.scale(other)
        out: dict[Word, ParamPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        res = NCElement()
        res.terms = out
        return res

    def __rmul__(self, other) -> "NCElement":
        # scalars commute with everything
        return self.scale(other)

    def degree(self) -> int:
        """Top word degree; -1 for the zero element."""
        if not self.terms:
            return -1
        return max(word_degree(w) for w in self.terms)

    def constant_term(self) -> ParamPoly:
        return self.terms.get((), ParamPoly.zero())

    def coefficient(self, w: Iterable[int]) -> ParamPoly:
        return self.terms.get(tuple(w), ParamPoly.zero())

    def leading_word(self) -> Word:
        """Maximal support word in the elimination order."""
        if not self.terms:
            raise ValueError("zero element has no leading word")
        return max(self.terms, key=elimination_key)

    def map_words(self, f: Callable[[Word], "NCElement"]) -> "NCElement":
        """Sum of coeff * f(word) over the support (a linear extension)."""
        out = NCElement.zero()
        for w, c in self.terms.items():
            out = out + f(w).scale(c)
        return out

    def map_coefficients(self, f: Callable[[ParamPoly], ParamPoly]) -> "NCElement":
        res = NCElement()
        for w, c in self.terms.items():
            fc = f(c)
            if fc:
                res.terms[w] = fc
        return res

    def substitute(self, sub: ParamSubstitution) -> dict[Word, Fraction]:
        """Numeric coefficients under a parameter substitution."""
        out = {}
        for w, c in self.terms.items():
            v = c.substitute(sub)
            if v:
                out[w] = v
        return out

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Word, ParamPoly]]:
        return sorted(self.terms.items(), key=lambda t: serial_key(t[0]))

    def to_json(self, basis: str = "S") -> dict:
        return {
            "basis": basis,
            "terms": [
                {"word": list(w), "coeff": c.to_json()} for w, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "NCElement":
        out = NCElement.zero()
        for item in data["terms"]:
            w = tuple(int(k) for k in item["word"])
            out = out + NCElement({w: ParamPoly.from_json(item["coeff"])})
        return out

    def __str__(self) -> str:
        return self.pretty("S")

    __repr__ = __str__

    def pretty(self, letter: str = "S") -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            body = "*".join(f"{letter}{k}" for k in w) or "1"
            cs = str(c)
            if cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append(f"-{body}")
            elif c.terms and len(c.terms) > 1 or (c.terms and () not in c.terms):
                parts.append(f"({cs})*{body}")
            else:
                parts.append(f"{cs}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def latex(self, letter: str = "S", family_tag: str = "a") -> str:
        """Emit the S_{k;a}-style notation used in the literature."""
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            body = "".join(f"{letter}_{{{k};{family_tag}}}" for k in w) or "1"
            cl = c.latex()
            if cl == "1":
                parts.append(body)
            elif cl == "-1":
                parts.append(f"-{body}")
            elif len(c.terms) > 1:
                parts.append(f"\\left({cl}\\right) {body}")
            else:
                parts.append(f"{cl}\\, {body}")
        return " + ".join(parts).replace("+ -", "- ")


def nc_sum(items: Iterable[NCElement]) -> NCElement:
    out = NCElement.zero()
    for x in items:
        out = out + x
    return out


def nc_prod(items: Iterable[NCElement]) -> NCElement:
    out = NCElement.one()
    for x in items:
        out = out * x
    return out


# -- commutative symmetric polynomials of parameter values -------------------
#
# Needed by the series re-expansions (complete homogeneous) and by the
# finite-variable embedding (elementary).  Standard one-variable-at-a-time
# recurrences; inputs are plain lists of ParamPoly values.


def complete_homogeneous(values: list[ParamPoly], n: int) -> list[ParamPoly]:
    """[h_0, h_1, ..., h_n] of the given values."""
    hs = [ParamPoly.one()] + [ParamPoly.zero()] * n
    for v in values:
        for i in range(1, n + 1):
            hs[i] = hs[i] + v * hs[i - 1]
    return hs


def elementary(values: list[ParamPoly], n: int) -> list[ParamPoly]:
    """[e_0, e_1, ..., e_n] of the given values; e_k = 0 past the list length."""
    es = [ParamPoly.one()] + [ParamPoly.zero()] * n
    for v in values:
        for i in range(min(n, len(values)), 0, -1):
            es[i] = es[i] + v * es[i - 1]
    return es


def as_param(x) -> ParamPoly:
    if isinstance(x, ParamPoly):
        return x
    return ParamPoly.const(as_fraction(x))
