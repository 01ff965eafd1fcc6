"""Compositions, shifted ribbon Schur functions, and the duality map.

A composition I = (i_1, ..., i_n) encodes a ribbon; its canonical row shifts
are s_k = i_k + ... + i_{n-1} (and s_n = 0).  The ribbon function R_I is the
(1,n) quasideterminant, with outer sign (-1)^(n-1), of the Hessenberg matrix
whose (p,q) entry is S_{i_p+...+i_q}^[s_p]; generalized shift vectors K
replace the canonical s.  The expansions are triangular with leading word I
under the (length, degree, lex) order, which drives the basis conversion.

The conjugate composition is the descent-set complement reversed; it is the
diagonal reflection of the ribbon diagram, and satisfies
len(I) + len(I~) = deg(I) + 1.  (The published worked illustration for
(2,2,3,2) violates that law -- its conjugate as displayed has length 5, not
6 -- and is reproduced here only in the corrected form.)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .algebra import NCElement, nc_prod
from .params import SEQ_A, ParamPoly, ParamSequence
from .quasidet import hessenberg_quasidet
from .shifts import shift_S
from .families import lambda_in_S, shift_Lambda


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def row_shifts(self) -> tuple[int, ...]:
        """Canonical shift vector (s_1, ..., s_{n-1}, 0)."""
        n = self.length
        out = []
        for k in range(n):
            out.append(sum(self.parts[k : n - 1]))
        return tuple(out)

    def descents(self) -> frozenset[int]:
        acc, out = 0, []
        for p in self.parts[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    def conjugate(self) -> "Composition":
        """Reflection of the ribbon in the main diagonal.

        Complement the descent set inside {1, ..., d-1}, then reverse.
        """
        d = self.degree
        desc = sorted(set(range(1, d)) - self.descents())
        parts = []
        prev = 0
        for x in desc + [d]:
            parts.append(x - prev)
            prev = x
        return Composition(tuple(reversed(parts)))

    def concat(self, other: "Composition") -> "Composition":
        return Composition(self.parts + other.parts)

    def fuse(self, other: "Composition") -> "Composition":
        """I |> J: last part of I absorbs the first part of J."""
        return Composition(
            self.parts[:-1] + (self.parts[-1] + other.parts[0],) + other.parts[1:]
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    __repr__ = __str__


def all_compositions(degree: int) -> list[Composition]:
    if degree == 0:
        return []
    out: list[Composition] = []

    def rec(rest: int, acc: tuple[int, ...]):
        if rest == 0:
            out.append(Composition(acc))
            return
        for k in range(1, rest + 1):
            rec(rest - k, acc + (k,))

    rec(degree, ())
    return out


@cache
def ribbon_shifted(
    I: Composition, K: tuple[int, ...], base: ParamSequence = SEQ_A
) -> NCElement:
    """R_I^[K] in the S-basis, via the Hessenberg expansion."""
    n = I.length
    if len(K) != n:
        raise ValueError("shift vector length must match the composition")
    rows: list[list[NCElement | None]] = []
    for p in range(n):
        row: list[NCElement | None] = [None] * n
        for q in range(p, n):
            row[q] = shift_S(sum(I.parts[p : q + 1]), K[p], base)
        rows.append(row)
    q = hessenberg_quasidet(rows)
    return q if (n - 1) % 2 == 0 else -q


def ribbon(I: Composition, base: ParamSequence = SEQ_A) -> NCElement:
    """R_I at the canonical shifts."""
    return ribbon_shifted(I, I.row_shifts(), base)


def ribbon_uniform(I: Composition, s: int, base: ParamSequence = SEQ_A) -> NCElement:
    """R_I^[s]: the canonical shifts moved uniformly by s (= phi^[s] of R_I)."""
    K = tuple(x + s for x in I.row_shifts())
    return ribbon_shifted(I, K, base)


# -- the ribbon basis ----------------------------------------------------------


class RibbonElement:
    """Finite map (composition, shift vector) -> nonzero ParamPoly."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[tuple[int, ...], tuple[int, ...]], ParamPoly] = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @staticmethod
    def single(I: Composition, K: tuple[int, ...] | None = None, coeff=1) -> "RibbonElement":
        K = I.row_shifts() if K is None else tuple(K)
        return RibbonElement({(I.parts, K): ParamPoly.coerce(coeff)})

    def __add__(self, other: "RibbonElement") -> "RibbonElement":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ParamPoly.zero()) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return RibbonElement(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RibbonElement):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0][0]), t[0]))

    def to_json(self) -> dict:
        return {
            "basis": "R",
            "terms": [
                {"comp": list(comp), "shifts": list(K), "coeff": c.to_json()}
                for (comp, K), c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data) -> "RibbonElement":
        out = RibbonElement()
        for item in data["terms"]:
            key = (tuple(item["comp"]), tuple(item["shifts"]))
            c = ParamPoly.from_json(item["coeff"])
            if c:
                out = out + RibbonElement({key: c})
        return out

    def integer_coefficients(self, sub) -> bool:
        """Whether every coefficient evaluates to an integer under sub."""
        return all(c.substitute(sub).denominator == 1 for c in self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (comp, K), c in self.sorted_terms():
            canonical = Composition(comp).row_shifts() == K
            tag = "" if canonical else "^[" + ",".join(str(k) for k in K) + "]"
            body = "R(" + ",".join(str(p) for p in comp) + ")" + tag
            cs = str(c)
            parts.append(body if cs == "1" else f"({cs})*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (comp, K), c in self.sorted_terms():
            canonical = Composition(comp).row_shifts() == K
            tag = "" if canonical else "^{[" + ",".join(str(k) for k in K) + "]}"
            body = "R_{(" + ",".join(str(p) for p in comp) + ");a}" + tag
            cl = c.latex()
            if cl == "1":
                parts.append(body)
            else:
                parts.append(f"\\left({cl}\\right) {body}")
        return " + ".join(parts).replace("+ -", "- ")


def from_ribbon_basis(x: RibbonElement, base: ParamSequence = SEQ_A) -> NCElement:
    out = NCElement.zero()
    for (comp, K), c in x.terms.items():
        out = out + ribbon_shifted(Composition(comp), K, base).scale(c)
    return out


def to_ribbon_basis(x: NCElement, base: ParamSequence = SEQ_A) -> RibbonElement:
    """Triangular elimination against leading words in the elimination order."""
    out = RibbonElement()
    rest = x
    while not rest.is_zero():
        w = rest.leading_word()
        if not w:
            raise ValueError("element has a constant term; not in the ribbon span")
        I = Composition(w)
        c = rest.terms[w]
        out = out + RibbonElement.single(I, coeff=c)
        rest = rest - ribbon(I, base).scale(c)
    return out


# -- product and duality formulas ----------------------------------------------


def macmahon_product(I: Composition, J: Composition) -> RibbonElement:
    """Right-hand side of the shifted MacMahon formula.

    For len(J) >= 2 both terms carry canonical shifts; for J = (j_1) the
    fused term is shifted uniformly by the last part of I.
    """
    IJ = I.concat(J)
    IfJ = I.fuse(J)
    if J.length >= 2:
        return RibbonElement.single(IJ) + RibbonElement.single(IfJ)
    i_n = I.parts[-1]
    K = tuple(x + i_n for x in IfJ.row_shifts())
    return RibbonElement.single(IJ) + RibbonElement.single(IfJ, K)


def macmahon_left_shift(I: Composition, J: Composition) -> int:
    """The uniform shift applied to R_I on the left-hand side."""
    if J.length >= 2:
        return J.degree - J.parts[-1] + I.parts[-1]
    return I.parts[-1]


def generalized_macmahon_rhs(
    I: Composition, K: tuple[int, ...], J: Composition, L: tuple[int, ...]
) -> RibbonElement:
    """R_{I.J}^[K,L] + R_{I|>J}^[K, l_2..l_m]."""
    return RibbonElement.single(I.concat(J), K + L) + RibbonElement.single(
        I.fuse(J), K + L[1:]
    )


def nagelsbach_matrix(
    I: Composition, base: ParamSequence = SEQ_A
) -> list[list[NCElement | None]]:
    """The elementary-generator Hessenberg matrix for R_I^[i_n - 1].

    With I~ = (j_1, ..., j_m) and u = reversed(I~), the (p,q) entry is
    Lambda_{u_p + ... + u_q}^[t_q] where t_q = j_1 + ... + j_{m-q}.
    """
    conj = I.conjugate().parts
    m = len(conj)
    u = tuple(reversed(conj))
    t = [sum(conj[: m - q]) for q in range(1, m + 1)]
    rows: list[list[NCElement | None]] = []
    for p in range(m):
        row: list[NCElement | None] = [None] * m
        for q in range(p, m):
            row[q] = shift_Lambda(sum(u[p : q + 1]), t[q], base)
        rows.append(row)
    return rows


def nagelsbach_form(I: Composition, base: ParamSequence = SEQ_A) -> NCElement:
    """R_I^[i_n - 1] computed through the conjugate elementary expansion."""
    m = I.conjugate().length
    q = hessenberg_quasidet(nagelsbach_matrix(I, base))
    return q if (m - 1) % 2 == 0 else -q


def omega(x: NCElement, base: ParamSequence = SEQ_A) -> NCElement:
    """The duality anti-isomorphism into the algebra over the dual sequence.

    Words are reversed, each letter S_k becomes Lambda_k over the dual
    sequence, and coefficient polynomials pass through unchanged.
    """
    dual = base.dual()
    return x.map_words(
        lambda w: nc_prod(lambda_in_S(k, dual) for k in reversed(w))
    )


def duality_shift(I: Composition) -> int:
    """Uniform shift w with omega(R_I) = R_{I~}^[w] over the dual sequence.

    The corollary as printed says j_m - d_J + i_n; the verified value carries
    an extra -1 (already visible on I = (2): omega(S_2) is Lambda_2 dual,
    i.e. the conjugate ribbon at canonical shifts, whereas the printed value
    would shift it by one).
    """
    conj = I.conjugate()
    return conj.parts[-1] - conj.degree + I.parts[-1] - 1
