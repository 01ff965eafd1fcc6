"""Shift coefficients and shifted generators.

The bracket coefficient

    {l nu}_k^b = sum over 1 <= s_1 < ... < s_nu <= l of
                 prod_i (b_{k+(nu-i)+s_i} - b_{s_i})

controls every re-expansion between shifted-power denominator bases.  The
shifted complete homogeneous generators have the closed forms (s >= 0)

    S_k^[s]  = sum_nu {s nu}_{k-nu}^{tau^{-s} b}        S_{k-nu}
    S_k^[-s] = sum_nu {nu+s-1 nu}_{1-k}^{tau^{k-nu} b}  S_{k-nu}

and the elementary generators the same forms with the dual sequence in the
superscript; both are triangular with unit leading coefficient.

The shift automorphism phi^[s] sends S_k to S_k^[s] multiplicatively.  On
coefficients it acts by re-indexing the parameters (a_i -> a_{i-s} over the
plain sequence, a_i -> a_{i+s} over the dualized one): this is the unique
extension under which phi^[s] o phi^[t] = phi^[s+t], phi^[s] maps the
elementary family to its shifts, and the ribbon shift notation R^[K+s] agrees
with phi^[s] applied to R^[K].  With coefficients held fixed instead, already
phi^[1](phi^[-1](S_2)) = S_2 + (2a_1 - a_0 - a_2) S_1 fails to return S_2.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations

from .algebra import NCElement
from .params import SEQ_A, ParamPoly, ParamSequence


@cache
def a_binomial(l: int, nu: int, k: int, seq: ParamSequence = SEQ_A) -> ParamPoly:
    """The coefficient {l nu}_k over the given parameter sequence.

    Equals 1 for nu = 0 and vanishes when nu exceeds l.
    """
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    if nu == 0:
        return ParamPoly.one()
    if l < nu:
        return ParamPoly.zero()
    total = ParamPoly.zero()
    for s in combinations(range(1, l + 1), nu):
        term = ParamPoly.one()
        for i, s_i in enumerate(s, start=1):
            term = term * (seq.term(k + (nu - i) + s_i) - seq.term(s_i))
        total = total + term
    return total


@cache
def s_shift_coeffs(k: int, s: int, base: ParamSequence = SEQ_A) -> tuple[ParamPoly, ...]:
    """Coefficients (c_0, ..., c_{k-1}) with S_k^[s] = sum_nu c_nu S_{k-nu}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ()
    if s >= 0:
        return tuple(
            a_binomial(s, nu, k - nu, base.tau(-s)) for nu in range(k)
        )
    t = -s
    return tuple(
        a_binomial(nu + t - 1, nu, 1 - k, base.tau(k - nu)) for nu in range(k)
    )


@cache
def lambda_shift_coeffs(k: int, s: int, base: ParamSequence = SEQ_A) -> tuple[ParamPoly, ...]:
    """Coefficients (d_0, ..., d_{k-1}) with Lambda_k^[s] = sum_nu d_nu Lambda_{k-nu}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ()
    dual = base.dual()
    if s >= 0:
        return tuple(
            a_binomial(nu + s - 1, nu, 1 - k, dual.tau(k - nu)) for nu in range(k)
        )
    t = -s
    return tuple(
        a_binomial(t, nu, k - nu, dual.tau(-t)) for nu in range(k)
    )


@cache
def shift_S(k: int, s: int, base: ParamSequence = SEQ_A) -> NCElement:
    """S_k^[s] expanded in the S-basis."""
    if k == 0:
        return NCElement.one()
    out = NCElement.zero()
    for nu, c in enumerate(s_shift_coeffs(k, s, base)):
        if c:
            out = out + NCElement.gen(k - nu).scale(c)
    return out


def coeff_shift(c: ParamPoly, s: int, base: ParamSequence = SEQ_A) -> ParamPoly:
    """Action of phi^[s] on a coefficient polynomial.

    Induced by the base-sequence move b -> tau^{-s} b read on the indices of
    a itself, so the direction flips over a dualized base.
    """
    return c.tau(s if base.hat else -s)


def phi_shift(x: NCElement, s: int, base: ParamSequence = SEQ_A) -> NCElement:
    """The algebra map phi^[s]: letters via shift_S, coefficients re-indexed."""
    if s == 0:
        return x
    out = NCElement.zero()
    for w, c in x.terms.items():
        term = NCElement.scalar(coeff_shift(c, s, base))
        for k in w:
            term = term * shift_S(k, s, base)
        out = out + term
    return out
