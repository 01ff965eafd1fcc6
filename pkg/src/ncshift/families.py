"""Generator families of the shifted algebra and their interrelations.

The elementary generators are produced operationally from the triangular
linear relation

    sum_{i+j=n} (-1)^j S_i^[n-1] Lambda_j = delta_{n,0},

which pins Lambda_n once the shifted complete homogeneous expansions are
known.  The Hessenberg quasideterminant closed forms (Jacobi-Trudi and its
inverse) are theorems about this solution and are checked, not assumed.

Power sums are the alternating hook combination

    Psi_n = sum_{k=0}^{n-1} (-1)^k (n-k) Lambda_k^[n-k] S_{n-k}^[n-k-1],

free generators over Q[a] (the rewrite into them needs denominators 1/n, so
the Z[a]-lattice is left).  Conversions between the S, Lambda and Psi
generating sets proceed degree by degree through the same triangular
relations; round trips are exact.

Everything is parameterized by the base sequence, so the same functions
compute in the dual algebra by passing the dualized sequence.

Memo tables are keyed by (argument, base) through functools.cache, which is
safe for concurrent readers: a consistent map is observed, at worst a value
is computed twice.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .algebra import NCElement, Word, complete_homogeneous, elementary, nc_prod
from .params import SEQ_A, ParamSequence
from .quasidet import hessenberg_quasidet
from .shifts import lambda_shift_coeffs, s_shift_coeffs, shift_S


@cache
def lambda_in_S(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """Lambda_n expanded in the S-basis, by the triangular solve."""
    if n < 0:
        return NCElement.zero()
    if n == 0:
        return NCElement.one()
    # Lambda_n = (-1)^{n+1} sum_{j=0}^{n-1} (-1)^j S_{n-j}^[n-1] Lambda_j
    out = NCElement.zero()
    for j in range(n):
        term = shift_S(n - j, n - 1, base) * lambda_in_S(j, base)
        out = out + (term if j % 2 == 0 else -term)
    return out if (n + 1) % 2 == 0 else -out


@cache
def shift_Lambda(k: int, s: int, base: ParamSequence = SEQ_A) -> NCElement:
    """Lambda_k^[s] in the S-basis."""
    if k == 0:
        return NCElement.one()
    out = NCElement.zero()
    for nu, c in enumerate(lambda_shift_coeffs(k, s, base)):
        if c:
            out = out + lambda_in_S(k - nu, base).scale(c)
    return out


def lambda_letter_shift(k: int, s: int, base: ParamSequence = SEQ_A) -> NCElement:
    """Lambda_k^[s] as a combination of words in Lambda-letters."""
    if k == 0:
        return NCElement.one()
    out = NCElement.zero()
    for nu, c in enumerate(lambda_shift_coeffs(k, s, base)):
        if c:
            out = out + NCElement.gen(k - nu).scale(c)
    return out


def jacobi_trudi_matrix(n: int, base: ParamSequence = SEQ_A) -> list[list[NCElement | None]]:
    """The Hessenberg matrix whose (1,n) quasideterminant gives Lambda_n.

    Entry (i,j) is S_{j-i+1}^[n-i]; unit subdiagonal.
    """
    return [
        [shift_S(j - i + 1, n - i - 1, base) if j >= i else None for j in range(n)]
        for i in range(n)
    ]


def lambda_by_quasidet(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """Lambda_n via the quasideterminant closed form (a checked theorem)."""
    if n == 0:
        return NCElement.one()
    q = hessenberg_quasidet(jacobi_trudi_matrix(n, base))
    return q if (n - 1) % 2 == 0 else -q


def s_in_lambda(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """S_n as a polynomial in Lambda-letters, via the inverse closed form.

    The returned words are monomials in the elementary generators.  Entry
    (i,j) of the underlying matrix is Lambda_{j-i+1}^[-j] in column j
    (1-indexed), expanded over Lambda-letters before taking the
    quasideterminant.
    """
    if n == 0:
        return NCElement.one()
    rows = [
        [lambda_letter_shift(j - i + 1, -j, base) if j >= i else None for j in range(n)]
        for i in range(n)
    ]
    q = hessenberg_quasidet(rows)
    return q if (n - 1) % 2 == 0 else -q


@cache
def s_in_lambda_table(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """S_n over Lambda-letters, from the triangular relation itself.

    Used by the generating-set conversions; independent of the closed form
    above, which is verified against it.
    """
    if n == 0:
        return NCElement.one()
    # S_n^[n-1] = sum_{j=1}^{n} (-1)^{j+1} S_{n-j}^[n-1] Lambda_j, then strip
    # the shift triangularly.
    acc = NCElement.zero()
    for j in range(1, n + 1):
        coeffs = s_shift_coeffs(n - j, n - 1, base)
        s_shifted = NCElement.zero()
        for nu, c in enumerate(coeffs):
            if c:
                s_shifted = s_shifted + s_in_lambda_table(n - j - nu, base).scale(c)
        if n - j == 0:
            s_shifted = NCElement.one()
        term = s_shifted * NCElement.gen(j)
        acc = acc + (term if (j + 1) % 2 == 0 else -term)
    # acc = S_n^[n-1] over Lambda-letters; now S_n = S_n^[n-1] - corrections
    out = acc
    for nu, c in enumerate(s_shift_coeffs(n, n - 1, base)):
        if nu and c:
            out = out - s_in_lambda_table(n - nu, base).scale(c)
    return out


def lambda_words_to_s(x: NCElement, base: ParamSequence = SEQ_A) -> NCElement:
    """Interpret words of x as Lambda-monomials and expand in the S-basis."""
    return x.map_words(lambda w: nc_prod(lambda_in_S(k, base) for k in w))


def s_to_lambda(x: NCElement, base: ParamSequence = SEQ_A) -> NCElement:
    """Rewrite an S-basis element over Lambda-letters."""
    return x.map_words(lambda w: nc_prod(s_in_lambda_table(k, base) for k in w))


# -- power sums ---------------------------------------------------------------


@cache
def psi(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """The shifted power sum Psi_n in the S-basis."""
    return psi_shifted(n, 0, base)


@cache
def psi_shifted(n: int, s: int, base: ParamSequence = SEQ_A) -> NCElement:
    """Psi_n^[s]; coincides with phi_shift(psi(n), s)."""
    if n < 1:
        raise ValueError("power sums start at n = 1")
    out = NCElement.zero()
    for k in range(n):
        term = shift_Lambda(k, n - k + s, base) * shift_S(n - k, n - k - 1 + s, base)
        term = term.scale(Fraction(n - k))
        out = out + (term if k % 2 == 0 else -term)
    return out


@cache
def s_in_psi_table(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """S_n over Psi-letters.

    Built from the Wronski recursion n S_n^[n-1] = sum_k S_k^[n-1] Psi_{n-k};
    its validity is pinned by the exact round trip with psi(n).
    """
    if n == 0:
        return NCElement.one()

    def s_shifted_in_psi(k: int) -> NCElement:
        if k == 0:
            return NCElement.one()
        out = NCElement.zero()
        for nu, c in enumerate(s_shift_coeffs(k, n - 1, base)):
            if c:
                out = out + s_in_psi_table(k - nu, base).scale(c)
        return out

    acc = NCElement.gen(n)  # the Psi_n letter
    for k in range(1, n):
        acc = acc + s_shifted_in_psi(k) * NCElement.gen(n - k)
    acc = acc.scale(Fraction(1, n))  # acc = S_n^[n-1] over Psi-letters
    out = acc
    for nu, c in enumerate(s_shift_coeffs(n, n - 1, base)):
        if nu and c:
            out = out - s_in_psi_table(n - nu, base).scale(c)
    return out


def psi_words_to_s(x: NCElement, base: ParamSequence = SEQ_A) -> NCElement:
    """Interpret words of x as Psi-monomials and expand in the S-basis."""
    return x.map_words(lambda w: nc_prod(psi(k, base) for k in w))


def s_to_psi(x: NCElement, base: ParamSequence = SEQ_A) -> NCElement:
    """Rewrite an S-basis element over Psi-letters (denominators 1/n appear)."""
    return x.map_words(lambda w: nc_prod(s_in_psi_table(k, base) for k in w))


# -- identity checks -----------------------------------------------------------


def check_lineareq(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """The defect of sum_{i+j=n} (-1)^j S_i^[n-1] Lambda_j (zero iff it holds)."""
    acc = NCElement.zero()
    for j in range(n + 1):
        term = shift_S(n - j, n - 1, base) * lambda_in_S(j, base)
        acc = acc + (term if j % 2 == 0 else -term)
    if n == 0:
        acc = acc - NCElement.one()
    return acc


def verify_wronski_newton(n: int, base: ParamSequence = SEQ_A) -> tuple[bool, str]:
    """Check the fundamental, Wronski and Newton identities at degree n."""
    # S_n^[n-1] = sum_{k=1}^{n} (-1)^{k-1} Lambda_k^[n-k] S_{n-k}^[n-1-k]
    lhs = shift_S(n, n - 1, base)
    rhs = NCElement.zero()
    for k in range(1, n + 1):
        term = shift_Lambda(k, n - k, base) * shift_S(n - k, n - 1 - k, base)
        rhs = rhs + (term if (k - 1) % 2 == 0 else -term)
    if lhs != rhs:
        return False, f"fundamental identity fails at n={n}"
    # n S_n^[n-1] = sum_{k=0}^{n-1} S_k^[n-1] Psi_{n-k}
    lhs = shift_S(n, n - 1, base).scale(Fraction(n))
    rhs = NCElement.zero()
    for k in range(n):
        rhs = rhs + shift_S(k, n - 1, base) * psi(n - k, base)
    if lhs != rhs:
        return False, f"Wronski identity fails at n={n}"
    # n Lambda_n = sum_{k=0}^{n-1} (-1)^{n-k-1} Psi_{n-k}^[k] Lambda_k
    lhs = lambda_in_S(n, base).scale(Fraction(n))
    rhs = NCElement.zero()
    for k in range(n):
        term = psi_shifted(n - k, k, base) * lambda_in_S(k, base)
        rhs = rhs + (term if (n - k - 1) % 2 == 0 else -term)
    if lhs != rhs:
        return False, f"Newton identity fails at n={n}"
    return True, ""


def translation_psi_from_s(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """Psi_n as the quasideterminant in shifted S's (last column weighted)."""
    rows = []
    for i in range(1, n + 1):
        row: list[NCElement | None] = [None] * n
        for j in range(i, n + 1):
            e = shift_S(j - i + 1, n - i, base)
            if j == n:
                e = e.scale(Fraction(n - i + 1))
            row[j - 1] = e
        rows.append(row)
    return hessenberg_quasidet(rows)


def translation_psi_from_lambda(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """Psi_n as the quasideterminant in shifted Lambdas (first row weighted)."""
    rows = []
    for i in range(1, n + 1):
        row: list[NCElement | None] = [None] * n
        for j in range(i, n + 1):
            e = shift_Lambda(j - i + 1, n - j, base)
            if i == 1:
                e = e.scale(Fraction(j))
            row[j - 1] = e
        rows.append(row)
    q = hessenberg_quasidet(rows)
    return q if (n - 1) % 2 == 0 else -q


def translation_s_from_psi(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """n S_n^[n-1] as the quasideterminant in shifted Psis (subdiagonal -i)."""
    rows = []
    for i in range(1, n + 1):
        row: list[NCElement | None] = [None] * n
        for j in range(i, n + 1):
            row[j - 1] = psi_shifted(j - i + 1, n - j, base)
        rows.append(row)
    return hessenberg_quasidet(rows, subdiag=[-i for i in range(1, n)])


def translation_lambda_from_psi(n: int, base: ParamSequence = SEQ_A) -> NCElement:
    """n Lambda_n as the quasideterminant in shifted Psis (subdiagonal n-i)."""
    rows = []
    for i in range(1, n + 1):
        row: list[NCElement | None] = [None] * n
        for j in range(i, n + 1):
            row[j - 1] = psi_shifted(j - i + 1, n - j, base)
        rows.append(row)
    q = hessenberg_quasidet(rows, subdiag=[n - i for i in range(1, n)])
    return q if (n - 1) % 2 == 0 else -q


def verify_translations(n: int, base: ParamSequence = SEQ_A) -> tuple[bool, str]:
    """All four translation quasideterminants at degree n."""
    p = psi(n, base)
    if translation_psi_from_s(n, base) != p:
        return False, f"Psi-from-S quasideterminant fails at n={n}"
    if translation_psi_from_lambda(n, base) != p:
        return False, f"Psi-from-Lambda quasideterminant fails at n={n}"
    if translation_s_from_psi(n, base) != shift_S(n, n - 1, base).scale(Fraction(n)):
        return False, f"S-from-Psi quasideterminant fails at n={n}"
    if translation_lambda_from_psi(n, base) != lambda_in_S(n, base).scale(Fraction(n)):
        return False, f"Lambda-from-Psi quasideterminant fails at n={n}"
    return True, ""


# -- the finite-variable embedding --------------------------------------------


@cache
def embed_unshifted(n: int) -> NCElement:
    """The unshifted S_n written in the shifted S-basis.

    Coefficient of S_{n-i;a} is h_i(a_1, ..., a_{n-i}), read off from the
    geometric-series re-expansion of the generating series.
    """
    if n == 0:
        return NCElement.one()
    out = NCElement.zero()
    for k in range(1, n + 1):
        h = complete_homogeneous(SEQ_A.values(k), n - k)[n - k]
        out = out + NCElement.gen(k).scale(h)
    return out


@cache
def project_shifted(n: int) -> NCElement:
    """S_{n;a} written in unshifted S-letters (triangular inverse of embed).

    Matches sum_i (-1)^i e_i(a_1,...,a_{n-1}) S_{n-i}.
    """
    if n == 0:
        return NCElement.one()
    out = NCElement.gen(n)
    for k in range(1, n):
        h = complete_homogeneous(SEQ_A.values(k), n - k)[n - k]
        out = out - project_shifted(k).scale(h)
    return out


def project_shifted_closed_form(n: int) -> NCElement:
    """The printed elementary-symmetric closed form for S_{n;a}."""
    es = elementary(SEQ_A.values(n - 1), n)
    out = NCElement.zero()
    for i in range(n):
        c = es[i] if i % 2 == 0 else -es[i]
        out = out + NCElement.gen(n - i).scale(c)
    return out


def all_words(max_degree: int) -> list[Word]:
    """Every word of degree up to max_degree, in serialization order."""
    out: list[Word] = [()]
    for d in range(1, max_degree + 1):
        out.extend(compositions_of(d))
    return out


def compositions_of(d: int) -> list[Word]:
    """All compositions of d, lexicographically."""
    if d == 0:
        return [()]
    res: list[Word] = []

    def rec(rest: int, acc: tuple[int, ...]):
        if rest == 0:
            res.append(acc)
            return
        for k in range(1, rest + 1):
            rec(rest - k, acc + (k,))

    rec(d, ())
    return sorted(res)
