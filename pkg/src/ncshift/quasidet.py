"""Quasideterminant engines.

Two evaluators cover everything in scope:

* a symbolic expansion for unit-subdiagonal Hessenberg matrices with algebra
  entries, where the quasideterminant at the top-right corner is the
  polynomial

      |A|_{1n} = sum over 1 <= l_1 < ... < l_k < n of
                 (-1)^k  e_{1,l_1} e_{l_1+1,l_2} ... e_{l_k+1,n};

* an exact numeric evaluator for matrices whose entries are square rational
  matrices, using the defining formula
  |A|_{pq} = a_{pq} - row_p(A^{pq}) (A^{pq})^{-1} col_q(A^{pq}) with the minor
  flattened to one big rational matrix.

Any scalar (rational) subdiagonal is accepted in the symbolic engine:
left-scaling a non-boxed row leaves the quasideterminant unchanged, so rows
are normalized first.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import Sequence

from .algebra import NCElement
from .params import as_fraction


def max_reseed_default() -> int:
    """Resampling budget for singular draws; NCSHIFT_MAX_RESEED overrides."""
    return int(os.environ.get("NCSHIFT_MAX_RESEED", "16"))


class ShapeError(ValueError):
    """Matrix does not have the declared Hessenberg shape."""


class SingularMinor(ArithmeticError):
    """A flattened minor turned out to be singular."""


class ExhaustedRetries(RuntimeError):
    """Every sampled matrix hit a singular minor."""


# -- symbolic engine ---------------------------------------------------------


def hessenberg_quasidet(
    rows: Sequence[Sequence[NCElement | None]],
    subdiag: Sequence[Fraction | int] | None = None,
) -> NCElement:
    """|A|_{1n} for an almost-upper-triangular matrix of NCElements.

    rows[i][j] holds the entry for j >= i (0-indexed); entries below the
    diagonal are ignored except for validation.  subdiag gives the scalar
    entries at positions (i+1, i), default all 1.  The customary outer
    (-1)^(n-1) normalization is the caller's business.
    """
    n = len(rows)
    if n == 0:
        raise ShapeError("empty matrix")
    for row in rows:
        if len(row) != n:
            raise ShapeError("matrix is not square")
    if subdiag is None:
        subdiag = [1] * (n - 1)
    if len(subdiag) != n - 1:
        raise ShapeError("need exactly n-1 subdiagonal entries")
    for i in range(n):
        for j in range(i - 1):
            if rows[i][j] is not None and not rows[i][j].is_zero():
                raise ShapeError(f"nonzero entry below the subdiagonal at {(i + 1, j + 1)}")
    scale = [Fraction(1)] + [Fraction(1) / as_fraction(c) for c in subdiag]
    if n == 1:
        return rows[0][0]

    def entry(i: int, j: int) -> NCElement:
        e = rows[i][j]
        if e is None:
            raise ShapeError(f"missing entry at {(i + 1, j + 1)}")
        return e.scale(scale[i]) if scale[i] != 1 else e

    # tail[j] accumulates the expansion over rows j..n-1
    tail = [NCElement.zero()] * (n + 1)
    tail[n] = NCElement.one()
    for j in range(n - 1, -1, -1):
        acc = entry(j, n - 1)
        for m in range(j, n - 1):
            acc = acc - entry(j, m) * tail[m + 1]
        tail[j] = acc
    return tail[0]


# -- exact rational matrices --------------------------------------------------


class MatValue:
    """Immutable square matrix of exact rationals."""

    __slots__ = ("data", "n")

    def __init__(self, data):
        self.data = tuple(tuple(as_fraction(x) for x in row) for row in data)
        self.n = len(self.data)
        for row in self.data:
            if len(row) != self.n:
                raise ValueError("matrix must be square")

    @staticmethod
    def identity(n: int) -> "MatValue":
        return MatValue([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(n: int) -> "MatValue":
        return MatValue([[0] * n for _ in range(n)])

    @staticmethod
    def scalar(n: int, c) -> "MatValue":
        c = as_fraction(c)
        return MatValue([[c if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatValue):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __add__(self, other: "MatValue") -> "MatValue":
        return MatValue(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "MatValue") -> "MatValue":
        return MatValue(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        )

    def __neg__(self) -> "MatValue":
        return MatValue([[-a for a in row] for row in self.data])

    def scale(self, c) -> "MatValue":
        c = as_fraction(c)
        return MatValue([[c * a for a in row] for row in self.data])

    def __mul__(self, other: "MatValue") -> "MatValue":
        if not isinstance(other, MatValue):
            return self.scale(other)
        n = self.n
        cols = list(zip(*other.data))
        return MatValue(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.data]
        )

    __rmul__ = scale

    def inverse(self) -> "MatValue":
        """Gauss-Jordan over Fraction; raises SingularMinor if singular."""
        n = self.n
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.data)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise SingularMinor("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return MatValue([row[n:] for row in aug])

    def det(self) -> Fraction:
        """Fraction-free Bareiss elimination on a denominator-cleared copy."""
        n = self.n
        if n == 0:
            return Fraction(1)
        denom = Fraction(1)
        m = []
        for row in self.data:
            lcm = 1
            for x in row:
                lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
            denom *= lcm
            m.append([int(x * lcm) for x in row])
        sign = 1
        prev = 1
        for col in range(n - 1):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                sign = -sign
            for r in range(col + 1, n):
                for c in range(col + 1, n):
                    m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
                m[r][col] = 0
            prev = m[col][col]
        return Fraction(sign * m[n - 1][n - 1], 1) / denom

    def to_json(self) -> list:
        return [[str(x) for x in row] for row in self.data]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.data) + "]"

    __repr__ = __str__


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _flatten(blocks: Sequence[Sequence[MatValue]], d: int) -> MatValue:
    rows = []
    for brow in blocks:
        for r in range(d):
            rows.append([x for blk in brow for x in blk.data[r]])
    return MatValue(rows)


def block_quasidet(
    blocks: Sequence[Sequence[MatValue]], p: int, q: int
) -> MatValue:
    """|A|_{pq} for an n x n matrix of d x d rational blocks (1-indexed p, q)."""
    n = len(blocks)
    for brow in blocks:
        if len(brow) != n:
            raise ValueError("block matrix must be square")
    d = blocks[0][0].n
    if n == 1:
        return blocks[0][0]
    minor = [
        [blocks[i][j] for j in range(n) if j != q - 1]
        for i in range(n)
        if i != p - 1
    ]
    inv = _flatten(minor, d).inverse()
    row = [blocks[p - 1][j] for j in range(n) if j != q - 1]  # 1 x (n-1) blocks
    col = [blocks[i][q - 1] for i in range(n) if i != p - 1]  # (n-1) x 1 blocks
    # row * inv * col, assembled blockwise
    m = n - 1
    acc = MatValue.zeros(d)
    for bi in range(m):
        for bj in range(m):
            sub = MatValue(
                [
                    [inv.data[bi * d + r][bj * d + c] for c in range(d)]
                    for r in range(d)
                ]
            )
            acc = acc + row[bi] * sub * col[bj]
    return blocks[p - 1][q - 1] - acc


# -- randomized property checks ----------------------------------------------

#: sampling pool for random rational matrices
RANDOM_POOL = [Fraction(k) for k in range(-3, 4)] + [Fraction(1, 2), Fraction(-1, 2)]


def random_mat(rng: random.Random, d: int) -> MatValue:
    return MatValue([[rng.choice(RANDOM_POOL) for _ in range(d)] for _ in range(d)])


def submatrix_rows(blocks, rows):
    """Block rows selected by 1-indexed row list."""
    return [blocks[i - 1] for i in rows]


def verify_bazin(
    n: int,
    k: int,
    d: int,
    seed: int,
    max_reseed: int | None = None,
    variant: str = "corrected",
) -> bool:
    """Check the Bazin-type identity on a random 2n x n block matrix.

    The right-hand side is always the three-factor product

        |A_(k..n-1, n+1..n+k)|_{n+k,n} |A_(k..n+k-1)|_{n,n}^{-1} |A_(1..n)|_{nn}.

    Under variant="printed" the left-hand side is |B|_{1k} with
    b_{ij} = |A_(i..i+n-2, n+j)|_{n+j,n}, the display as published.  That
    reading only survives for commuting entries (d = 1): transposing the
    source theorem moved the quasiminor windows without adjusting the
    quasideterminant conventions.  Under variant="corrected" the window is
    indexed by the column and the quasideterminant boxes the bottom-left
    corner, |B|_{k1} with b_{ij} = |A_(j..j+n-2, n+i)|_{n+i,n}, which holds
    for matrix entries of any size.

    Singular draws are retried with incremented seeds, at most max_reseed
    times.
    """
    if not (1 <= k <= n):
        raise ValueError("need 1 <= k <= n")
    if variant not in ("printed", "corrected"):
        raise ValueError("variant must be 'printed' or 'corrected'")
    if max_reseed is None:
        max_reseed = max_reseed_default()
    for attempt in range(max_reseed + 1):
        rng = random.Random(seed + attempt)
        A = [[random_mat(rng, d) for _ in range(n)] for _ in range(2 * n)]

        def quasiminor(rows: list[int], pos: int, q: int) -> MatValue:
            # pos is the 1-indexed position of the boxed row within the list;
            # the list may repeat a row label, in which case the block is a
            # legitimate zero of the identity, not a sampling failure.
            sub = submatrix_rows(A, rows)
            return block_quasidet(sub, pos, q)

        try:
            if variant == "printed":
                B = [
                    [
                        quasiminor(list(range(i, i + n - 1)) + [n + j], n, n)
                        for j in range(1, k + 1)
                    ]
                    for i in range(1, k + 1)
                ]
                lhs = block_quasidet(B, 1, k)
            else:
                B = [
                    [
                        quasiminor(list(range(j, j + n - 1)) + [n + i], n, n)
                        for j in range(1, k + 1)
                    ]
                    for i in range(1, k + 1)
                ]
                lhs = block_quasidet(B, k, 1)
            rows1 = list(range(k, n)) + list(range(n + 1, n + k + 1))
            f1 = quasiminor(rows1, len(rows1), n)
            rows2 = list(range(k, n + k))
            f2 = quasiminor(rows2, rows2.index(n) + 1, n)
            f3 = quasiminor(list(range(1, n + 1)), n, n)
            rhs = f1 * f2.inverse() * f3
        except SingularMinor:
            continue
        return lhs == rhs
    raise ExhaustedRetries(f"no nonsingular sample in {max_reseed + 1} draws")
