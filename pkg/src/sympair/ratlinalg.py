"""Exact dense linear algebra over the rationals.

Matrices are tuples of tuples of Fraction, vectors are tuples of Fraction.
Everything in this package works at desk scale (dimension <= ~16), so plain
Gaussian elimination is always adequate.  Floating point is never used.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(e) for e in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def zeros(n: int, m: int) -> Mat:
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Mat, b: Mat) -> Mat:
    if len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_vec(a: Mat, v: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, v) for row in a)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((Fraction(x) * Fraction(y) for x, y in zip(u, v)), Fraction(0))


def scale(a: Mat, c) -> Mat:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_eq(a: Mat, b: Mat) -> bool:
    return a == b


def det(a: Mat) -> Fraction:
    n = len(a)
    rows = [list(r) for r in a]
    d = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            d = -d
        d *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, n):
            f = rows[r][col] * inv
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return d


def is_invertible(a: Mat) -> bool:
    return len(a) == len(a[0]) and det(a) != 0


def inverse(a: Mat) -> Mat:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    aug = [list(r) + [Fraction(1 if i == j else 0) for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is not invertible")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rref(rows: Sequence[Sequence], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (reduced rows, pivot column indices)."""
    work = [[Fraction(x) for x in row] for row in rows]
    if any(len(r) != width for r in work):
        raise ValueError("row width mismatch")
    pivots: list[int] = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = Fraction(1) / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def kernel_basis(rows: Sequence[Sequence], width: int) -> list[Vec]:
    """Basis of the right kernel {x : R x = 0} of the rows, as rational vectors."""
    reduced, pivots = rref(rows, width)
    free = [c for c in range(width) if c not in pivots]
    basis: list[Vec] = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def rank(rows: Sequence[Sequence], width: int) -> int:
    return len(rref(rows, width)[1])


def random_invertible(rng, size: int, spread: int = 2) -> Mat:
    """Random invertible matrix with small integer entries.

    Built as a product of unit lower- and upper-triangular factors, so the
    determinant is 1 and entries stay moderate.
    """
    lower = tuple(
        tuple(
            Fraction(rng.randint(-spread, spread)) if i > j else Fraction(1 if i == j else 0)
            for j in range(size)
        )
        for i in range(size)
    )
    upper = tuple(
        tuple(
            Fraction(rng.randint(-spread, spread)) if i < j else Fraction(1 if i == j else 0)
            for j in range(size)
        )
        for i in range(size)
    )
    return mat_mul(lower, upper)


def primitive_integer(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector.

    The first nonzero entry is made positive so the output is canonical up
    to sign of the input ray.
    """
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        return tuple(0 for _ in fr)
    denom = 1
    for x in fr:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
