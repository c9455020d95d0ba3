"""Exact rational linear algebra on small dense matrices.

Matrices are lists of rows of ints or Fractions.  Only what the Fourier
certificates need: products, rank, definiteness tests and a spectral radius
bracket for symmetric matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(m) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(x: Sequence[Sequence], y: Sequence[Sequence]) -> Matrix:
    yt = transpose(y)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in yt] for row in x]


def gram(m: Sequence[Sequence]) -> Matrix:
    """``m^T m``."""
    return matmul(transpose(m), m)


def frobenius_sq(m: Sequence[Sequence]) -> Fraction:
    return sum((Fraction(x) * x for row in m for x in row), Fraction(0))


def trace(m: Sequence[Sequence]) -> Fraction:
    return sum((Fraction(m[i][i]) for i in range(len(m))), Fraction(0))


def rank(m: Sequence[Sequence]) -> int:
    a = to_fractions(m)
    rows, cols = len(a), len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def shift(m: Sequence[Sequence], t) -> Matrix:
    """``t I - m``."""
    n = len(m)
    return [[(Fraction(t) if i == j else Fraction(0)) - m[i][j] for j in range(n)] for i in range(n)]


def _definiteness(m: Sequence[Sequence], strict: bool) -> bool:
    a = to_fractions(m)
    active = list(range(len(a)))
    while active:
        piv = None
        for i in active:
            if a[i][i] < 0:
                return False
            if a[i][i] > 0 and piv is None:
                piv = i
        if piv is None:
            # zero diagonal: semidefinite only if the whole block vanishes
            return not strict and all(a[i][j] == 0 for i in active for j in active)
        active.remove(piv)
        for i in active:
            f = a[i][piv] / a[piv][piv]
            if f:
                for j in active:
                    a[i][j] -= f * a[piv][j]
    return True


def is_psd(m: Sequence[Sequence]) -> bool:
    """Positive semidefinite test for a symmetric rational matrix."""
    return _definiteness(m, strict=False)


def is_pd(m: Sequence[Sequence]) -> bool:
    return _definiteness(m, strict=True)


def largest_eigenvalue_below(sym: Sequence[Sequence], t) -> bool:
    """Exact test of ``lambda_max(sym) < t``."""
    return is_pd(shift(sym, t))


def largest_eigenvalue_is(sym: Sequence[Sequence], t) -> bool:
    """Exact test of ``lambda_max(sym) == t``: ``tI - sym`` is PSD and singular."""
    s = shift(sym, t)
    return is_psd(s) and rank(s) < len(s)


def largest_eigenvalue_bracket(sym: Sequence[Sequence], rel_tol: float = 1e-12) -> tuple[Fraction, Fraction]:
    """Rational ``(lo, hi]`` containing ``lambda_max`` of a PSD matrix, by bisection."""
    lo, hi = Fraction(0), max(trace(sym), Fraction(0))
    if hi == 0:
        return Fraction(0), Fraction(0)
    while hi - lo > rel_tol * hi:
        mid = (lo + hi) / 2
        # snap to a short rational so the Fractions do not balloon
        mid = mid.limit_denominator(1 << 40)
        if not lo < mid < hi:
            break
        if is_psd(shift(sym, mid)):
            hi = mid
        else:
            lo = mid
    return lo, hi


def exact_sqrt(x: Fraction) -> Fraction | None:
    """Square root of a non-negative rational when it is rational, else None."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative")
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None
