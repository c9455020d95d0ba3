"""Exact finite continued fractions, continuants and their 2x2 matrices.

An expansion is a tuple of positive partial quotients ``(b_1, ..., b_s)``
standing for ``[0; b_1, ..., b_s]``.  Canonical expansions end in a quotient
``>= 2``; every rational in (0, 1) also has a twin ending in ``1``.

The endpoints use fixed conventions: ``0/1`` is the empty expansion and
``1/1`` is the reserved marker :data:`UNIT` = ``(1,)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Union

CFExpansion = tuple[int, ...]
FractionLike = Union[Fraction, tuple[int, int]]

EMPTY: CFExpansion = ()
UNIT: CFExpansion = (1,)


def as_fraction(f: FractionLike) -> Fraction:
    """Coerce ``f`` to a Fraction in [0, 1].

    Pairs ``(num, den)`` must already be in lowest terms.
    """
    if isinstance(f, Fraction):
        frac = f
    else:
        num, den = f
        if den == 0:
            raise ZeroDivisionError("denominator is zero")
        if den < 0 or num < 0:
            raise ValueError(f"expected a non-negative pair, got {num}/{den}")
        if gcd(num, den) != 1:
            raise ValueError(f"{num}/{den} is not in lowest terms")
        frac = Fraction(num, den)
    if not 0 <= frac <= 1:
        raise ValueError(f"{frac} is outside [0, 1]")
    return frac


def expand(f: FractionLike) -> CFExpansion:
    """Canonical expansion of ``f`` by the Euclidean algorithm.

    >>> expand(Fraction(5, 7))
    (1, 2, 2)
    """
    if isinstance(f, tuple) and len(f) == 2 and 0 < f[0] < f[1] and gcd(f[0], f[1]) == 1:
        num, den = f  # fast path for a reduced interior pair
    else:
        frac = as_fraction(f)
        if frac == 0:
            return EMPTY
        if frac == 1:
            return UNIT
        num, den = frac.numerator, frac.denominator
    quotients = []
    while num:
        b, r = divmod(den, num)
        quotients.append(b)
        den, num = num, r
    return tuple(quotients)


def evaluate(cf: Sequence[int]) -> Fraction:
    """Fold ``[0; b_1, ..., b_s]`` back into a Fraction."""
    if cf and min(cf) < 1:
        _check_quotients(cf)
    num, den = 0, 1
    for b in reversed(cf):
        num, den = den, b * den + num
    return Fraction(num, den)


def continuant(b: Sequence[int]) -> int:
    """K(b_1..b_n) with K() = 1 and K_n = b_n K_{n-1} + K_{n-2}."""
    k_prev, k = 0, 1
    for x in b:
        k_prev, k = k, x * k + k_prev
    return k


def is_canonical(cf: Sequence[int]) -> bool:
    return len(cf) == 0 or (all(b >= 1 for b in cf) and cf[-1] >= 2)


def twin(cf: Sequence[int]) -> CFExpansion:
    """The other expansion of the same rational.

    ``[.., b]`` with ``b >= 2`` maps to ``[.., b - 1, 1]`` and back.
    """
    cf = tuple(cf)
    if not cf:
        raise ValueError("0/1 has no twin expansion")
    if cf[-1] >= 2:
        return cf[:-1] + (cf[-1] - 1, 1)
    if len(cf) == 1:
        raise ValueError("the marker for 1/1 has no twin")
    return cf[:-2] + (cf[-2] + 1,)


def bounded_canonical(f: FractionLike, M: int) -> bool:
    """All quotients of the canonical expansion are at most ``M``."""
    frac = as_fraction(f)
    if frac in (0, 1):
        return True
    return max(expand(frac)) <= M


def bounded_either_twin(f: FractionLike, M: int) -> bool:
    """Some expansion of ``f`` (canonical or twin) has quotients <= ``M``."""
    frac = as_fraction(f)
    if frac in (0, 1):
        return True
    cf = expand(frac)
    return max(cf) <= M or max(twin(cf)) <= M


class Mat2(NamedTuple):
    """Integer matrix ``(p_prev p_cur | q_prev q_cur)`` of a length-``length`` expansion.

    ``length == 0`` marks the identity convention for the empty expansion.
    """

    p_prev: int
    p_cur: int
    q_prev: int
    q_cur: int
    length: int

    @property
    def det(self) -> int:
        return self.p_prev * self.q_cur - self.p_cur * self.q_prev

    @property
    def trace(self) -> int:
        return self.p_prev + self.q_cur

    def entries(self) -> tuple[int, int, int, int]:
        """Row-major ``(a, b, c, d)``."""
        return (self.p_prev, self.p_cur, self.q_prev, self.q_cur)

    def __matmul__(self, other: Mat2) -> Mat2:
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h,
                    self.length + other.length)


IDENTITY = Mat2(1, 0, 0, 1, 0)


def quotient_matrix(b: int) -> Mat2:
    return Mat2(0, 1, 1, b, 1)


def cf_to_matrix(cf: Sequence[int]) -> Mat2:
    """Left-to-right product of ``(0 1 | 1 b_j)``.

    The result is ``(p_{s-1} p_s | q_{s-1} q_s)``; the empty expansion gives
    :data:`IDENTITY`, recognisable by ``length == 0``.
    """
    if cf and min(cf) < 1:
        _check_quotients(cf)
    p_prev, p_cur, q_prev, q_cur = 1, 0, 0, 1
    for b in cf:
        p_prev, p_cur, q_prev, q_cur = p_cur, b * p_cur + p_prev, q_cur, b * q_cur + q_prev
    return Mat2(p_prev, p_cur, q_prev, q_cur, len(cf))


def cyclic_trace(cf: Sequence[int]) -> int:
    """Cyclical continuant ``q_s + p_{s-1}``, the trace of the matrix of ``cf``."""
    if not cf:
        raise ValueError("cyclic trace needs a nonempty expansion")
    return cf_to_matrix(cf).trace


def convergents(cf: Sequence[int]) -> list[Fraction]:
    """``p_k/q_k`` for k = 1..s."""
    out = []
    p_prev, p_cur, q_prev, q_cur = 1, 0, 0, 1
    for b in cf:
        p_prev, p_cur = p_cur, b * p_cur + p_prev
        q_prev, q_cur = q_cur, b * q_cur + q_prev
        out.append(Fraction(p_cur, q_cur))
    return out


def format_cf(cf: Iterable[int]) -> str:
    return "[0;" + ",".join(str(b) for b in cf) + "]"


def parse_fraction(text: str) -> Fraction:
    """Parse ``"u/v"`` strictly: the pair must be coprime."""
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"expected u/v, got {text!r}")
    return as_fraction((int(num), int(den)))


def _check_quotients(cf: Sequence[int]) -> None:
    bad = [b for b in cf if b < 1]
    if bad:
        raise ValueError(f"partial quotients must be >= 1, got {bad[0]}")
