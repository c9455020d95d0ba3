"""Fourier analysis on SL_2(F_q) through its action on the projective line.

The permutation representation on the ``q + 1`` points splits as trivial plus
Steinberg.  The Steinberg block of a transform is obtained basis-free by
projecting with ``I - J/(q+1)``; all matrices here are exact (ints and
Fractions), so equalities are checked bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Optional, Union

import numpy as np

from . import exact
from .numtheory import require_prime
from .sl2_group import (GroupSet, ModMat2, act_on_points, group_order, sl2,
                        standard_borel)

Function = Union[GroupSet, Mapping[ModMat2, Union[int, Fraction]]]


class ProjPoint(NamedTuple):
    """Canonical ``(x:1)`` or ``(1:0)``."""

    x: int
    y: int

    @classmethod
    def of(cls, x: int, y: int, q: int) -> ProjPoint:
        x, y = x % q, y % q
        if y:
            return cls(x * pow(y, -1, q) % q, 1)
        if x == 0:
            raise ValueError("(0:0) is not a projective point")
        return cls(1, 0)

    def index(self, q: int) -> int:
        return q if self.y == 0 else self.x

    @classmethod
    def from_index(cls, i: int, q: int) -> ProjPoint:
        return cls(1, 0) if i == q else cls(i, 1)


def points(q: int) -> list[ProjPoint]:
    return [ProjPoint.from_index(i, q) for i in range(q + 1)]


def perm_action(g: ModMat2, pt: ProjPoint) -> ProjPoint:
    """Fractional-linear action ``(x:y) -> (ax + by : cx + dy)``."""
    return ProjPoint.of(g.a * pt.x + g.b * pt.y, g.c * pt.x + g.d * pt.y, g.p)


def perm_matrix(g: ModMat2) -> np.ndarray:
    """``P(g)`` with ``P[g.i, i] = 1``, so that ``P(gh) = P(g) P(h)``."""
    q = g.p
    img = act_on_points(np.array([[g.code]]), np.arange(q + 1)[None, :], q)[0]
    P = np.zeros((q + 1, q + 1), dtype=np.int64)
    P[img, np.arange(q + 1)] = 1
    return P


def _support(f: Function, q: Optional[int]) -> tuple[int, np.ndarray, list]:
    if isinstance(f, GroupSet):
        return f.p, f.codes, [1] * len(f)
    items = sorted(f.items())
    if not items:
        if q is None:
            raise ValueError("modulus needed for the zero function")
        return q, np.empty(0, dtype=np.int64), []
    p = items[0][0].p
    return p, np.array([g.code for g, _ in items], dtype=np.int64), [v for _, v in items]


@dataclass(frozen=True)
class FourierImage:
    """``sum_g f(g) P(g)`` on the permutation representation."""

    q: int
    matrix: np.ndarray  # object dtype, exact
    total: Fraction  # sum of f, the trivial block
    sq_mass: Fraction  # sum of |f|^2

    def steinberg(self) -> exact.Matrix:
        """``Q F Q`` with ``Q = I - J/(q+1)``."""
        n = self.q + 1
        F = exact.to_fractions(self.matrix.tolist())
        row = [sum(F[i], Fraction(0)) / n for i in range(n)]
        col = [sum((F[i][j] for i in range(n)), Fraction(0)) / n for j in range(n)]
        tot = sum(row, Fraction(0)) / n
        return [[F[i][j] - row[i] - col[j] + tot for j in range(n)] for i in range(n)]

    def column_sums(self) -> list[Fraction]:
        return [Fraction(sum(self.matrix[:, j])) for j in range(self.q + 1)]


def fourier(f: Function, q: Optional[int] = None) -> FourierImage:
    """Transform of ``f`` (a set's indicator or a mapping element -> value)."""
    q, codes, vals = _support(f, q)
    n = q + 1
    F = np.zeros((n, n), dtype=object)
    F[:] = 0
    if len(codes):
        img = act_on_points(codes[:, None], np.arange(n)[None, :], q)
        for k, v in enumerate(vals):
            F[img[k], np.arange(n)] += v
    total = sum((Fraction(v) for v in vals), Fraction(0))
    sq = sum((Fraction(v) * v for v in vals), Fraction(0))
    return FourierImage(q, F, total, sq)


def convolve(f: Mapping[ModMat2, object], g: Mapping[ModMat2, object]) -> dict[ModMat2, object]:
    """``(f*g)(x) = sum_y f(y) g(y^{-1} x)`` by direct double sum."""
    out: dict[ModMat2, object] = {}
    for y, fy in f.items():
        for z, gz in g.items():
            x = y @ z
            out[x] = out.get(x, 0) + fy * gz
    return {k: v for k, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# norms


@dataclass(frozen=True)
class NormReport:
    hs_norm: float
    op_norm: float
    rank: int
    wiener_contrib: float
    hs_norm_sq: Fraction
    op_norm_sq: Optional[Fraction]  # exact when certified, else None


def block_norms(S: exact.Matrix, q: int, certify: Optional[Fraction] = None) -> NormReport:
    """Norms of a Steinberg block.  ``certify`` is a candidate exact ``op_norm**2``."""
    hs_sq = exact.frobenius_sq(S)
    G = exact.gram(S)
    op_sq = None
    if certify is not None and exact.largest_eigenvalue_is(G, certify):
        op_sq = Fraction(certify)
        op = math.sqrt(op_sq)
    else:
        lo, hi = exact.largest_eigenvalue_bracket(G)
        op = math.sqrt((lo + hi) / 2)
    hs = math.sqrt(hs_sq)
    return NormReport(hs, op, exact.rank(S), q * hs / group_order(q), hs_sq, op_sq)


# ---------------------------------------------------------------------------
# Borel certificates


@dataclass(frozen=True)
class BorelCertificate:
    q: int
    borel_order: int
    group_order: int
    norms: NormReport
    hs_norm: Optional[Fraction]  # exact sqrt of hs_norm_sq
    parseval_lhs: Fraction  # sum of |B(g)|^2 = |B|
    parseval_two_block: Fraction  # (|B|^2 + q ||S||^2) / |G|
    parseval_closed_form: Fraction  # |B|^2 (1+q) / |G|
    wiener: Optional[Fraction]  # (|B| + q ||S||) / |G|

    @property
    def ok(self) -> bool:
        b = self.borel_order
        return (self.hs_norm == b and self.norms.op_norm_sq == b * b and self.norms.rank == 1
                and self.parseval_lhs == self.parseval_two_block == self.parseval_closed_form == b
                and self.wiener == 1)


def parseval_two_block(F: FourierImage) -> tuple[Fraction, Fraction]:
    """``(sum |f|^2, (|sum f|^2 + q ||St||^2)/|G|)``.

    Equal exactly when every other irreducible block of ``f`` vanishes.
    """
    S = F.steinberg()
    rhs = (F.total ** 2 + F.q * exact.frobenius_sq(S)) / group_order(F.q)
    return F.sq_mass, rhs


def borel_certificates(q: int) -> BorelCertificate:
    require_prime(q, odd=True)
    B = standard_borel(q)
    F = fourier(B)
    S = F.steinberg()
    b = len(B)
    norms = block_norms(S, q, certify=Fraction(b * b))
    hs = exact.exact_sqrt(norms.hs_norm_sq)
    lhs, two = parseval_two_block(F)
    G = group_order(q)
    wiener = None if hs is None else (abs(F.total) + q * hs) / G
    return BorelCertificate(q, b, G, norms, hs, lhs, two, Fraction(b * b * (1 + q), G), wiener)


def reconstruct_two_block(F: FourierImage, g: ModMat2) -> Fraction:
    """``(sum f + q tr(rho_St(g^{-1}) S)) / |G|``: the inversion formula cut to two blocks."""
    S = F.steinberg()
    q = F.q
    img = act_on_points(np.array([[g.code]]), np.arange(q + 1)[None, :], q)[0]
    # tr(P(g^{-1}) S) = sum_j S[g.j, j]
    tr = sum((S[int(img[j])][j] for j in range(q + 1)), Fraction(0))
    return (F.total + q * tr) / group_order(q)


# ---------------------------------------------------------------------------
# dimensions


@dataclass(frozen=True)
class InventoryReport:
    q: int
    families: tuple[tuple[str, int, int], ...]  # (name, how many, dimension)
    total: int
    group_order: int

    @property
    def ok(self) -> bool:
        return self.total == self.group_order

    @property
    def count(self) -> int:
        return sum(n for _, n, _ in self.families)


def irreducible_families(q: int) -> tuple[tuple[str, int, int], ...]:
    return (
        ("trivial", 1, 1),
        ("principal", (q - 3) // 2, q + 1),
        ("steinberg", 1, q),
        ("half principal", 2, (q + 1) // 2),
        ("half discrete", 2, (q - 1) // 2),
        ("discrete", (q - 1) // 2, q - 1),
    )


def dimension_inventory(q: int) -> InventoryReport:
    require_prime(q, odd=True)
    fams = irreducible_families(q)
    return InventoryReport(q, fams, sum(n * d * d for _, n, d in fams), group_order(q))


def min_nontrivial_dimension(q: int) -> int:
    return (q - 1) // 2


# ---------------------------------------------------------------------------
# spectral gap and mixing


@dataclass(frozen=True)
class SpectralGapReport:
    q: int
    size: int
    op_norm: float  # Steinberg block
    bound: float  # sqrt(|A| |G| / d_min)
    below_bound: bool  # exact comparison
    n: Optional[int]
    hypothesis: Optional[bool]  # |A| >= 2 (q+1)^2 q^{2/n}
    mixing_lower: Optional[float]  # |A|^n/|G| - bound^{n-2} |A|
    mixing_positive: Optional[bool]
    power_is_group: Optional[bool]  # only computed when the mixing bound is positive

    @property
    def ok(self) -> bool:
        return self.below_bound and (not self.mixing_positive or bool(self.power_is_group))


def lemma_size_threshold(q: int, n: int) -> float:
    return 2 * (q + 1) ** 2 * q ** (2 / n)


def spectral_gap_check(A: GroupSet, n: Optional[int] = None) -> SpectralGapReport:
    """Steinberg norm of ``A`` against the Parseval bound, and the mixing estimate for ``A^n``."""
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    q = A.p
    G = group_order(q)
    dmin = min_nontrivial_dimension(q)
    bound_sq = Fraction(len(A) * G, dmin)
    S = fourier(A).steinberg()
    gram = exact.gram(S)
    below = exact.largest_eigenvalue_below(gram, bound_sq)
    lo, hi = exact.largest_eigenvalue_bracket(gram)
    op = math.sqrt((lo + hi) / 2)
    hyp = lower = positive = full = None
    if n is not None:
        a = len(A)
        hyp = a >= lemma_size_threshold(q, n)
        main = Fraction(a ** n, G)
        # (bound_sq)^{(n-2)/2} |A| compared through squares to stay exact
        positive = main ** 2 > bound_sq ** (n - 2) * a * a
        lower = float(main) - float(bound_sq) ** ((n - 2) / 2) * a
        if positive:
            full = len(A.power(n)) == G
    return SpectralGapReport(q, len(A), op, math.sqrt(bound_sq), below, n, hyp, lower, positive, full)


def full_group(q: int) -> GroupSet:
    return sl2(q)
