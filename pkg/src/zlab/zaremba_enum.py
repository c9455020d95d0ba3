"""Enumeration of the bounded-quotient fraction sets F_M(Q).

F_M(Q) holds the rationals ``u/v`` in [0, 1] with ``v <= Q`` whose canonical
expansion has every partial quotient ``<= M``.  Both endpoints always belong.
With ``twin=True`` a fraction also qualifies when only its twin expansion
``[.., b_s - 1, 1]`` is bounded, which is what makes F_1 nontrivial.

All traversals walk the continuant tree depth first with children
``b = 1..M`` in increasing order, pruning once ``q_s > Q``.
"""

from __future__ import annotations

import csv
from bisect import bisect_left
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence, TextIO

import numpy as np

from .cont_frac import CFExpansion, cf_to_matrix
from .numtheory import require_prime
from .sl2_group import GroupSet

DEFAULT_MAX_MEMBERS = 5_000_000


class ResourceLimitError(RuntimeError):
    pass


def _check_args(M: int, Q: int) -> None:
    if M < 1:
        raise ValueError("M must be >= 1")
    if Q < 1:
        raise ValueError("Q must be >= 1")


def iter_expansions(M: int, Q: int, twin: bool = False) -> Iterator[CFExpansion]:
    """Yield one bounded expansion per non-endpoint member of F_M(Q).

    Canonical members come with their canonical expansion.  Under ``twin`` the
    extra members (canonical last quotient ``M + 1``) come as ``[.., M, 1]``.
    """
    _check_args(M, Q)
    # (q_prev, q_cur, quotients)
    stack: list[tuple[int, int, CFExpansion]] = [(0, 1, ())]
    while stack:
        qp, qc, cf = stack.pop()
        children = []
        for b in range(1, M + 1):
            q = b * qc + qp
            if q > Q:
                break
            child = cf + (b,)
            if b >= 2 or (twin and len(cf) >= 1 and cf[-1] == M):
                yield child
            children.append((qc, q, child))
        stack.extend(reversed(children))


def count_fractions(M: int, Q: int, twin: bool = False) -> int:
    """``|F_M(Q)|`` without materialising the set.

    Only continuant pairs ``(q_{s-1}, q_s)`` are tracked; a node is pushed only
    if it has at least one child inside the bound.
    """
    _check_args(M, Q)
    total = 2
    # (q_prev, q_cur, last quotient == M)
    stack = [(0, 1, False)]
    while stack:
        qp, qc, last_is_m = stack.pop()
        top = min(M, (Q - qp) // qc)
        if top < 1:
            continue
        if top >= 2:
            total += top - 1
        if twin and last_is_m:
            total += 1  # the child b = 1 closes a twin [.., M, 1]
        for b in range(1, top + 1):
            q = b * qc + qp
            if q + qc <= Q:
                stack.append((qc, q, b == M))
    return total


@dataclass(frozen=True)
class ZarembaSet:
    M: int
    Q: int
    members: tuple[Fraction, ...]  # sorted by value
    twin: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, f) -> bool:
        i = bisect_left(self.members, f)
        return i < len(self.members) and self.members[i] == f

    def write_csv(self, fh: TextIO) -> None:
        """Members as ``u,v`` rows in increasing order."""
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["u", "v"])
        for f in self.members:
            w.writerow([f.numerator, f.denominator])


def enumerate_fractions(M: int, Q: int, twin: bool = False,
                        max_members: int = DEFAULT_MAX_MEMBERS) -> ZarembaSet:
    _check_args(M, Q)
    members = {Fraction(0), Fraction(1)}
    for cf in iter_expansions(M, Q, twin):
        m = cf_to_matrix(cf)
        members.add(Fraction(m.p_cur, m.q_cur))
        if len(members) > max_members:
            raise ResourceLimitError(
                f"F_{M}({Q}) has more than {max_members} members; raise max_members")
    return ZarembaSet(M, Q, tuple(sorted(members)), twin)


# ---------------------------------------------------------------------------
# parity split into matrix sets


@dataclass(frozen=True)
class ParitySplit:
    M: int
    Q: int
    p: int
    even: GroupSet
    odd: GroupSet
    even_expansions: tuple[CFExpansion, ...]
    odd_expansions: tuple[CFExpansion, ...]
    expansions: dict[int, tuple[CFExpansion, ...]] = field(repr=False)  # code -> expansions


def split_parity(M: int, Q: int, p: int, nonzero_entries: bool = False,
                 regular_only: bool = False) -> ParitySplit:
    """Split the canonical matrices of F_M(Q) \\ {0, 1} by parity of length.

    Even-length matrices have determinant 1 and lie in SL_2(F_p); odd ones have
    determinant -1.  The optional filters drop matrices with an entry divisible
    by ``p`` or with trace in {0, 2, -2} mod p.
    """
    require_prime(p)
    even_cf: list[CFExpansion] = []
    odd_cf: list[CFExpansion] = []
    even_codes: list[int] = []
    odd_codes: list[int] = []
    by_code: dict[int, list[CFExpansion]] = {}
    for cf in iter_expansions(M, Q):
        m = cf_to_matrix(cf)
        a, b, c, d = (x % p for x in m.entries())
        if nonzero_entries and 0 in (a, b, c, d):
            continue
        if regular_only and (a + d) % p in {0, 2 % p, (-2) % p}:
            continue
        code = ((a * p + b) * p + c) * p + d
        if len(cf) % 2 == 0:
            even_cf.append(cf)
            even_codes.append(code)
        else:
            odd_cf.append(cf)
            odd_codes.append(code)
        by_code.setdefault(code, []).append(cf)

    return ParitySplit(M, Q, p, GroupSet(p, even_codes), GroupSet(p, odd_codes),
                       tuple(even_cf), tuple(odd_cf),
                       {k: tuple(v) for k, v in by_code.items()})


def zaremba_matrix_set(M: int, p: int) -> GroupSet:
    """The even-length matrix set of F_M(p - 1) in SL_2(F_p)."""
    return split_parity(M, p - 1, p).even


# ---------------------------------------------------------------------------
# dimension estimate


@dataclass(frozen=True)
class DimensionEstimate:
    M: int
    sample_Qs: tuple[int, ...]
    counts: tuple[int, ...]
    w_hat: float
    residual: float  # RMS of the log-log fit
    degenerate: bool = False


def estimate_dimension(M: int, Qs: Sequence[int], twin: bool = False) -> DimensionEstimate:
    """Least-squares slope of ``log |F_M(Q)|`` against ``2 log Q``."""
    Qs = tuple(int(q) for q in Qs)
    if len(Qs) < 3:
        raise ValueError("need at least 3 sample points")
    if any(q < 16 for q in Qs):
        raise ValueError("every sample Q must be >= 16")
    if any(b <= a for a, b in zip(Qs, Qs[1:])):
        raise ValueError("sample Qs must be strictly increasing")
    counts = tuple(count_fractions(M, q, twin) for q in Qs)
    if len(set(counts)) == 1:
        return DimensionEstimate(M, Qs, counts, 0.0, 0.0, degenerate=True)
    x = 2 * np.log(np.array(Qs, dtype=float))
    y = np.log(np.array(counts, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return DimensionEstimate(M, Qs, counts, float(min(1.0, max(0.0, slope))), resid)


def dyadic(lo_exp: int, hi_exp: int) -> list[int]:
    return [2 ** k for k in range(lo_exp, hi_exp + 1)]


def growth_ratios(M: int, Qs: Sequence[int], twin: bool = False) -> list[float]:
    """``count(M, 2Q) / count(M, Q)`` for each ``Q``."""
    return [count_fractions(M, 2 * q, twin) / count_fractions(M, q, twin) for q in Qs]


def predicted_ratio(w_hat: float) -> float:
    return math.pow(2.0, 2 * w_hat)
