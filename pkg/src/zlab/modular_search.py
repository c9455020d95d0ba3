"""Denominators divisible by a prime with bounded partial quotients.

The main search is best-first over the continuant tree keyed on the exact
denominator ``q_s``, so the first admissible node popped has minimal ``q``.
Ties on ``q`` go to the smaller numerator.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .cont_frac import CFExpansion, Mat2, cf_to_matrix, evaluate, expand
from .numtheory import require_prime
from .sl2_group import ModMat2, PowerWitness, power_witness, standard_borel
from .zaremba_enum import split_parity


@dataclass(frozen=True)
class SearchRecord:
    p: int
    M: int
    q: int
    a: int
    cf: CFExpansion
    nodes_explored: int = field(default=0, compare=False)

    @property
    def exponent(self) -> float:
        return math.log(self.q) / math.log(self.p)

    def as_dict(self) -> dict:
        return {"p": self.p, "M": self.M, "q": self.q, "a": self.a, "cf": list(self.cf),
                "exponent": self.exponent, "nodes_explored": self.nodes_explored}


@dataclass(frozen=True)
class SearchOutcome:
    p: int
    M: int
    cap: int
    record: Optional[SearchRecord]
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.record is not None


def default_cap(p: int) -> int:
    return p ** 4


def search_min_denominator(p: int, M: int, cap: Optional[int] = None) -> SearchOutcome:
    """Best-first search for the least ``q <= cap`` with ``p | q`` and a bounded ``a/q``."""
    require_prime(p)
    if M < 1:
        raise ValueError("M must be >= 1")
    cap = default_cap(p) if cap is None else cap
    # (q_s, p_s, quotients, q_{s-1}, p_{s-1})
    heap: list[tuple[int, int, CFExpansion, int, int]] = [(1, 0, (), 0, 1)]
    explored = 0
    while heap:
        q, a, cf, q_prev, a_prev = heapq.heappop(heap)
        explored += 1
        if cf and cf[-1] >= 2 and q % p == 0:
            return SearchOutcome(p, M, cap, SearchRecord(p, M, q, a, cf, explored), explored)
        for b in range(1, M + 1):
            q_new = b * q + q_prev
            if q_new > cap:
                break
            heapq.heappush(heap, (q_new, b * a + a_prev, cf + (b,), q, a))
    return SearchOutcome(p, M, cap, None, explored)


def min_modular_denominator(p: int, M: int, cap: Optional[int] = None) -> Optional[SearchRecord]:
    return search_min_denominator(p, M, cap).record


def verify_record(rec: SearchRecord) -> bool:
    """Re-expand ``a/q`` from scratch and check every record invariant."""
    if rec.q % rec.p or math.gcd(rec.a, rec.q) != 1:
        return False
    cf = expand(Fraction(rec.a, rec.q))
    return cf == tuple(rec.cf) and max(cf) <= rec.M and evaluate(rec.cf) == Fraction(rec.a, rec.q)


def brute_force_min(p: int, M: int, limit: int) -> Optional[tuple[int, int]]:
    """Least ``(q, a)`` found by scanning every multiple of ``p`` up to ``limit``."""
    for q in range(p, limit + 1, p):
        for a in range(1, q):
            if math.gcd(a, q) == 1 and max(expand((a, q))) <= M:
                return q, a
    return None


@dataclass(frozen=True)
class ExponentTable:
    M: int
    cap: Optional[int]
    outcomes: tuple[SearchOutcome, ...]  # sorted by p

    @property
    def records(self) -> list[SearchRecord]:
        return [o.record for o in self.outcomes if o.record is not None]

    @property
    def missing(self) -> list[int]:
        return [o.p for o in self.outcomes if o.record is None]

    @property
    def all_found(self) -> bool:
        return not self.missing

    @property
    def max_exponent(self) -> Optional[float]:
        recs = self.records
        return max(r.exponent for r in recs) if recs else None


def exponent_table(primes: Iterable[int], M: int, cap: Optional[int] = None) -> ExponentTable:
    primes = sorted(set(primes))
    for p in primes:
        require_prime(p)
    return ExponentTable(M, cap, tuple(search_min_denominator(p, M, cap) for p in primes))


# ---------------------------------------------------------------------------
# powers of the Zaremba matrix set meeting the Borel subgroup


class EmptyMatrixSet(ValueError):
    pass


@dataclass(frozen=True)
class PowerIntersection:
    n: int
    witness: ModMat2  # product, lower-left entry 0 mod p
    factors: tuple[CFExpansion, ...]  # expansions of the factors, left to right
    concatenated: CFExpansion
    integer_matrix: Mat2  # exact product (p_{S-1} p_S | q_{S-1} q_S)

    @property
    def v(self) -> int:
        """``q_{S-1}``, the continuant that vanishes mod p."""
        return self.integer_matrix.q_prev

    @property
    def u(self) -> int:
        return self.integer_matrix.p_prev

    @property
    def q_last(self) -> int:
        return self.integer_matrix.q_cur

    def truncated(self) -> CFExpansion:
        """Expansion of ``u/v``: the concatenation minus its last quotient."""
        return self.concatenated[:-1]


def power_intersect_search(p: int, M: int, n_max: int) -> Optional[PowerIntersection]:
    """Least ``n <= n_max`` with ``A^n`` meeting the standard Borel subgroup.

    ``A`` is the even-length matrix set of F_M(p - 1).  A witness product is
    factored back into elements of ``A`` and their expansions are concatenated
    to recover the integer matrix whose lower-left continuant is ``0 mod p``.
    """
    split = split_parity(M, p - 1, p)
    A = split.even
    if len(A) == 0:
        raise EmptyMatrixSet(f"no even-length expansions for M={M}, Q={p - 1}")
    hit: Optional[PowerWitness] = power_witness(A, n_max, standard_borel(p))
    if hit is None:
        return None
    factors = tuple(split.expansions[int(A.codes[i])][0] for i in hit.factor_index)
    concat = tuple(b for cf in factors for b in cf)
    return PowerIntersection(hit.n, hit.element, factors, concat, cf_to_matrix(concat))


# ---------------------------------------------------------------------------
# closed-form bounds on n


ALPHA_STAR = (-19 + math.sqrt(1801)) / 36


@dataclass(frozen=True)
class BoundEvaluation:
    w: float
    alpha: float
    n1: float
    n2: float
    n1_finite: bool
    n2_finite: bool
    alpha_star: float = ALPHA_STAR


def _ratio(num: float, den: float) -> tuple[float, bool]:
    if den <= 0:
        return math.inf, False
    return num / den, True


def evaluate_n_bounds(w: float, alpha: float) -> BoundEvaluation:
    """Both lower bounds on ``n`` as functions of the dimension ``w`` and exponent ``alpha``.

    A bound whose denominator is not positive is returned as ``inf`` with its
    ``*_finite`` flag cleared.
    """
    n1, ok1 = _ratio(w * (28 + 12 * alpha) - 6, w * (14 + 6 * alpha) - 13 - 6 * alpha)
    n2, ok2 = _ratio(2 * (w * (20 + 20 * alpha) - 6 * alpha), 3 * (w * (10 + 10 * alpha) - 10 - 9 * alpha))
    return BoundEvaluation(w, alpha, n1, n2, ok1, ok2)


def alpha_equation(w: float) -> tuple[float, float, float]:
    """Coefficients of the quadratic in ``alpha`` equating the two bounds."""
    return (120 * w * w - 12 * w - 72, 400 * w * w - 368 * w + 6, 280 * w * w + 180 - 500 * w)


def optimal_alpha(w: float) -> float:
    """Positive root of :func:`alpha_equation`; at ``w = 1`` this is ``ALPHA_STAR``."""
    a, b, c = alpha_equation(w)
    disc = b * b - 4 * a * c
    if a == 0 or disc < 0:
        raise ValueError(f"no real crossing for w={w}")
    return (-b + math.sqrt(disc)) / (2 * a)
