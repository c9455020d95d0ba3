"""Set combinatorics in SL_2(F_p).

Elements are packed into integer codes ``((a*p + b)*p + c)*p + d`` so that a
:class:`GroupSet` is just a sorted, deduplicated ``int64`` array.  Product
sets, representation counts and energies are computed with numpy on those
arrays; everything stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from .numtheory import require_prime

# Rows per chunk are chosen so a chunk of pairwise products stays near this size.
_CHUNK_PRODUCTS = 1 << 21


def group_order(p: int) -> int:
    return p ** 3 - p


# ---------------------------------------------------------------------------
# single elements


@dataclass(frozen=True, order=True)
class ModMat2:
    """``(a b | c d)`` mod p with entries reduced to ``0..p-1``.

    The determinant may be 1 (SL_2 proper) or -1; the latter only arises for
    continued-fraction matrices of odd length.
    """

    a: int
    b: int
    c: int
    d: int
    p: int = field(compare=False)

    def __post_init__(self):
        p = self.p
        for name in "abcd":
            v = getattr(self, name)
            if not 0 <= v < p:
                object.__setattr__(self, name, v % p)
        if (self.a * self.d - self.b * self.c) % p not in (1, p - 1):
            raise ValueError(f"determinant of {self.entries()} is not ±1 mod {p}")

    @classmethod
    def identity(cls, p: int) -> ModMat2:
        return cls(1, 0, 0, 1, p)

    @classmethod
    def from_code(cls, code: int, p: int) -> ModMat2:
        code, d = divmod(int(code), p)
        code, c = divmod(code, p)
        a, b = divmod(code, p)
        return cls(a, b, c, d, p)

    @property
    def code(self) -> int:
        return ((self.a * self.p + self.b) * self.p + self.c) * self.p + self.d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def _check(self, other: ModMat2) -> None:
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __matmul__(self, other: ModMat2) -> ModMat2:
        self._check(other)
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return ModMat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.p)

    @property
    def det(self) -> int:
        return 1 if (self.a * self.d - self.b * self.c) % self.p == 1 else -1

    def inverse(self) -> ModMat2:
        s = self.det
        return ModMat2(s * self.d, -s * self.b, -s * self.c, s * self.a, self.p)

    def __pow__(self, n: int) -> ModMat2:
        base = self if n >= 0 else self.inverse()
        out = ModMat2.identity(self.p)
        for _ in range(abs(n)):
            out = out @ base
        return out

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def is_regular(self) -> bool:
        """Trace outside {0, 2, -2}."""
        return self.trace not in {0, 2 % self.p, -2 % self.p}

    def is_central(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def in_unipotent(self) -> bool:
        return self.a == 1 and self.d == 1 and self.c == 0

    def in_diagonal(self) -> bool:
        return self.b == 0 and self.c == 0

    def stabilizes(self, point: int) -> bool:
        return act_on_points(np.array([self.code]), point, self.p)[0] == point

    def __repr__(self):
        return f"({self.a} {self.b} | {self.c} {self.d}) mod {self.p}"


# ---------------------------------------------------------------------------
# vectorised code arithmetic


def decode(codes: np.ndarray, p: int):
    codes = np.asarray(codes, dtype=np.int64)
    d = codes % p
    rest = codes // p
    c = rest % p
    rest //= p
    return rest // p, rest % p, c, d


def encode(a, b, c, d, p: int) -> np.ndarray:
    return ((np.asarray(a) * p + b) * p + c) * p + d


def mul_codes(x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    """Elementwise (broadcasting) product of coded matrices."""
    a, b, c, d = decode(x, p)
    e, f, g, h = decode(y, p)
    return encode((a * e + b * g) % p, (a * f + b * h) % p,
                  (c * e + d * g) % p, (c * f + d * h) % p, p)


def inv_codes(x: np.ndarray, p: int) -> np.ndarray:
    a, b, c, d = decode(x, p)
    s = (a * d - b * c) % p  # 1 or p-1, its own inverse
    return encode(s * d % p, (-s * b) % p, (-s * c) % p, s * a % p, p)


def trace_codes(x: np.ndarray, p: int) -> np.ndarray:
    a, _, _, d = decode(x, p)
    return (a + d) % p


def outer_mul(x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    """All products ``x_i y_j`` flattened in x-major order."""
    return mul_codes(np.asarray(x)[:, None], np.asarray(y)[None, :], p).ravel()


def _row_chunks(n_rows: int, n_cols: int) -> Iterator[slice]:
    step = max(1, _CHUNK_PRODUCTS // max(1, n_cols))
    for start in range(0, n_rows, step):
        yield slice(start, min(n_rows, start + step))


# ---------------------------------------------------------------------------
# projective line: point i < p is (i:1), point p is (1:0)


def act_on_points(codes: np.ndarray, point, p: int) -> np.ndarray:
    """Image of projective point(s) under each coded matrix (broadcasting)."""
    a, b, c, d = decode(codes, p)
    point = np.asarray(point)
    inf = point == p
    x = np.where(inf, 1, point)
    y = np.where(inf, 0, 1)
    u = (a * x + b * y) % p
    v = (c * x + d * y) % p
    inv = inverse_table(p)
    return np.where(v == 0, p, (u * inv[v]) % p)


def inverse_table(p: int) -> np.ndarray:
    """``t[x] = x^{-1} mod p`` for x != 0; ``t[0] = 0``."""
    t = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        t[x] = pow(x, -1, p)
    return t


def point_label(point: int, p: int) -> tuple[int, int]:
    return (1, 0) if point == p else (point, 1)


# ---------------------------------------------------------------------------
# sets


class GroupSet:
    """Immutable deduplicated subset of SL_2(F_p)."""

    __slots__ = ("p", "codes")

    def __init__(self, p: int, codes: Iterable[int] | np.ndarray = ()):
        self.p = p
        arr = np.unique(np.asarray(list(codes) if not isinstance(codes, np.ndarray) else codes,
                                   dtype=np.int64))
        arr.setflags(write=False)
        self.codes = arr

    @classmethod
    def from_matrices(cls, mats: Iterable[ModMat2], p: Optional[int] = None) -> GroupSet:
        mats = list(mats)
        if p is None:
            if not mats:
                raise ValueError("modulus needed for an empty set")
            p = mats[0].p
        for m in mats:
            if m.p != p:
                raise ValueError(f"modulus mismatch: {m.p} vs {p}")
        return cls(p, np.array([m.code for m in mats], dtype=np.int64))

    def __len__(self) -> int:
        return int(self.codes.size)

    def __iter__(self) -> Iterator[ModMat2]:
        for code in self.codes:
            yield ModMat2.from_code(int(code), self.p)

    def __contains__(self, g: ModMat2) -> bool:
        if g.p != self.p:
            return False
        i = np.searchsorted(self.codes, g.code)
        return bool(i < len(self.codes) and self.codes[i] == g.code)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupSet) and other.p == self.p
                and np.array_equal(self.codes, other.codes))

    def __hash__(self):
        return hash((self.p, self.codes.tobytes()))

    def __repr__(self):
        return f"GroupSet(p={self.p}, size={len(self)})"

    def _check(self, other: GroupSet) -> None:
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def contains_codes(self, codes: np.ndarray) -> np.ndarray:
        return np.isin(codes, self.codes, assume_unique=False)

    def inverse(self) -> GroupSet:
        return GroupSet(self.p, inv_codes(self.codes, self.p))

    def union(self, other: GroupSet) -> GroupSet:
        self._check(other)
        return GroupSet(self.p, np.union1d(self.codes, other.codes))

    def intersection(self, other: GroupSet) -> GroupSet:
        self._check(other)
        return GroupSet(self.p, np.intersect1d(self.codes, other.codes))

    def difference(self, other: GroupSet) -> GroupSet:
        self._check(other)
        return GroupSet(self.p, np.setdiff1d(self.codes, other.codes))

    def issubset(self, other: GroupSet) -> bool:
        return bool(np.isin(self.codes, other.codes).all())

    def translate(self, g: ModMat2, side: str = "left") -> GroupSet:
        gc = np.array([g.code])
        codes = mul_codes(gc, self.codes, self.p) if side == "left" else mul_codes(self.codes, gc, self.p)
        return GroupSet(self.p, codes)

    def product(self, other: GroupSet, saturate: bool = True) -> GroupSet:
        """``{xy : x in self, y in other}``.

        With ``saturate`` the loop stops as soon as the whole group is reached.
        """
        self._check(other)
        p = self.p
        if len(self) == 0 or len(other) == 0:
            return GroupSet(p)
        full = group_order(p)
        acc = np.empty(0, dtype=np.int64)
        for sl in _row_chunks(len(self), len(other)):
            acc = np.union1d(acc, outer_mul(self.codes[sl], other.codes, p))
            if saturate and acc.size == full:
                break
        return GroupSet(p, acc)

    def power(self, n: int, saturate: bool = True) -> GroupSet:
        if n < 1:
            raise ValueError("power needs n >= 1")
        out = self
        for _ in range(n - 1):
            if saturate and len(out) == group_order(self.p):
                break
            out = out.product(self, saturate=saturate)
        return out

    def traces(self) -> np.ndarray:
        return trace_codes(self.codes, self.p)

    def dump(self) -> list[tuple[int, int, int, int]]:
        """Sorted entry tuples, for diffing."""
        a, b, c, d = decode(self.codes, self.p)
        return [tuple(int(v) for v in row) for row in zip(a, b, c, d)]


def product_counts(x: np.ndarray, y: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Representation function ``r_{XY}``: distinct products and their multiplicities."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    keys, counts = [], []
    for sl in _row_chunks(len(x), len(y)):
        k, c = np.unique(outer_mul(x[sl], y, p), return_counts=True)
        keys.append(k)
        counts.append(c)
    if not keys:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    if len(keys) == 1:
        return keys[0], counts[0]
    allk = np.concatenate(keys)
    uniq, inv = np.unique(allk, return_inverse=True)
    return uniq, np.bincount(inv, weights=np.concatenate(counts)).astype(np.int64)


# ---------------------------------------------------------------------------
# named subgroups


def sl2(p: int) -> GroupSet:
    """All of SL_2(F_p)."""
    require_prime(p)
    inv = inverse_table(p)
    r = np.arange(p, dtype=np.int64)
    # a != 0: b, c free, d = (1 + bc)/a
    a, b, c = np.meshgrid(r[1:], r, r, indexing="ij")
    d = ((1 + b * c) % p) * inv[a] % p
    part1 = encode(a, b, c, d, p).ravel()
    # a == 0: b != 0, c = -1/b, d free
    b2, d2 = np.meshgrid(r[1:], r, indexing="ij")
    c2 = (-inv[b2]) % p
    part2 = encode(np.zeros_like(b2), b2, c2, d2, p).ravel()
    return GroupSet(p, np.concatenate([part1, part2]))


def standard_borel(p: int) -> GroupSet:
    """Upper-triangular matrices ``(l u | 0 l^{-1})``."""
    inv = inverse_table(p)
    lam, u = np.meshgrid(np.arange(1, p), np.arange(p), indexing="ij")
    return GroupSet(p, encode(lam, u, np.zeros_like(lam), inv[lam], p).ravel())


def unipotent(p: int) -> GroupSet:
    u = np.arange(p)
    return GroupSet(p, encode(np.ones_like(u), u, np.zeros_like(u), np.ones_like(u), p))


def diagonal(p: int) -> GroupSet:
    inv = inverse_table(p)
    lam = np.arange(1, p)
    return GroupSet(p, encode(lam, np.zeros_like(lam), np.zeros_like(lam), inv[lam], p))


@dataclass(frozen=True)
class BorelSpec:
    """Borel subgroup given as the stabiliser of a projective point.

    ``point`` uses the line indexing: ``0..p-1`` for ``(x:1)``, ``p`` for ``(1:0)``.
    The standard (upper-triangular) Borel is ``point == p``.
    """

    p: int
    point: int

    @classmethod
    def standard(cls, p: int) -> BorelSpec:
        return cls(p, p)

    @classmethod
    def from_line(cls, x: int, y: int, p: int) -> BorelSpec:
        x, y = x % p, y % p
        if x == 0 and y == 0:
            raise ValueError("(0:0) is not a projective point")
        if y == 0:
            return cls(p, p)
        return cls(p, x * pow(y, -1, p) % p)

    @property
    def line(self) -> tuple[int, int]:
        return point_label(self.point, self.p)

    def conjugator(self) -> ModMat2:
        """An element sending (1:0) to this point."""
        if self.point == self.p:
            return ModMat2.identity(self.p)
        return ModMat2(self.point, -1, 1, 0, self.p)

    def elements(self) -> GroupSet:
        h = self.conjugator()
        std = standard_borel(self.p)
        return GroupSet(self.p, mul_codes(mul_codes(np.array([h.code]), std.codes, self.p),
                                          np.array([h.inverse().code]), self.p))

    def contains(self, g: ModMat2) -> bool:
        return g.stabilizes(self.point)


def all_borels(p: int) -> list[BorelSpec]:
    return [BorelSpec(p, pt) for pt in range(p + 1)]


# ---------------------------------------------------------------------------
# conjugacy


def trace_fiber(t: int, p: int) -> GroupSet:
    G = sl2(p)
    return GroupSet(p, G.codes[G.traces() == t % p])


def conjugacy_class(g: ModMat2) -> GroupSet:
    """Exact orbit ``{h g h^{-1}}``."""
    G = sl2(g.p)
    conj = mul_codes(mul_codes(G.codes, np.array([g.code]), g.p), inv_codes(G.codes, g.p), g.p)
    return GroupSet(g.p, conj)


def centralizer(g: ModMat2) -> GroupSet:
    G = sl2(g.p)
    gc = np.array([g.code])
    mask = mul_codes(G.codes, gc, g.p) == mul_codes(gc, G.codes, g.p)
    return GroupSet(g.p, G.codes[mask])


def class_model(g: ModMat2) -> GroupSet:
    """Conjugacy class of a regular element, as its trace fiber."""
    if not g.is_regular():
        raise ValueError(f"{g!r} is not regular; trace fibers only model regular classes")
    return trace_fiber(g.trace, g.p)


# ---------------------------------------------------------------------------
# energy and related counts


@dataclass(frozen=True)
class EnergyReport:
    value: int
    left_quotient_size: int
    size_a: int
    size_b: int

    @property
    def cauchy_schwarz_holds(self) -> bool:
        return self.value * self.left_quotient_size >= self.size_a ** 2 * self.size_b ** 2


def energy(A: GroupSet, B: GroupSet) -> EnergyReport:
    """Common energy ``E(A,B) = sum_x r_{A^{-1}B}(x)^2``."""
    A._check(B)
    _, counts = product_counts(A.inverse().codes, B.codes, A.p)
    return EnergyReport(int((counts.astype(object) ** 2).sum()) if counts.size else 0,
                        int(counts.size), len(A), len(B))


def ruzsa_triangle(A: GroupSet, B: GroupSet, C: GroupSet) -> tuple[int, int]:
    """``(|C||AB|, |AC||C^{-1}B|)``; the first never exceeds the second."""
    lhs = len(C) * len(A.product(B))
    rhs = len(A.product(C)) * len(C.inverse().product(B))
    return lhs, rhs


# ---------------------------------------------------------------------------
# double cosets


@dataclass(frozen=True)
class DoubleCosetReport:
    p: int
    checked: int
    max_r: int
    bound: int
    bound_violations: int
    complement_failures: int

    @property
    def ok(self) -> bool:
        return self.bound_violations == 0 and self.complement_failures == 0


def double_coset_counts(g: ModMat2, borel: Optional[GroupSet] = None) -> tuple[np.ndarray, np.ndarray]:
    """``r_{BgB}``: the elements of BgB and how often each is hit."""
    p = g.p
    B = standard_borel(p) if borel is None else borel
    if g in B:
        raise ValueError(f"{g!r} lies in the Borel subgroup")
    left = mul_codes(B.codes, np.array([g.code]), p)
    return product_counts(left, B.codes, p)


def verify_double_coset(p: int) -> DoubleCosetReport:
    """Check ``r_{BgB}(x) <= p-1`` and ``BgB = G \\ B`` for every ``g`` outside B."""
    require_prime(p)
    if p < 3:
        raise ValueError("p >= 3 required")
    G = sl2(p)
    B = standard_borel(p)
    outside = G.difference(B)
    max_r = 0
    bound_violations = complement_failures = 0
    for code in outside.codes:
        g = ModMat2.from_code(int(code), p)
        keys, counts = double_coset_counts(g, B)
        top = int(counts.max())
        max_r = max(max_r, top)
        if top > p - 1:
            bound_violations += 1
        if not np.array_equal(keys, outside.codes):
            complement_failures += 1
    return DoubleCosetReport(p, len(outside), max_r, p - 1, bound_violations, complement_failures)


# ---------------------------------------------------------------------------
# growth and Borel intersections


def tripling(A: GroupSet) -> tuple[Fraction, Fraction]:
    """``(|AAA|/|A|, |AA|/|A|)`` as exact fractions."""
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    AA = A.product(A)
    AAA = AA.product(A)
    return Fraction(len(AAA), len(A)), Fraction(len(AA), len(A))


@dataclass(frozen=True)
class BorelIntersectionReport:
    p: int
    size: int
    K: Fraction
    per_borel: tuple[int, ...]  # |A ∩ Stab(pt)| for pt = 0..p
    max_intersection: int
    max_point: int
    lemma_bound: float  # 2 p K^{5/3} |A|^{1/3}
    line_counts: dict[int, int]  # gamma -> |A ∩ l_gamma| in the standard Borel
    max_coset: int  # max over Borels and nontrivial left cosets of |A ∩ g B*|
    coset_violations: int  # cosets with K|A| < |A ∩ gB*|^2 / (p-1)

    @property
    def lemma_holds(self) -> bool:
        return self.max_intersection <= self.lemma_bound

    @property
    def remark_holds(self) -> bool:
        return self.coset_violations == 0


def borel_intersections(A: GroupSet, K: Optional[Fraction] = None) -> BorelIntersectionReport:
    """Intersections of ``A`` with every Borel subgroup and each of its left cosets.

    The left cosets of ``Stab(x)`` are indexed by the image point ``g.x``, so one
    pass over ``(a, x) -> a.x`` fills the whole ``(p+1) x (p+1)`` table.
    """
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    p = A.p
    if K is None:
        K, _ = tripling(A)
    pts = np.arange(p + 1)
    images = act_on_points(A.codes[:, None], pts[None, :], p)  # |A| x (p+1)
    table = np.zeros((p + 1, p + 1), dtype=np.int64)
    np.add.at(table, (np.broadcast_to(pts, images.shape), images), 1)
    per_borel = np.diag(table).copy()
    off = table.copy()
    np.fill_diagonal(off, 0)
    K = Fraction(K)
    lhs = K.numerator * len(A) * (p - 1)
    violations = int(np.count_nonzero(lhs < off.astype(object) ** 2 * K.denominator))

    a, _, c, _ = decode(A.codes, p)
    in_std = c == 0
    gammas, gcounts = np.unique(a[in_std], return_counts=True)
    line_counts = {int(gm): int(n) for gm, n in zip(gammas, gcounts)}

    n = len(A)
    bound = 2 * p * float(K) ** (5 / 3) * n ** (1 / 3)
    imax = int(per_borel.argmax())
    return BorelIntersectionReport(p, n, K, tuple(int(v) for v in per_borel), int(per_borel[imax]),
                                   imax, bound, line_counts, int(off.max()), violations)


@dataclass(frozen=True)
class SumProductReport:
    size: int
    left: int  # |AB|
    right: int  # |BA|
    upper_term: float  # p^{3/2} |A|^{1/2}
    lower_term: float  # |A|^2 p^{-2}

    @property
    def maximum(self) -> int:
        return max(self.left, self.right)

    @property
    def ratio(self) -> float:
        return self.maximum / min(self.upper_term, self.lower_term)


def borel_sumproduct_ratio(A: GroupSet) -> SumProductReport:
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    p = A.p
    B = standard_borel(p)
    n = len(A)
    return SumProductReport(n, len(A.product(B)), len(B.product(A)),
                            p ** 1.5 * n ** 0.5, n ** 2 / p ** 2)


# ---------------------------------------------------------------------------
# Helfgott map


@dataclass(frozen=True)
class HelfgottReport:
    size: int
    conj_hits: int  # |Conj(g) ∩ A g A^{-1}|
    witness: tuple[int, ...]  # codes of A_0
    centr_counts: tuple[int, ...]  # |Centr(g) ∩ a0^{-1} A| for a0 in A_0
    exact_class: bool

    @property
    def holds(self) -> bool:
        return (2 * len(self.witness) >= self.size
                and all(2 * self.conj_hits * c >= self.size for c in self.centr_counts))


def helfgott_inequality(A: GroupSet, g: ModMat2, exact_class: bool = False) -> HelfgottReport:
    """Build ``A_0`` from the fibers of ``a -> a g a^{-1}`` and check every member.

    The conjugacy class is the trace fiber, which is only right for regular
    ``g``; pass ``exact_class=True`` to use the true orbit instead.
    """
    p = A.p
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    conj = conjugacy_class(g) if exact_class else class_model(g)
    gc = np.array([g.code])
    AgAinv = A.translate(g, side="right").product(A.inverse())
    conj_hits = len(AgAinv.intersection(conj))

    phi = mul_codes(mul_codes(A.codes, gc, p), inv_codes(A.codes, p), p)
    images, inverse, sizes = np.unique(phi, return_inverse=True, return_counts=True)
    # fibers of size >= |A| / (2 * conj_hits)
    keep = 2 * conj_hits * sizes >= len(A)
    A0 = A.codes[keep[inverse]]

    # Centr(g) ∩ a0^{-1} A for every a0 at once
    shifted = outer_mul(inv_codes(A0, p), A.codes, p).reshape(len(A0), len(A))
    commutes = mul_codes(shifted, gc, p) == mul_codes(gc, shifted, p)
    centr = commutes.sum(axis=1)
    return HelfgottReport(len(A), conj_hits, tuple(int(x) for x in A0),
                          tuple(int(x) for x in centr), exact_class)


# ---------------------------------------------------------------------------
# traces


@dataclass(frozen=True)
class TraceSpectrumReport:
    size: int
    distinct_traces: int
    ratio: float  # distinct * M^3 * p / |A|


def trace_spectrum(A: GroupSet, M: int) -> TraceSpectrumReport:
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    distinct = int(np.unique(A.traces()).size)
    return TraceSpectrumReport(len(A), distinct, distinct * M ** 3 * A.p / len(A))


# ---------------------------------------------------------------------------
# powers meeting a target


@dataclass(frozen=True)
class PowerWitness:
    n: int
    element: ModMat2
    factors: tuple[ModMat2, ...]  # element == factors[0] @ ... @ factors[-1]
    factor_index: tuple[int, ...]  # positions of the factors in A.codes


def power_levels(A: GroupSet, n_max: int, stop: Callable[[GroupSet], bool]) -> list[GroupSet]:
    """``[A, A^2, ...]`` up to the first level where ``stop`` fires, or ``n_max``."""
    levels = [A]
    while not stop(levels[-1]) and len(levels) < n_max:
        prev = levels[-1]
        levels.append(prev if len(prev) == group_order(A.p) else prev.product(A))
    return levels


def factorize(target: int, A: GroupSet, levels: Sequence[GroupSet]) -> list[int]:
    """Indices into ``A.codes`` whose product is ``target`` in ``levels[-1]``.

    Peels the last factor off greedily, taking the smallest index that keeps the
    remainder inside the previous level.
    """
    p = A.p
    out: list[int] = []
    t = int(target)
    for k in range(len(levels) - 1, 0, -1):
        rem = mul_codes(np.array([t]), inv_codes(A.codes, p), p)
        ok = np.flatnonzero(levels[k - 1].contains_codes(rem))
        if ok.size == 0:
            raise ValueError("target is not in the given power")
        i = int(ok[0])
        out.append(i)
        t = int(rem[i])
    i = int(np.searchsorted(A.codes, t))
    if i >= len(A) or A.codes[i] != t:
        raise ValueError("target is not in the given power")
    out.append(i)
    return out[::-1]


def power_witness(A: GroupSet, n_max: int, target: GroupSet) -> Optional[PowerWitness]:
    """Least ``n <= n_max`` with ``A^n ∩ target`` nonempty, plus a factorised witness."""
    if len(A) == 0:
        raise ValueError("A is empty")
    levels = power_levels(A, n_max, lambda L: len(L.intersection(target)) > 0)
    hit = levels[-1].intersection(target)
    if len(hit) == 0:
        return None
    code = int(hit.codes[0])
    idx = factorize(code, A, levels)
    p = A.p
    factors = tuple(ModMat2.from_code(int(A.codes[i]), p) for i in idx)
    return PowerWitness(len(levels), ModMat2.from_code(code, p), factors, tuple(idx))


@dataclass(frozen=True)
class ThresholdReport:
    p: int
    n: int
    size: int
    threshold: float  # 4 p^{2 + 4/(3n-2)}
    hypothesis: bool
    vacuous: bool  # threshold exceeds |G|
    witness: Optional[PowerWitness]

    @property
    def ok(self) -> bool:
        return not self.hypothesis or self.witness is not None


def borel_threshold(p: int, n: int) -> float:
    return 4 * p ** (2 + 4 / (3 * n - 2))


def power_borel_threshold(A: GroupSet, n: int) -> ThresholdReport:
    """Look for a point of ``A^n`` in B and compare ``|A|`` with the size threshold.

    A witness is searched for regardless; only when the hypothesis holds is a
    missing witness a failure (see :attr:`ThresholdReport.ok`).
    """
    if n < 3:
        raise ValueError("n >= 3 required")
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    p = A.p
    thr = borel_threshold(p, n)
    hyp = len(A) >= thr
    witness = None
    levels = power_levels(A, n, lambda L: False)
    hit = levels[-1].intersection(standard_borel(p))
    if len(hit):
        code = int(hit.codes[0])
        idx = factorize(code, A, levels)
        witness = PowerWitness(n, ModMat2.from_code(code, p),
                               tuple(ModMat2.from_code(int(A.codes[i]), p) for i in idx),
                               tuple(idx))
    return ThresholdReport(p, n, len(A), thr, hyp, thr > group_order(p), witness)


def random_subset(G: GroupSet, size: int, rng: np.random.Generator) -> GroupSet:
    if size > len(G):
        raise ValueError("subset larger than the group")
    return GroupSet(G.p, rng.choice(G.codes, size=size, replace=False))


def lemma_bound_for_borel(p: int) -> tuple[int, float]:
    """``(|B|, 2p|B|^{1/3})``: the intersection bound evaluated at A = B, K = 1."""
    b = p * (p - 1)
    return b, 2 * p * b ** (1 / 3)

