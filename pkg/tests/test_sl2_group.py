import itertools
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from zlab.cont_frac import cyclic_trace
from zlab.sl2_group import (BorelSpec, GroupSet, ModMat2, all_borels, borel_intersections,
                            borel_sumproduct_ratio, borel_threshold, centralizer, class_model,
                            conjugacy_class, diagonal, double_coset_counts, energy, group_order,
                            helfgott_inequality, lemma_bound_for_borel, power_borel_threshold,
                            product_counts, random_subset, ruzsa_triangle, sl2, standard_borel,
                            trace_fiber, trace_spectrum, tripling, unipotent, verify_double_coset)
from zlab.zaremba_enum import split_parity, zaremba_matrix_set


def naive_group(p):
    return [(a, b, c, d) for a, b, c, d in itertools.product(range(p), repeat=4)
            if (a * d - b * c) % p == 1]


def naive_mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def tuples(S):
    return {g.entries() for g in S}


@pytest.fixture(params=[3, 5])
def p(request):
    return request.param


def test_orders(p):
    assert len(sl2(p)) == group_order(p) == p ** 3 - p
    assert tuples(sl2(p)) == set(naive_group(p))
    assert (len(standard_borel(p)), len(unipotent(p)), len(diagonal(p))) == (p * (p - 1), p, p - 1)


def test_element_examples():
    e = ModMat2.identity(5)
    g = ModMat2(1, 2, 1, 3, p=5)
    assert e @ g == g and e.trace == 2 and not e.is_regular()
    assert g.trace == 4 and g.is_regular() and g not in standard_borel(5)
    assert g ** 3 == e and g @ g.inverse() == e
    with pytest.raises(ValueError):
        ModMat2(1, 1, 1, 1, p=5)


def test_group_axioms(p):
    G = list(sl2(p))
    e = ModMat2.identity(p)
    rng = np.random.default_rng(1)
    for _ in range(300):
        x, y, z = (G[i] for i in rng.integers(0, len(G), 3))
        assert (x @ y) @ z == x @ (y @ z)
        assert (x @ y).entries() == naive_mul(x.entries(), y.entries(), p)
    for x in G:
        assert x @ e == e @ x == x
        assert x @ x.inverse() == e
    assert len(GroupSet(p, [g.code for g in G]).product(sl2(p))) == len(G)


def test_groupset_ops():
    p = 7
    G = sl2(p)
    B = standard_borel(p)
    e = GroupSet.from_matrices([ModMat2.identity(p)])
    assert B.product(e) == B and B.product(B) == B
    assert B.inverse() == B and B.issubset(G)
    assert len(G.difference(B)) == len(G) - len(B)
    assert B.intersection(unipotent(p)) == unipotent(p)
    assert unipotent(p).union(diagonal(p)).issubset(B)
    A = GroupSet.from_matrices([ModMat2(1, 2, 1, 3, p=5)])
    assert A.power(3) == GroupSet.from_matrices([ModMat2.identity(5)])
    with pytest.raises(ValueError):
        B.product(sl2(5))


def test_product_against_naive():
    p = 5
    rng = np.random.default_rng(3)
    G = sl2(p)
    for _ in range(20):
        X = random_subset(G, 15, rng)
        Y = random_subset(G, 9, rng)
        expect = {naive_mul(x, y, p) for x in tuples(X) for y in tuples(Y)}
        assert tuples(X.product(Y)) == expect
        assert tuples(X.product(Y, saturate=False)) == expect
        keys, counts = product_counts(X.codes, Y.codes, p)
        naive = Counter(naive_mul(x, y, p) for x in tuples(X) for y in tuples(Y))
        got = {ModMat2.from_code(int(k), p).entries(): int(c) for k, c in zip(keys, counts)}
        assert got == dict(naive)


def test_translate():
    p = 5
    g = ModMat2(1, 2, 1, 3, p=p)
    B = standard_borel(p)
    assert tuples(B.translate(g, "left")) == {naive_mul(g.entries(), b, p) for b in tuples(B)}
    assert tuples(B.translate(g, "right")) == {naive_mul(b, g.entries(), p) for b in tuples(B)}


def test_borels_are_point_stabilizers():
    p = 5
    borels = all_borels(p)
    assert len(borels) == p + 1
    for borel in borels:
        E = borel.elements()
        assert len(E) == p * (p - 1)
        assert all(g.stabilizes(borel.point) for g in E)
        assert E.product(E) == E
    assert BorelSpec.standard(p).elements() == standard_borel(p)
    assert BorelSpec.from_line(2, 4, p) == BorelSpec.from_line(1, 2, p)


# ---------------------------------------------------------------------------
# conjugacy


@pytest.mark.parametrize("p", [5, 7])
def test_classes_and_centralizers(p):
    G = sl2(p)
    for g in list(G)[::7]:
        C = conjugacy_class(g)
        Z = centralizer(g)
        assert len(C) * len(Z) == len(G)
        if g.is_regular():
            assert class_model(g) == C == trace_fiber(g.trace, p)
        else:
            with pytest.raises(ValueError):
                class_model(g)


def test_class_count_is_q_plus_4():
    for p in (3, 5, 7):
        seen, classes = set(), 0
        for g in sl2(p):
            if g.code not in seen:
                classes += 1
                seen.update(int(c) for c in conjugacy_class(g).codes)
        assert classes == p + 4


# ---------------------------------------------------------------------------
# energy and Ruzsa


def test_energy_examples():
    e = GroupSet.from_matrices([ModMat2.identity(5)])
    assert energy(e, e).value == 1
    for H in (standard_borel(5), unipotent(7), diagonal(7)):
        assert energy(H, H).value == len(H) ** 3


def test_energy_against_naive():
    p = 5
    rng = np.random.default_rng(7)
    G = sl2(p)
    for _ in range(10):
        A, B = random_subset(G, 10, rng), random_subset(G, 10, rng)
        quads = Counter(naive_mul(a.inverse().entries(), b.entries(), p) for a in A for b in B)
        rep = energy(A, B)
        assert rep.value == sum(v * v for v in quads.values())
        assert rep.cauchy_schwarz_holds


def test_ruzsa_random():
    p = 5
    rng = np.random.default_rng(11)
    G = sl2(p)
    for _ in range(30):
        A, B, C = (random_subset(G, int(rng.integers(1, 60)), rng) for _ in range(3))
        lhs, rhs = ruzsa_triangle(A, B, C)
        assert lhs <= rhs


# ---------------------------------------------------------------------------
# double cosets


@pytest.mark.parametrize("p", [3, 5, 7])
def test_double_coset(p):
    rep = verify_double_coset(p)
    assert rep.ok and rep.checked == p ** 3 - p ** 2 and rep.max_r <= p - 1


def test_double_coset_sizes_p5():
    g = ModMat2(0, 1, 4, 0, p=5)
    keys, counts = double_coset_counts(g)
    assert len(keys) == 100 and counts.sum() == 400


def test_double_coset_rejects_borel_element():
    with pytest.raises(ValueError):
        double_coset_counts(ModMat2.identity(5))
    with pytest.raises(ValueError):
        verify_double_coset(2)


# ---------------------------------------------------------------------------
# growth and Borel intersections


def test_tripling_subgroups():
    assert tripling(standard_borel(7)) == (1, 1)
    assert tripling(sl2(5)) == (1, 1)


def test_tripling_zaremba():
    A = zaremba_matrix_set(2, 11)
    K, Kt = tripling(A)
    assert K >= Kt >= 1
    assert K == Fraction(len(A.power(3)), len(A))


def test_borel_intersections_trivial_cases():
    B = standard_borel(7)
    rep = borel_intersections(B, K=1)
    assert rep.max_intersection == len(B) and rep.lemma_holds
    for g in sl2(5):
        single = GroupSet.from_matrices([g])
        fixes_point = any(g.stabilizes(x) for x in range(6))
        assert borel_intersections(single).max_intersection == int(fixes_point)
    # elliptic: t^2 - 4 = 2 is a non-square mod 5
    assert borel_intersections(GroupSet.from_matrices([ModMat2(1, 2, 1, 3, p=5)])).max_intersection == 0


def test_borel_bound_at_a_equal_b():
    # 2p |B|^{1/3} >= |B| only while (p-1)^2 <= 8p
    for p in (3, 5, 7):
        b, bound = lemma_bound_for_borel(p)
        assert bound >= b
    for p in (11, 13, 101):
        b, bound = lemma_bound_for_borel(p)
        assert bound < b


def test_borel_intersections_against_naive():
    p = 7
    rng = np.random.default_rng(5)
    A = random_subset(sl2(p), 60, rng)
    rep = borel_intersections(A)
    for borel in all_borels(p):
        assert rep.per_borel[borel.point] == len(A.intersection(borel.elements()))


@pytest.mark.parametrize("p", [11, 13, 17, 19, 23])
def test_borel_zaremba(p):
    rep = borel_intersections(zaremba_matrix_set(2, p))
    assert rep.lemma_holds and rep.remark_holds


def test_sumproduct():
    p = 7
    B = standard_borel(p)
    assert borel_sumproduct_ratio(B).maximum == len(B)
    assert borel_sumproduct_ratio(GroupSet.from_matrices([ModMat2.identity(p)])).maximum == len(B)
    A = random_subset(sl2(p), 30, np.random.default_rng(2))
    rep = borel_sumproduct_ratio(A)
    assert rep.maximum >= len(B) and rep.ratio > 0


# ---------------------------------------------------------------------------
# Helfgott map


def test_helfgott_full_group():
    G = sl2(7)
    g = ModMat2(1, 2, 1, 3, p=7)
    rep = helfgott_inequality(G, g)
    assert rep.conj_hits == len(conjugacy_class(g))
    assert set(rep.centr_counts) == {len(centralizer(g))}
    assert rep.conj_hits * rep.centr_counts[0] == len(G) and rep.holds


def test_helfgott_singleton():
    A = GroupSet.from_matrices([ModMat2(2, 1, 1, 1, p=7)])
    g = ModMat2(1, 2, 1, 3, p=7)
    rep = helfgott_inequality(A, g)
    assert rep.size == 1 and rep.conj_hits == 1 and rep.centr_counts == (1,) and rep.holds


def test_helfgott_random():
    p = 7
    G = sl2(p)
    rng = np.random.default_rng(13)
    regular = [g for g in G if g.is_regular()]
    for _ in range(20):
        A = random_subset(G, 50, rng)
        g = regular[int(rng.integers(len(regular)))]
        assert helfgott_inequality(A, g).holds
        assert helfgott_inequality(A, g, exact_class=True).holds


# ---------------------------------------------------------------------------
# traces


def test_trace_spectrum():
    assert trace_spectrum(GroupSet.from_matrices([ModMat2.identity(5)]), 2).distinct_traces == 1
    for p in (3, 5, 7, 11):
        assert trace_spectrum(sl2(p), 2).distinct_traces == p


def test_trace_spectrum_zaremba_oracle():
    p = 11
    s = split_parity(2, p - 1, p)
    oracle = {cyclic_trace(cf) % p for cf in s.even_expansions}
    assert trace_spectrum(s.even, 2).distinct_traces == len(oracle)


# ---------------------------------------------------------------------------
# thresholds


def test_threshold_vacuous_below_29():
    for p in (3, 5, 7, 11, 13, 17, 19, 23):
        assert borel_threshold(p, 3) > group_order(p)
    assert borel_threshold(29, 3) < group_order(29)


def test_threshold_full_group_witness():
    for p, n in ((5, 3), (5, 4), (7, 3)):
        rep = power_borel_threshold(sl2(p), n)
        assert rep.witness.element == ModMat2.identity(p) and rep.ok


def test_threshold_p29():
    p = 29
    G = sl2(p)
    rng = np.random.default_rng(29)
    A = random_subset(G, 23100, rng)
    rep = power_borel_threshold(A, 3)
    assert rep.hypothesis and not rep.vacuous and rep.witness is not None and rep.ok
    w = rep.witness
    prod = w.factors[0] @ w.factors[1] @ w.factors[2]
    assert prod == w.element and w.element.c == 0


def test_threshold_rejects():
    with pytest.raises(ValueError):
        power_borel_threshold(sl2(5), 2)
