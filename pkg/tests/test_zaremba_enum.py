import io
from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from zlab.cont_frac import cf_to_matrix
from zlab.sl2_group import GroupSet, ModMat2
from zlab.zaremba_enum import (ResourceLimitError, count_fractions, dyadic, enumerate_fractions,
                               estimate_dimension, growth_ratios, iter_expansions, predicted_ratio,
                               split_parity, zaremba_matrix_set)


def quotients(u, v):
    out = []
    while u:
        k, r = divmod(v, u)
        out.append(k)
        v, u = u, r
    return out


def brute(M, Q, twin=False):
    """Scan every coprime pair u <= v <= Q."""
    out = {Fraction(0), Fraction(1)}
    for v in range(2, Q + 1):
        for u in range(1, v):
            if gcd(u, v) != 1:
                continue
            cf = quotients(u, v)
            if max(cf) <= M or (twin and cf[-1] - 1 <= M and max(cf[:-1], default=0) <= M):
                out.add(Fraction(u, v))
    return out


def test_examples():
    assert set(enumerate_fractions(2, 3)) == {Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2, 3)}
    assert count_fractions(2, 3) == 4
    fib = {Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(5, 8)}
    assert set(enumerate_fractions(1, 8, twin=True)) == fib
    assert count_fractions(1, 8, twin=True) == 6
    for M in range(1, 6):
        assert set(enumerate_fractions(M, 1)) == {Fraction(0), Fraction(1)}
        assert count_fractions(M, 1) == 2


def test_canonical_m1_is_trivial():
    assert count_fractions(1, 1000) == 2


@pytest.mark.parametrize("M", [1, 2, 3, 4])
@pytest.mark.parametrize("twin", [False, True])
def test_oracle_equivalence(M, twin):
    for Q in (1, 2, 3, 7, 30, 97, 150):
        z = enumerate_fractions(M, Q, twin=twin)
        assert set(z) == brute(M, Q, twin)
        assert len(z) == count_fractions(M, Q, twin)


def test_members_sorted_and_membership():
    z = enumerate_fractions(3, 50)
    assert list(z.members) == sorted(z.members)
    assert Fraction(5, 7) in z and Fraction(3, 4) in z and Fraction(4, 5) not in z


def test_iter_expansions_unique_and_bounded():
    seen = set()
    for cf in iter_expansions(3, 200):
        m = cf_to_matrix(cf)
        assert max(cf) <= 3 and cf[-1] >= 2 and m.q_cur <= 200
        seen.add(Fraction(m.p_cur, m.q_cur))
    assert len(seen) == count_fractions(3, 200) - 2


def test_csv_export():
    buf = io.StringIO()
    enumerate_fractions(2, 3).write_csv(buf)
    assert buf.getvalue().splitlines() == ["u,v", "0,1", "1,2", "2,3", "1,1"]


def test_resource_guard():
    with pytest.raises(ResourceLimitError):
        enumerate_fractions(4, 2000, max_members=100)


@pytest.mark.parametrize("M, Q", [(0, 5), (2, 0)])
def test_bad_args(M, Q):
    with pytest.raises(ValueError):
        count_fractions(M, Q)
    with pytest.raises(ValueError):
        enumerate_fractions(M, Q)


def test_large_counts_are_exact_integers():
    n = count_fractions(2, 2 ** 16)
    assert isinstance(n, int) and n > 2 ** 16


# ---------------------------------------------------------------------------
# parity split


def mat(cf, p):
    return ModMat2(*(x % p for x in cf_to_matrix(cf).entries()), p=p)


def test_split_example():
    s = split_parity(2, 7, 101)
    assert sorted(s.even_expansions) == [(1, 2), (2, 2)]
    assert sorted(s.odd_expansions) == [(1, 1, 2), (1, 2, 2), (2,)]
    assert s.even == GroupSet.from_matrices([mat((1, 2), 101), mat((2, 2), 101)])
    assert (len(s.even), len(s.odd)) == (2, 3)
    assert all(g.det == 1 for g in s.even) and all(g.det == -1 for g in s.odd)


def test_split_mod_3_collapses():
    assert len(split_parity(2, 7, 3).even) <= 2


@pytest.mark.parametrize("M, Q, p", [(2, 7, 101), (2, 50, 7), (3, 40, 11), (4, 100, 5)])
def test_partition_property(M, Q, p):
    s = split_parity(M, Q, p)
    assert len(s.even_expansions) + len(s.odd_expansions) == count_fractions(M, Q) - 2
    if Q < p:
        # distinct fractions with q < p give distinct residues of (p_s, q_s)
        assert len(s.even) + len(s.odd) == count_fractions(M, Q) - 2


def test_split_filters():
    p = 13
    s = split_parity(2, 60, p, nonzero_entries=True, regular_only=True)
    for g in list(s.even) + list(s.odd):
        assert 0 not in g.entries()
        assert g.trace not in (0, 2, p - 2)


def test_expansions_index():
    s = split_parity(2, 30, 7)
    for code, cfs in s.expansions.items():
        for cf in cfs:
            assert mat(cf, 7).code == code


def test_zaremba_matrix_set():
    A = zaremba_matrix_set(2, 5)
    assert A == GroupSet.from_matrices([ModMat2(1, 2, 1, 3, p=5)])


# ---------------------------------------------------------------------------
# dimension


def test_dimension_m2():
    est = estimate_dimension(2, dyadic(4, 14))
    assert 0.50 <= est.w_hat <= 0.56
    assert not est.degenerate and est.residual < 0.2


def test_dimension_m1_twin_is_logarithmic():
    est = estimate_dimension(1, dyadic(4, 60), twin=True)
    assert 0 <= est.w_hat <= 0.05


def test_dimension_m1_canonical_degenerate():
    est = estimate_dimension(1, dyadic(4, 8))
    assert est.degenerate and est.w_hat == 0.0


def test_dimension_monotone_in_m():
    Qs = dyadic(4, 12)
    w = [estimate_dimension(M, Qs).w_hat for M in (2, 3, 4)]
    assert w[0] < w[1] < w[2] <= 1


@pytest.mark.parametrize("Qs", [[16, 32], [8, 16, 32], [16, 64, 32], [16, 16, 32]])
def test_dimension_rejects(Qs):
    with pytest.raises(ValueError):
        estimate_dimension(2, Qs)


def test_growth_ratio_stability():
    est = estimate_dimension(2, dyadic(4, 14))
    pred = predicted_ratio(est.w_hat)
    ratios = np.array(growth_ratios(2, dyadic(8, 13)))
    assert np.all(ratios <= 2 * pred) and np.all(ratios >= pred / 2)
