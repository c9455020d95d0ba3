from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from zlab.cont_frac import (EMPTY, IDENTITY, Mat2, UNIT, as_fraction, bounded_canonical,
                            bounded_either_twin, cf_to_matrix, continuant, convergents,
                            cyclic_trace, evaluate, expand, format_cf, is_canonical,
                            parse_fraction, quotient_matrix, twin)


def euclid(u, v):
    """Independent oracle: quotients of v/u by repeated division."""
    out = []
    while u:
        k, r = divmod(v, u)
        out.append(k)
        v, u = u, r
    return out


def fold(cf):
    x = Fraction(0)
    for b in reversed(cf):
        x = 1 / (b + x)
    return x


@pytest.mark.parametrize("frac, cf", [((1, 2), (2,)), ((2, 5), (2, 2)), ((5, 7), (1, 2, 2))])
def test_expand_examples(frac, cf):
    assert expand(frac) == cf
    assert expand(Fraction(*frac)) == cf


@pytest.mark.parametrize("cf, frac", [((), Fraction(0)), ((2, 2), Fraction(2, 5)), ((1, 2, 2), Fraction(5, 7))])
def test_evaluate_examples(cf, frac):
    assert evaluate(cf) == frac


def test_endpoints():
    assert expand(Fraction(0)) == EMPTY
    assert expand(Fraction(1)) == UNIT
    assert evaluate(UNIT) == 1


@pytest.mark.parametrize("b, k", [((), 1), ((1, 2), 3), ((1, 2, 2), 7), ((3,), 3)])
def test_continuant_examples(b, k):
    assert continuant(b) == k


@pytest.mark.parametrize("cf, entries, det", [
    ((1, 2), (1, 2, 1, 3), 1),
    ((2, 2), (1, 2, 2, 5), 1),
    ((2,), (0, 1, 1, 2), -1),
])
def test_cf_to_matrix_examples(cf, entries, det):
    m = cf_to_matrix(cf)
    assert m.entries() == entries
    assert m.det == det


@pytest.mark.parametrize("cf, t", [((1, 2), 4), ((2, 2), 6), ((2,), 2)])
def test_cyclic_trace_examples(cf, t):
    assert cyclic_trace(cf) == t


def test_empty_matrix_is_identity():
    assert cf_to_matrix(()) == IDENTITY
    with pytest.raises(ValueError):
        cyclic_trace(())


@pytest.mark.parametrize("bad", [(2, 4), (-1, 3), (3, 2)])
def test_as_fraction_rejects(bad):
    with pytest.raises(ValueError):
        as_fraction(bad)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        as_fraction((1, 0))


def test_bad_quotients_rejected():
    with pytest.raises(ValueError):
        evaluate((1, 0, 2))
    with pytest.raises(ValueError):
        cf_to_matrix((2, -1))


def test_twin_and_canonical():
    assert twin((1, 2, 2)) == (1, 2, 1, 1)
    assert twin((1, 2, 1, 1)) == (1, 2, 2)
    assert is_canonical((1, 2, 2)) and not is_canonical((1, 2, 1, 1))
    assert evaluate(twin((1, 2, 2))) == Fraction(5, 7)
    # 3/4 = [1,3] = [1,2,1]
    assert not bounded_canonical((3, 4), 2)
    assert bounded_either_twin((3, 4), 2)


def test_format_and_parse():
    assert format_cf((1, 2, 2)) == "[0;1,2,2]"
    assert parse_fraction("5/7") == Fraction(5, 7)
    with pytest.raises(ValueError):
        parse_fraction("10/14")
    with pytest.raises(ValueError):
        parse_fraction("5")


def test_convergents():
    assert convergents((1, 2, 2)) == [Fraction(1), Fraction(2, 3), Fraction(5, 7)]


def test_against_euclid_oracle_exhaustive():
    for v in range(1, 200):
        for u in range(1, v):
            if gcd(u, v) == 1:
                assert expand((u, v)) == tuple(euclid(u, v))


coprime = st.integers(2, 10 ** 6).flatmap(
    lambda q: st.integers(1, q - 1).filter(lambda a: gcd(a, q) == 1).map(lambda a: (a, q)))
quotients = st.lists(st.integers(1, 50), min_size=1, max_size=25)


@given(coprime)
def test_roundtrip(pair):
    cf = expand(pair)
    assert evaluate(cf) == Fraction(*pair)
    assert is_canonical(cf)
    m = cf_to_matrix(cf)
    assert (m.p_cur, m.q_cur) == pair
    assert m.det == (-1) ** len(cf)


@given(quotients)
def test_continuant_mirror(b):
    assert continuant(b) == continuant(b[::-1])


@given(quotients)
def test_matrix_law(cf):
    m = cf_to_matrix(cf)
    prod = IDENTITY
    for b in cf:
        prod = prod @ quotient_matrix(b)
    assert prod == m
    assert m.q_cur == continuant(cf)
    assert m.p_cur == continuant(cf[1:])
    assert Fraction(m.p_cur, m.q_cur) == fold(cf)
    assert cyclic_trace(cf) == m.q_cur + m.p_prev == m.trace


@given(quotients, quotients)
def test_matrix_concatenation(x, y):
    assert cf_to_matrix(x) @ cf_to_matrix(y) == cf_to_matrix(x + y)


def test_mat2_type():
    m = cf_to_matrix((1, 2))
    assert isinstance(m, Mat2) and m.length == 2 and m.trace == 4
