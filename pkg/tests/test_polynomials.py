from __future__ import annotations

import hypothesis.strategies as st
import pytest
from hypothesis import given

from canonlab.polynomials import (
    ONE,
    ZERO,
    BivariatePolynomial,
    canon_poly,
    canon_poly_sigma,
    descent_profiles,
    eulerian,
    gen_narayana,
    narayana_dyck,
    parse_polynomial,
    poly,
    polynomial_from_json,
    polynomial_to_json,
    sulanke_count,
)
from canonlab.tableaux import asc_set, enumerate_tableaux, syt_count
from canonlab.words import descent_set, enumerate_permutations

from conftest import brute_canon_poly

SMALL_POLYS = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.integers(-9, 9),
    max_size=6,
).map(poly)


# -- polynomial arithmetic ----------------------------------------------------

def test_poly_str_frozen():
    assert str(poly({(0, 0): 1, (1, 0): 4, (2, 0): 1})) == "1 + 4*t + t^2"
    assert str(poly({(0, 2): 1, (1, 0): 1})) == "u^2 + t"
    assert str(poly({(0, 0): 2, (1, 2): 3})) == "2 + 3*t*u^2"
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(poly({(1, 1): -2})) == "-2*t*u"


def test_poly_accessors():
    p = poly({(0, 2): 1, (1, 0): 3})
    assert p.coefficient(0, 2) == 1
    assert p.coefficient(5, 5) == 0
    assert p.degree_t == 1
    assert p.degree_u == 2
    assert p.evaluate(1, 1) == 4
    assert p.evaluate(2, 3) == 9 + 6
    assert p.at_u1() == (1, 3)
    assert ZERO.at_u1() == (0,)


def test_poly_arithmetic():
    a = poly({(0, 0): 1, (1, 0): 1})
    b = poly({(0, 0): 1, (1, 0): -1})
    assert a * b == poly({(0, 0): 1, (2, 0): -1})
    assert a + b == poly({(0, 0): 2})
    assert 3 * a == poly({(0, 0): 3, (1, 0): 3})
    assert a + ZERO == a
    assert a * ONE == a
    assert a * ZERO == ZERO


@given(SMALL_POLYS, SMALL_POLYS, SMALL_POLYS)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(SMALL_POLYS)
def test_poly_text_round_trip(p):
    assert parse_polynomial(str(p)) == p


@given(SMALL_POLYS)
def test_poly_json_round_trip(p):
    assert polynomial_from_json(polynomial_to_json(p)) == p


def test_parse_polynomial_frozen():
    assert parse_polynomial("1 + 4*t + t^2") == poly({(0, 0): 1, (1, 0): 4, (2, 0): 1})
    assert parse_polynomial("0") == ZERO
    with pytest.raises(ValueError):
        parse_polynomial("t + q")


# -- the classical families ---------------------------------------------------

EULERIAN_TABLE = {
    1: [1],
    2: [1, 1],
    3: [1, 4, 1],
    4: [1, 11, 11, 1],
    5: [1, 26, 66, 26, 1],
    6: [1, 57, 302, 302, 57, 1],
}


@pytest.mark.parametrize("n,coeffs", sorted(EULERIAN_TABLE.items()))
def test_eulerian_frozen(n, coeffs):
    assert eulerian(n).at_u1() == tuple(coeffs)


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_against_descent_counts(n):
    from collections import Counter

    hist = Counter(len(descent_set(p)) for p in enumerate_permutations(n))
    direct = poly({(d, 0): c for d, c in hist.items()})
    assert eulerian(n) == direct


def test_eulerian_cap():
    with pytest.raises(ValueError, match="cap"):
        eulerian(11)


def test_narayana_dyck_frozen():
    assert narayana_dyck(2) == poly({(1, 0): 1, (0, 2): 1})
    assert str(narayana_dyck(3)) == "u^3 + t + 2*t*u + t^2"


@pytest.mark.parametrize("n", range(1, 8))
def test_narayana_dyck_is_two_column_case(n):
    assert narayana_dyck(n) == gen_narayana(n, 2)


def test_gen_narayana_frozen():
    assert str(gen_narayana(2, 2)) == "u^2 + t"
    assert gen_narayana(1, 1) == poly({(0, 0): 1})
    assert gen_narayana(3, 3).evaluate(1, 1) == syt_count(3, 3) == 42


@pytest.mark.parametrize(
    "n,k", [(n, k) for n in range(1, 7) for k in range(1, 7) if n * k <= 12]
)
def test_gen_narayana_matches_enumeration(n, k):
    """Direct tally of (ascents, plateaus) over all tableaux of the shape."""
    from collections import Counter

    from canonlab.tableaux import plat_set

    hist = Counter()
    for t in enumerate_tableaux(n, k):
        hist[len(asc_set(t)), len(plat_set(t))] += 1
    assert gen_narayana(n, k) == poly(dict(hist))


# -- Sulanke's closed formula -------------------------------------------------

def test_sulanke_frozen():
    assert [sulanke_count(3, 2, h) for h in range(3)] == [1, 3, 1]
    assert [sulanke_count(3, 3, h) for h in range(5)] == [1, 10, 20, 10, 1]
    with pytest.raises(ValueError, match="ascent count"):
        sulanke_count(3, 2, 3)
    with pytest.raises(ValueError, match="ascent count"):
        sulanke_count(3, 2, -1)


@pytest.mark.parametrize(
    "n,k", [(n, k) for n in range(1, 9) for k in range(1, 9) if n * k <= 14]
)
def test_sulanke_symmetries(n, k):
    top = (k - 1) * (n - 1)
    values = [sulanke_count(n, k, h) for h in range(top + 1)]
    assert all(isinstance(v, int) and v > 0 for v in values)
    assert sum(values) == syt_count(n, k)
    assert values == values[::-1]
    for h in range(top + 1):
        assert sulanke_count(n, k, h) == sulanke_count(k, n, h)
    # and the formula is the u = 1 image of the bivariate polynomial
    assert gen_narayana(n, k).at_u1() == tuple(values)


# -- canon counting -----------------------------------------------------------

@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_canon_poly_against_brute_force(n, k):
    """The tableau-profile computation agrees with filtering all words."""
    assert canon_poly(n, k) == brute_canon_poly(n, k)


def test_canon_poly_frozen():
    assert str(canon_poly(2, 2)) == "u^2 + t + t*u^2 + t^2"
    assert canon_poly(3, 2).evaluate(1, 1) == 30


def test_canon_poly_factors():
    for n, k in [(3, 2), (3, 3), (4, 2)]:
        assert canon_poly(n, k) == eulerian(n) * gen_narayana(n, k)


def test_canon_poly_bounds():
    with pytest.raises(ValueError, match="feasibility bounds exceeded"):
        canon_poly(6, 3)
    with pytest.raises(ValueError, match="feasibility bounds exceeded"):
        canon_poly(3, 5)
    # lifted bounds let the same shape through
    assert canon_poly(3, 5, max_k=5).evaluate(1, 1) == 6 * syt_count(3, 5)


def test_canon_poly_sigma():
    for sigma in enumerate_permutations(3):
        expected = poly({(len(descent_set(sigma)), 0): 1}) * gen_narayana(3, 2)
        assert canon_poly_sigma(3, 2, sigma) == expected
    total = sum(
        (canon_poly_sigma(3, 2, sigma) for sigma in enumerate_permutations(3)),
        ZERO,
    )
    assert total == canon_poly(3, 2)


def test_descent_profiles_compress():
    profiles = descent_profiles(5, 3)
    assert sum(profiles.values()) == syt_count(5, 3) == 6006
    assert len(profiles) == 1932
    profiles44 = descent_profiles(4, 4)
    assert sum(profiles44.values()) == syt_count(4, 4) == 24024
    assert len(profiles44) == 1369


def test_descent_profiles_parallel_matches_serial():
    assert descent_profiles(4, 3, workers=2) == descent_profiles(4, 3)


def test_profiles_reuse():
    profiles = descent_profiles(3, 3)
    sigma = (2, 3, 1)
    assert canon_poly_sigma(3, 3, sigma, profiles=profiles) == canon_poly_sigma(
        3, 3, sigma
    )
