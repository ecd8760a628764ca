import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import field, frob_algebra
from nacx.skewpoly import (
    SkewPolyRing,
    irreducible_criterion,
    irreducible_exhaustive,
    is_right_invariant,
    right_divmod,
)


@pytest.fixture
def R4(D4):
    return SkewPolyRing(D4, D4.sigma)


def alpha(D):
    return D(D.K.gen)


def test_twist(R4, D4):
    a = alpha(D4)
    assert R4.t * R4.poly((a,)) == R4.poly((D4.zero, a * a))


def test_product_example(R4, D4):
    a = alpha(D4)
    lhs = R4.poly((D4.one, a)) * R4.poly((a, D4.one))
    assert lhs == R4.poly((a, D4.zero, a))
    g = R4.poly((a, D4.one, a))
    assert R4.one * g == g == g * R4.one


def test_divmod_examples(R4, D4):
    a = alpha(D4)
    f = R4.binomial(2, a)
    t2 = R4.monomial(D4.one, 2)
    assert right_divmod(t2, f) == (R4.one, R4.poly((a,)))
    g = R4.poly((a, D4.one))
    assert right_divmod(g, f) == (R4.zero, g)
    q, r = right_divmod(R4.monomial(D4.one, 3), f)
    assert q == R4.t and r == R4.poly((D4.zero, a * a))


def test_right_invariance_examples(R4, D4):
    assert is_right_invariant(R4.binomial(2, D4.one)) == (True, None)
    ok, w = is_right_invariant(R4.binomial(2, alpha(D4)))
    assert not ok
    label, b = w
    f = R4.binomial(2, alpha(D4))
    prod = f * (b if label == "f·t" else R4.poly((b,)))
    assert right_divmod(prod, f)[1]
    assert is_right_invariant(R4.t) == (True, None)


def test_criterion_examples(R4, D4, D9):
    a = alpha(D4)
    assert irreducible_criterion(R4.binomial(2, a)).verdict == "irreducible"
    res = irreducible_criterion(R4.binomial(2, D4.one))
    assert res.verdict == "reducible" and res.witness == D4.one
    R9 = SkewPolyRing(D9, D9.sigma)
    for x in D9.K.elements():
        if any(x.coords[1:]):
            assert irreducible_criterion(R9.binomial(2, D9(x))).verdict == "irreducible"


def test_exhaustive_examples(R4, D4):
    ex = irreducible_exhaustive(R4.binomial(2, alpha(D4)))
    assert ex.irreducible and ex.candidates == 4
    ex = irreducible_exhaustive(R4.binomial(2, D4.one))
    assert not ex.irreducible
    g, h = ex.factor
    assert g * h == R4.binomial(2, D4.one)
    assert irreducible_exhaustive(R4.t).irreducible


def test_malformed_criterion(R4, D4):
    with pytest.raises(ValueError):
        irreducible_criterion(R4.poly((D4.one, D4.one, D4.one)))


@pytest.mark.parametrize("name,m", [(n, m) for n in ("F4", "F8", "F9") for m in (2, 3)])
def test_criterion_matches_exhaustive(name, m):
    D = frob_algebra(name)
    R = SkewPolyRing(D, D.sigma)
    for x in D.K.elements():
        if not x:
            continue
        f = R.binomial(m, D(x))
        crit = irreducible_criterion(f)
        ex = irreducible_exhaustive(f)
        assert (crit.verdict == "irreducible") == ex.irreducible, (name, m, x)


def test_degree4_criterion_matches_exhaustive():
    D = frob_algebra("F16")
    R = SkewPolyRing(D, D.sigma)
    for x in D.K.elements():
        if x:
            f = R.binomial(4, D(x))
            assert (irreducible_criterion(f).verdict == "irreducible") == irreducible_exhaustive(f).irreducible


@pytest.mark.parametrize("name", ["F4", "F8", "F9", "F16", "F25", "F27", "F64", "F81"])
def test_right_invariance_iff_d_in_F0(name):
    D = frob_algebra(name)
    R = SkewPolyRing(D, D.sigma)
    F0 = D.F0_in_D()
    m = D.m
    for x in D.K.elements():
        if x:
            d = D(x)
            assert is_right_invariant(R.binomial(m, d))[0] == (d in F0), (name, x)


def test_twist_powers(D9):
    R = SkewPolyRing(D9, D9.sigma)
    for a in D9.basis():
        for n in range(8):
            tn = R.monomial(D9.one, n)
            assert tn * R.poly((a,)) == R.poly((R.sigma_pow(a, n),)) * tn


def _rand_poly(R, rng, deg):
    elems = list(R.D.elements())
    return R.poly(tuple(rng.choice(elems) for _ in range(deg + 1)))


@settings(max_examples=60)
@given(st.integers(0, 2 ** 32), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_ring_associative(seed, a, b, c):
    D = frob_algebra("F9")
    R = SkewPolyRing(D, D.sigma)
    rng = random.Random(seed)
    x, y, z = (_rand_poly(R, rng, k) for k in (a, b, c))
    assert (x * y) * z == x * (y * z)


def test_divmod_1000_instances():
    D = frob_algebra("F9")
    R = SkewPolyRing(D, D.sigma)
    rng = random.Random(2024)
    units = [x for x in D.elements() if x]
    for _ in range(1000):
        g = _rand_poly(R, rng, rng.randint(0, 7))
        f = _rand_poly(R, rng, rng.randint(0, 4))
        f = R.poly(f.coeffs[:-1] + (rng.choice(units),)) if f.coeffs else R.poly((rng.choice(units),))
        q, r = right_divmod(g, f)
        assert q * f + r == g
        assert (not r) or r.degree < f.degree
        assert right_divmod(r, f) == (R.zero, r)
