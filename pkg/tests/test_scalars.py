from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nacx.errors import DomainError
from nacx.scalars import QQ, base_field, format_rational, parse_rational, rdiv

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)
primes = st.sampled_from([2, 3, 5, 7, 11, 101])


def test_examples():
    assert parse_rational("1/3") + parse_rational("1/6") == Fraction(1, 2)
    assert QQ.mul(QQ(-2), QQ(-3)) == 6
    x = rdiv(7, -14)
    assert x == Fraction(-1, 2) and x.denominator > 0
    assert format_rational(x) == "-1/2"


def test_division_by_zero():
    with pytest.raises(DomainError):
        rdiv(1, 0)
    with pytest.raises(DomainError):
        base_field(5).inv(0)
    with pytest.raises(DomainError):
        QQ.inv(QQ.zero)
    with pytest.raises(DomainError):
        parse_rational("3/0")


def test_composite_characteristic():
    with pytest.raises(DomainError):
        base_field(6)


def test_coercion():
    K = base_field(7)
    assert K("1/2") == 4
    assert K(-1) == 6
    with pytest.raises(DomainError):
        K(Fraction(1, 7))


@given(rationals, rationals, rationals)
def test_q_field_axioms(a, b, c):
    K = QQ
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.add(a, K.neg(a)) == 0
    if a:
        assert K.mul(a, K.inv(a)) == 1


@given(primes, st.integers(), st.integers(), st.integers())
def test_gf_field_axioms(p, a, b, c):
    K = base_field(p)
    a, b, c = K(a), K(b), K(c)
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    if a:
        assert K.mul(a, K.inv(a)) == 1


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_normalization_canonical(n, d):
    x = parse_rational(f"{n}/{d}")
    y = parse_rational(f"{2 * n}/{2 * d}")
    assert format_rational(x) == format_rational(y)
    assert x.denominator > 0
