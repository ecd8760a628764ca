import itertools

import pytest

from conftest import field, frob_algebra
from nacx.coeffalg import cyclic_algebra
from nacx.errors import ZeroDivisorError
from nacx.fields import frobenius
from nacx.petit import (
    associator,
    f0_compute,
    inverses,
    is_division,
    nucleus,
    petit_algebra,
    right_nucleus_alt,
)


def alg(name, m, x, e=1):
    D = frob_algebra(name, e)
    return petit_algebra(D, m, D(x))


@pytest.fixture
def A4(D4, F4):
    return petit_algebra(D4, 2, D4(F4.gen))


def test_product_example(A4, D4, F4):
    a = D4(F4.gen)
    assert A4([D4.one, a]) * A4([a, D4.one]) == A4.one


def test_low_degree_product_matches_ring(A4, D4, F4):
    a = A4.embed(D4(F4.gen))
    assert (a * A4.t).poly == a.poly * A4.t.poly


def test_unit_laws_and_bilinearity(A4):
    B = A4.basis()
    for x in A4.elements():
        assert A4.one * x == x == x * A4.one
    for x, y, z in itertools.product(B, B, B):
        assert (x + y) * z == x * z + y * z
        assert z * (x + y) == z * x + z * y


def test_associator_examples(A4, D4, F4):
    t = A4.t
    assert associator(t, t, t) == t  # α·t - t·α = (α + α²)t
    w = A4.associativity_witness()
    assert w is not None and associator(*w)
    Dset = [A4.embed(b) for b in D4.elements()]
    for x, y in itertools.product(Dset, Dset):
        for z in A4.basis():
            assert not associator(x, y, z)
    assoc = alg("F4", 2, field("F4").one)
    assert assoc.associativity_witness() is None


def _brute_nucleus(A, slot):
    E = list(A.elements())
    out = []
    for x in E:
        ok = True
        for y, z in itertools.product(E, E):
            args = [y, z]
            args.insert(slot, x)
            if associator(*args):
                ok = False
                break
        if ok:
            out.append(x)
    return out


def test_nuclei_match_brute_force(A4):
    for slot, which in enumerate(("left", "middle", "right")):
        brute = _brute_nucleus(A4, slot)
        assert A4.span(brute) == A4.span(nucleus(A4, which))
    assert A4.span(nucleus(A4, "left")) == A4.D_span()
    assert A4.span(nucleus(A4, "right")) == A4.span(right_nucleus_alt(A4))


@pytest.mark.parametrize("name,m", [("F4", 2), ("F8", 3), ("F9", 2), ("F16", 4), ("F27", 3)])
def test_nucleus_theorem(name, m):
    K = field(name)
    D = frob_algebra(name)
    for x in K.elements():
        if not x or D(x) in D.F0_in_D():
            continue
        A = petit_algebra(D, m, D(x))
        assert A.associativity_witness() is not None
        assert A.span(nucleus(A, "left")) == A.D_span()
        assert A.span(nucleus(A, "middle")) == A.D_span()
        assert A.span(nucleus(A, "right")) == A.span(right_nucleus_alt(A))
        break


def test_associative_case_nuclei_are_everything():
    A = alg("F9", 2, field("F9").one)
    full = A.span(A.basis())
    for which in ("left", "middle", "right"):
        assert A.span(nucleus(A, which)) == full


@pytest.mark.parametrize("name,x,deg", [("F4", [0, 1], 1), ("F9", [0, 1], 1), ("F4", [1, 0], 1), ("F64", [0, 1], 2)])
def test_f0(name, x, deg):
    D = frob_algebra(name, 2 if name == "F64" else 1)
    m = D.m
    A = petit_algebra(D, m, D(D.K(x)))
    assert f0_compute(A).degree == deg


def test_division_examples(A4):
    r = is_division(A4)
    assert r.division is True and r.methods == {"criterion": True, "factor-search": True, "scan": True}
    r = is_division(alg("F4", 2, field("F4").one))
    assert r.division is False
    x, y = r.witness
    assert x and y and not x * y
    F9 = field("F9")
    assert is_division(alg("F9", 2, F9.gen)).division is True


@pytest.mark.parametrize("name", ["F4", "F8", "F9", "F25"])
@pytest.mark.parametrize("m", [2, 3])
def test_division_methods_agree(name, m):
    D = frob_algebra(name)
    for x in D.K.elements():
        if x:
            r = is_division(petit_algebra(D, m, D(x)))
            assert r.division is not None
            assert len(set(r.methods.values())) == 1


def test_dimension_law():
    D = frob_algebra("F64", 2)  # F over F0 of degree 3, n = 1
    A = petit_algebra(D, 3, D(D.K.gen))
    assert A.dim_over_F0() == 9
    K = field("F16")
    Dc = cyclic_algebra(K, frobenius(K, 2), K.one, frobenius(K, 1))
    Ac = petit_algebra(Dc, Dc.m, Dc.one)
    n = Dc.n
    assert Ac.dim_over_F0() == Dc.m ** 2 * n ** 2


def test_inverses(A4, D4, F4):
    a = D4(F4.gen)
    x = A4([D4.one, a])
    l, r = inverses(x)
    assert r == A4([a, D4.one])
    assert l * x == A4.one and l != r  # one-sided inverses differ off the nucleus
    assert inverses(A4.one) == (A4.one, A4.one)
    assert A4.inverse(A4.embed(a)) == A4.embed(D4.inverse(a))
    S = alg("F4", 2, F4.one)
    with pytest.raises(ZeroDivisorError):
        inverses(S([S.D.one, S.D.one]))


def test_left_right_inverses_all_nonzero(A4):
    for x in A4.elements():
        if x:
            l, r = inverses(x)
            assert l * x == A4.one and x * r == A4.one
