import pytest

from conftest import field, frob_algebra
from oracles import automorphisms_by_generators
from nacx.autos import (
    cyclic_extension_verdict,
    enumerate_id_extensions,
    extension_condition,
    full_aut_group,
    inner_realize,
    make_H,
)
from nacx.errors import DomainError
from nacx.fields import ker_norm_enumerate
from nacx.petit import petit_algebra


def alg(name, m=None, x=None, e=1):
    D = frob_algebra(name, e)
    K = D.K
    x = K.gen if x is None else K(x)
    return petit_algebra(D, m or D.m, D(x))


@pytest.fixture
def A4():
    return alg("F4")


def test_extension_condition_examples(A4):
    K = A4.D.K
    assert extension_condition(A4, None, K.one)
    sigma = A4.D.sigma
    assert not any(extension_condition(A4, sigma, k) for k in K.elements() if k)
    for k in K.elements():
        if k:
            assert extension_condition(A4, None, k) == (k * A4.D.sigma_K(k) == K.one)


def test_H_id_alpha(A4):
    K = A4.D.K
    a = K.gen
    H = make_H(A4, None, a)
    D = A4.D
    for x in A4.elements():
        a0, a1 = x.coeffs
        assert H(x) == A4([a0, a1 * D(a)])
    assert H.order == 3 and H.verified


def test_H_trivial_and_order_two(A4):
    H = make_H(A4, None, A4.D.K.one)
    assert all(H(b) == b for b in A4.basis()) and H.order == 1
    A9 = alg("F9")
    assert make_H(A9, None, -A9.D.K.one).order == 2


def test_make_H_rejects_bad_k(A4):
    A9 = alg("F9")
    K9 = A9.D.K
    k = next(x for x in K9.elements() if x and x ** 4 != K9.one)  # order 8, N(k) = -1
    with pytest.raises(DomainError):
        make_H(A9, None, k)
    with pytest.raises(DomainError):
        make_H(A4, A4.D.sigma, A4.D.K.one)


@pytest.mark.parametrize("name,e,size", [("F4", 1, 3), ("F9", 1, 4), ("F8", 1, 7), ("F64", 2, 21)])
def test_id_extension_group_orders(name, e, size):
    A = alg(name, e=e)
    G = enumerate_id_extensions(A)
    assert G.order == size
    assert len(ker_norm_enumerate(A.D.tower)) == size


def test_composition_is_kernel_multiplication():
    A = alg("F9")
    kernel = ker_norm_enumerate(A.D.tower)
    for a in kernel:
        for b in kernel:
            Ha, Hb, Hab = (make_H(A, None, k) for k in (a, b, a * b))
            for x in A.basis():
                assert Ha(Hb(x)) == Hab(x)


@pytest.mark.parametrize("name,m,size", [("F4", 2, 3), ("F8", 3, 7)])
def test_full_group_matches_oracle(name, m, size):
    A = alg(name, m)
    res = full_aut_group(A)
    assert res.hypotheses["holds"]
    assert res.group.order == size
    assert all(c["tau"] == "id" for c in res.classification)
    oracle = automorphisms_by_generators(A)
    assert {tuple(map(tuple, M)) for M in oracle} == {H.key() for H in res.group.elements}


def test_f9_outside_hypotheses():
    A = alg("F9")
    res = full_aut_group(A)
    assert not res.hypotheses["no_nontrivial_mth_root_in_F0"]
    assert res.group.order == len(automorphisms_by_generators(A)) == 8
    assert res.extensions == {0: 4, 1: 4}
    B = alg("F9", x=[1, 1])
    assert full_aut_group(B).group.order == len(automorphisms_by_generators(B)) == 4


@pytest.mark.parametrize("name", ["F4", "F8", "F16", "F27"])
def test_no_sigma_extensions_under_hypotheses(name):
    D = frob_algebra(name)
    K = D.K
    from nacx.fields import in_proper_subfield

    for x in K.elements():
        if x and not in_proper_subfield(K, x)[0]:
            res = full_aut_group(petit_algebra(D, D.m, D(x)))
            assert res.hypotheses["holds"]
            assert all(n == 0 for j, n in res.extensions.items() if j)


def test_inner_examples(A4):
    K = A4.D.K
    c = inner_realize(make_H(A4, None, K.gen))
    assert c.inverse() * A4.D.sigma_K(c) == K.gen
    c1 = inner_realize(make_H(A4, None, K.one))
    assert c1.inverse() * A4.D.sigma_K(c1) == K.one
    A9 = alg("F9")
    K9 = A9.D.K
    c = inner_realize(make_H(A9, None, -K9.one))
    assert c ** 2 == -K9.one  # primitive 4th root


@pytest.mark.parametrize("name,e", [("F4", 1), ("F8", 1), ("F9", 1), ("F64", 2)])
def test_inner_realization_all_kernel(name, e):
    A = alg(name, e=e)
    for k in ker_norm_enumerate(A.D.tower):
        H = make_H(A, None, k)
        c = inner_realize(H)
        assert H.inner_witness == c
        cA, cinv = A.embed(c), A.embed(c.inverse())
        for b in A.basis():
            assert (cinv * b) * cA == H(b)


def test_cyclic_extension_verdicts(A4):
    v = cyclic_extension_verdict(alg("F9"))
    assert v.verdict is True and v.degree == 2 and v.generator.order == 2
    assert v.generator.k_field == -frob_algebra("F9").K.one
    v = cyclic_extension_verdict(A4, 2)
    assert v.verdict is False and v.clauses["c_cyclic_subgroup"] is False and v.group_order == 3
    v = cyclic_extension_verdict(alg("F64", e=2))
    assert v.verdict is True and v.degree == 3 and v.generator.order == 3
    v = cyclic_extension_verdict(alg("F4", x=[1, 0]))
    assert v.verdict == "not applicable (not division)"
