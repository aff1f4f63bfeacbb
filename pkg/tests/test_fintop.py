import pytest
from hypothesis import given, strategies as st

from findual.errors import PreconditionError
from findual.fintop import (ContMap, all_topologies, beta_contact, classify_map, classify_space,
                            continuous_maps, dense_restriction, discrete_space, identity_map,
                            indiscrete_space, irreducible_calculus, is_hausdorff, is_normal_space,
                            make_space, rc_algebra, rc_boolean_report, rc_contact, rc_of_map,
                            separation, separation_oracle, sierpinski, sigma_map, spaces_up_to,
                            t4_identity, topology_representatives)

S = sierpinski()
D2 = discrete_space(2)
I2 = indiscrete_space(2)
PT = discrete_space(1)


def test_closure_interior_examples():
    assert S.closure(0b10) == S.full and S.interior(0b01) == 0
    for A in range(4):
        assert D2.closure(A) == A == D2.interior(A)
    assert I2.closure(0b01) == I2.full


def test_sierpinski_completion():
    assert make_space(2, [0b10]) == S
    assert S.opens == {0, 0b10, 0b11}


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 29)])
def test_topology_counts(n, count):
    assert len(all_topologies(n)) == count


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 9)])
def test_topologies_up_to_homeomorphism(n, count):
    assert len(topology_representatives(n)) == count


def test_rc_examples():
    assert len(rc_algebra(D2).elements) == 4
    assert rc_algebra(S).elements == (0, S.full)
    assert rc_algebra(I2).elements == (0, I2.full)


@pytest.mark.parametrize("X", list(spaces_up_to(3)), ids=lambda X: X.describe())
def test_rc_is_boolean_with_closure_of_union_as_join(X):
    assert rc_boolean_report(X, all_subfamilies=True) == []


def test_rc_contact_and_sigma():
    alg = rc_contact(D2)
    sig = sigma_map(D2)
    assert all(ok for _, ok in sig.values())
    assert sig[0][0] != sig[1][0]
    s = sigma_map(S)
    assert s[0] == s[1] and s[0][1]
    assert all(not alg.contact(0, m) for m in alg.elements())


def test_rc_of_map_examples():
    ident = rc_of_map(identity_map(S))
    assert ident.table == tuple(ident.dom.elements())
    f = ContMap(D2, S, (0, 1))
    r = rc_of_map(f)
    assert r.table == (0, 0b11)
    const = rc_of_map(ContMap(D2, PT, (0, 0)))
    assert const.table == (0, 0b11)


def test_classify_examples():
    f = ContMap(D2, S, (0, 1))
    assert not classify_map(f)["quasi_open"]
    g = ContMap(I2, PT, (0, 0))
    flags = classify_map(g)
    assert flags["closed"] and flags["surjective"] and flags["irreducible"]
    c = classify_space(S)
    assert c["extremally_disconnected"] and c["T4"] and not c["hausdorff"]


def test_irreducible_examples():
    r = irreducible_calculus(identity_map(S))
    assert r.iso and r.inverse and all(H == K for H, K in r.rho.items())
    p = ContMap(I2, PT, (0, 0))
    r = irreducible_calculus(p)
    assert r.rho == {0: 0, 0b11: 0b1} and r.iso and r.inverse
    with pytest.raises(PreconditionError):
        irreducible_calculus(ContMap(D2, PT, (0, 0)))


def test_t4_identity_needs_a_normal_hausdorff_codomain():
    p = identity_map(S)
    with pytest.raises(PreconditionError):
        irreducible_calculus(p, square=(p, p, p))
    q = identity_map(D2)
    r = irreducible_calculus(q, square=(q, q, q))
    assert r.lemma


def test_t4_identity_on_a_collapse():
    p = ContMap(I2, PT, (0, 0))
    pp = ContMap(D2, PT, (0, 0))
    f = ContMap(D2, I2, (0, 1))
    g = identity_map(PT)
    for G in rc_algebra(I2).elements:
        ok, _, _ = t4_identity(p, pp, f, g, G)
        assert ok


def test_dense_restriction_examples():
    d = dense_restriction(S, S.full)
    assert all(d.r[F] == F for F in d.r) and d.inverse
    d = dense_restriction(S, 0b10)
    assert d.r[S.full] == 0b1 and d.e[0b1] == S.full
    with pytest.raises(PreconditionError):
        dense_restriction(S, 0b01)


def test_separation_examples():
    assert separation(D2, 0b01, 0b10)
    assert not separation(S, 0b01, 0b10)
    assert separation(S, 0, 0b11)


@pytest.mark.parametrize("X", list(spaces_up_to(3)), ids=lambda X: X.describe())
def test_separation_matches_oracle(X):
    for F in X.subsets():
        for G in X.subsets():
            assert separation(X, F, G) == separation_oracle(X, F, G)


def test_beta_contact_on_discrete_is_overlap():
    alg = beta_contact(D2)
    assert alg.is_discrete


@given(st.integers(0, len(all_topologies(3)) - 1), st.data())
def test_closure_and_interior_are_dual(k, data):
    X = all_topologies(3)[k]
    A = data.draw(st.integers(0, X.full))
    assert X.closure(A) == X.full ^ X.interior(X.full ^ A)
    assert X.interior(A) & ~A == 0 and A & ~X.closure(A) == 0
    assert X.closure(X.closure(A)) == X.closure(A)


@given(st.integers(0, len(all_topologies(3)) - 1), st.integers(0, len(all_topologies(3)) - 1))
def test_continuous_maps_compose(i, j):
    X, Y = all_topologies(3)[i], all_topologies(3)[j]
    for f in continuous_maps(X, Y)[:5]:
        for g in continuous_maps(Y, X)[:5]:
            h = f.then(g)
            assert all(X.is_open(h.preimage(U)) for U in X.opens)


def test_normal_hausdorff_small_spaces_are_discrete():
    for X in spaces_up_to(3):
        if is_normal_space(X) and is_hausdorff(X):
            assert classify_space(X)["discrete"]
