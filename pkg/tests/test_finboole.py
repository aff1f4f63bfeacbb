import pytest
from hypothesis import given, strategies as st

from findual.errors import DegenerateAlgebraError, HomLawError
from findual.finboole import (FinBoolAlg, all_homs, eps, eps_is_isomorphism, identity_hom,
                              is_sup_preserving, make_hom, tarski_maps, ultrafilters,
                              ultrafilters_bruteforce, validate_hom, verify_tarski)

A1, A2, A3 = FinBoolAlg(1), FinBoolAlg(2), FinBoolAlg(3)


def test_small_carriers():
    assert list(A1.elements()) == [0, 1] and A1.top != 0
    assert A2.size == 4 and A2.atoms() == [1, 2]
    assert A3.size == 8
    assert A3.meet(0b011, 0b110) == 0b010


def test_one_element_algebra_rejected():
    with pytest.raises(DegenerateAlgebraError):
        FinBoolAlg(0)


def test_ultrafilter_examples():
    assert [u.members for u in ultrafilters(A1)] == [frozenset({1})]
    assert [u.members for u in ultrafilters(A2)] == [frozenset({1, 3}), frozenset({2, 3})]
    assert [len(u.members) for u in ultrafilters(A3)] == [4, 4, 4]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ultrafilters_match_bruteforce(n):
    A = FinBoolAlg(n)
    assert sorted(u.members for u in ultrafilters(A)) == sorted(ultrafilters_bruteforce(A))


def test_eps_examples():
    u0, u1 = ultrafilters(A2)
    assert eps(A2, 0) == frozenset()
    assert eps(A2, 0b01) == {u0}
    assert eps(A2, 0b11) == {u0, u1}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_eps_is_boolean_isomorphism(n):
    assert eps_is_isomorphism(FinBoolAlg(n))


def test_hom_examples():
    assert identity_hom(A2).table == (0, 1, 2, 3)
    collapse = make_hom(A1, A2, (0, 0))
    assert collapse(0) == 0 and collapse(1) == 0b11
    with pytest.raises(HomLawError) as e:
        validate_hom(A2, A2, (0, 1, 1, 1))
    assert e.value.law in ("preserves 1", "preserves join", "preserves complement")
    with pytest.raises(HomLawError) as e:
        validate_hom(A2, A2, (0, 1, 1, 3))
    assert e.value.law == "preserves join" and e.value.witness == ("{0}", "{1}")


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2)])
def test_validated_tables_roundtrip(m, n):
    dom, cod = FinBoolAlg(m), FinBoolAlg(n)
    for h in all_homs(dom, cod):
        assert validate_hom(dom, cod, h.table) == h


def test_tarski_examples():
    t = tarski_maps(A2)
    assert t.theta(0b11) == {0, 1}
    k = t.kappa(0)
    assert {a for a in A2.elements() if k(a) == 1} == {0b01, 0b11}
    chi = t.chi(0)
    assert chi(0b01) == 1 and chi(0b10) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tarski_maps_are_bijections(n):
    assert verify_tarski(FinBoolAlg(n))


def test_every_small_hom_is_sup_preserving():
    assert is_sup_preserving(identity_hom(A2))[0]
    assert is_sup_preserving(make_hom(A1, A2, (0, 0)))[0]
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for h in all_homs(FinBoolAlg(m), FinBoolAlg(n)):
                assert is_sup_preserving(h)[0]


@given(st.integers(1, 4), st.data())
def test_hom_laws(n, data):
    A = FinBoolAlg(n)
    B = FinBoolAlg(data.draw(st.integers(1, 4)))
    h = make_hom(A, B, data.draw(st.lists(st.integers(0, n - 1), min_size=B.n_atoms,
                                          max_size=B.n_atoms)))
    a = data.draw(st.integers(0, A.top))
    b = data.draw(st.integers(0, A.top))
    assert h(a | b) == h(a) | h(b)
    assert h(a & b) == h(a) & h(b)
    assert h(A.comp(a)) == B.comp(h(a))
    assert h(0) == 0 and h(A.top) == B.top


@given(st.integers(1, 3), st.data())
def test_composition_matches_tables(n, data):
    A, B, C = (FinBoolAlg(data.draw(st.integers(1, 3))) for _ in range(3))
    f = make_hom(A, B, data.draw(st.lists(st.integers(0, A.n_atoms - 1), min_size=B.n_atoms,
                                          max_size=B.n_atoms)))
    g = make_hom(B, C, data.draw(st.lists(st.integers(0, B.n_atoms - 1), min_size=C.n_atoms,
                                          max_size=C.n_atoms)))
    gf = f.then(g)
    assert all(gf(a) == g(f(a)) for a in A.elements())
