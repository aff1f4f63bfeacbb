import random

import pytest
from hypothesis import given, settings, strategies as st

from findual.contact import all_atom_relations, check_axioms, cluster_list, discrete, make_contact
from findual.devries import (DVMap, TWO_C, clust_of_morphism, cover_structures, diamond,
                             dv_homs_to_2, dv_morphisms, dv_transform, f_of_hom, from_hom,
                             identity, is_devboo, monotone_maps, omega, omega_cluster, sim_equal)
from findual.errors import CompositionError, NonMonotoneError
from findual.finboole import FinBoolAlg, all_homs, make_hom
from findual.suites import _random_monotone, _transform_oracle

D1, D2, D3 = discrete(1), discrete(2), discrete(3)
TOTAL2 = make_contact(FinBoolAlg(2), [(0, 1)])


def test_condition_examples():
    assert identity(D2).is_dv
    squash = DVMap(TOTAL2, TOTAL2, (0, 0, 0, 3))
    assert squash.is_dv
    ok, witness = identity(TOTAL2).conditions["V4"]
    assert not ok and "{0}" in str(witness)


def test_transform_examples():
    for phi in monotone_maps(D2, D2):
        assert dv_transform(phi) == phi
    assert dv_transform(identity(TOTAL2)).table == (0, 0, 0, 3)
    const = DVMap(D2, D2, (3, 3, 3, 3))
    assert dv_transform(const) == const
    with pytest.raises(NonMonotoneError):
        dv_transform(DVMap(D2, D2, (0, 3, 0, 0)))


def test_transform_matches_definition_everywhere_small():
    for A in list(all_atom_relations(1)) + list(all_atom_relations(2)):
        for B in list(all_atom_relations(1)) + list(all_atom_relations(2)):
            for phi in monotone_maps(A, B):
                assert dv_transform(phi, check=False) == _transform_oracle(phi)


def test_diamond_is_composition_on_discrete_algebras():
    algs = [D1, D2, D3]
    for A in algs:
        for B in algs:
            for C in algs:
                for f in all_homs(A.base, B.base):
                    for g in all_homs(B.base, C.base):
                        phi, psi = from_hom(f, A, B), from_hom(g, B, C)
                        assert diamond(psi, phi) == psi.after(phi)


def test_diamond_with_identity_is_the_transform():
    for psi in monotone_maps(TOTAL2, D2):
        assert diamond(psi, identity(TOTAL2), check=False) == dv_transform(psi)


def test_diamond_rejects_mismatched_maps():
    with pytest.raises(CompositionError):
        diamond(identity(D2), identity(D1))


def test_composite_transform_law_on_random_pairs():
    rng = random.Random(7)
    rels = list(all_atom_relations(1)) + list(all_atom_relations(2)) + list(all_atom_relations(3))
    doms = [A for A in rels if check_axioms(A).c15]
    done = 0
    while done < 100:
        A, B, C = rng.choice(doms), rng.choice(rels), rng.choice(rels)
        phi, psi = _random_monotone(rng, A, B), _random_monotone(rng, B, C)
        if not (phi.preserves_ll and psi.preserves_ll):
            continue
        done += 1
        lhs = diamond(psi, phi)
        rhs = dv_transform(dv_transform(psi).after(dv_transform(phi)))
        assert lhs == rhs


def test_devboo_examples():
    assert is_devboo(identity(D2))
    carrier_id = from_hom(make_hom(TOTAL2.base, D2.base, (0, 1)), TOTAL2, D2)
    assert carrier_id.reflects_contact and is_devboo(carrier_id)
    back = from_hom(make_hom(D2.base, TOTAL2.base, (0, 1)), D2, TOTAL2)
    assert not is_devboo(back)


def test_sim_equal_on_discrete_is_equality():
    maps = list(monotone_maps(D2, D1))
    for phi in maps:
        for psi in maps:
            assert sim_equal(phi, psi) == (phi == psi)


def test_clust_of_identity_and_collapse():
    cm = clust_of_morphism(identity(D2))
    assert all(cm(d) == d for d in cluster_list(D2))
    collapse = from_hom(make_hom(D2.base, D1.base, (0,)), D2, D1)
    (d,) = cluster_list(D1)
    assert clust_of_morphism(collapse)(d) == cluster_list(D2)[0]


def test_clust_is_functorial():
    algs = [A for n in (1, 2) for A in all_atom_relations(n) if check_axioms(A).c16]
    for A in algs:
        for B in algs:
            for alpha in dv_morphisms(A, B):
                for C in algs:
                    for beta in dv_morphisms(B, C):
                        ca, cb = clust_of_morphism(alpha), clust_of_morphism(beta)
                        cba = clust_of_morphism(diamond(beta, alpha))
                        assert all(cba(e) == ca(cb(e)) for e in cluster_list(C))


def test_homs_into_two():
    assert len(dv_homs_to_2(D2)) == 2
    om = omega(D2)
    assert {omega_cluster(h) for h in om.homs} == set(cluster_list(D2))
    assert len(dv_homs_to_2(TOTAL2)) == 1
    om = omega(TOTAL2)
    assert om.clusters == tuple(cluster_list(TOTAL2))
    om = omega(D2)
    assert om.tau_tilde(D2.top) == {0, 1} and om.tau_tilde(0) == frozenset()


def test_cover_examples():
    A = FinBoolAlg(2)
    assert cover_structures(A, (0, 1)).contact.is_discrete
    assert cover_structures(A, (0, 0)).contact == TOTAL2
    f = f_of_hom(identity(TOTAL2))
    assert f == {0: 0}
    assert f_of_hom(identity(D2)) == {0: 0, 1: 1}


@st.composite
def monotone_pair(draw):
    seed = draw(st.integers(0, 2 ** 32))
    rng = random.Random(seed)
    rels = [A for n in (1, 2) for A in all_atom_relations(n)]
    A, B = rng.choice(rels), rng.choice(rels)
    return _random_monotone(rng, A, B)


@settings(max_examples=200)
@given(monotone_pair())
def test_transform_is_below_and_idempotent(phi):
    t = dv_transform(phi)
    assert all(v & ~w == 0 for v, w in zip(t.table, phi.table))
    assert dv_transform(t) == t
    assert t.is_monotone
