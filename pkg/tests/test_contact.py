import pytest
from hypothesis import given, strategies as st

from findual.contact import (all_atom_relations, canonical_contacts, check_axioms, check_relation,
                             clust_space, cluster_from_uf, clusters, clusters_bruteforce,
                             contact_via_ufs, discrete, is_cluster, make_contact, uf_contact)
from findual.finboole import FinBoolAlg, ultrafilters
from findual.suites import contact_relations_bruteforce

A1, A2, A3 = FinBoolAlg(1), FinBoolAlg(2), FinBoolAlg(3)
TOTAL2 = make_contact(A2, [(0, 1)])


def test_discrete_and_total_contact():
    D = make_contact(A2)
    assert not D.contact(0b01, 0b10) and D.ll(0b01, 0b01)
    assert TOTAL2.contact(0b01, 0b10) and not TOTAL2.ll(0b01, 0b01)


@pytest.mark.parametrize("alg", list(all_atom_relations(3)), ids=lambda a: a.describe())
def test_zero_touches_nothing_and_is_well_inside_everything(alg):
    for b in alg.elements():
        assert not alg.contact(0, b)
        assert alg.ll(0, b)


def test_axiom_examples():
    assert check_axioms(discrete(3)).all_pass(("C1", "C2", "C3", "C4", "C5", "C6"))
    r = check_axioms(TOTAL2)
    assert r.c15 and not r.passed("C6")
    assert r.witness("C6") == (0b01,)
    _, largest = canonical_contacts(A1)
    assert check_axioms(largest).c16


def test_canonical_contacts():
    small, large = canonical_contacts(A2)
    assert all(small.ll(a, b) == A2.leq(a, b) for a in A2.elements() for b in A2.elements())
    assert large.contact(0b01, 0b10)
    s1, l1 = canonical_contacts(A1)
    assert s1 == l1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_axiom_equivalences(n):
    for alg in all_atom_relations(n):
        assert check_relation(n, alg.contact_rows).equivalences_hold


@pytest.mark.parametrize("n", [1, 2])
def test_determinacy_oracle_against_plain_enumeration(n):
    # n <= 2 is small enough to try every symmetric relation outright
    size = 1 << n
    pairs = [(a, b) for a in range(1, size) for b in range(a + 1, size)]
    found = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * size
        for a in range(1, size):
            rows[a] |= 1 << a
        for k, (a, b) in enumerate(pairs):
            if mask >> k & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
        if check_relation(n, tuple(rows)).c14:
            found.add(tuple(rows))
    assert found == set(contact_relations_bruteforce(n))


def test_ultrafilter_contact_examples():
    u0, u1 = ultrafilters(A2)
    assert not uf_contact(make_contact(A2), u0, u1)
    assert uf_contact(TOTAL2, u0, u1)
    assert contact_via_ufs(make_contact(A2)).is_equivalence
    assert contact_via_ufs(TOTAL2).is_equivalence


@pytest.mark.parametrize("n", [1, 2, 3])
def test_contact_is_read_off_ultrafilters(n):
    for alg in all_atom_relations(n):
        assert contact_via_ufs(alg).characterization_holds


def test_cluster_examples():
    D = make_contact(A2)
    u0 = ultrafilters(A2)[0]
    assert cluster_from_uf(D, u0).members == u0.members
    assert cluster_from_uf(TOTAL2, u0).members == {1, 2, 3}
    ok, why = is_cluster(D, set())
    assert not ok and why.startswith("cl1")
    assert len(clusters(discrete(3)).primary) == 3
    assert len(clusters(TOTAL2).primary) == 1
    assert [c.members for c in clusters(discrete(1)).primary] == [frozenset({1})]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_clusters_agree_with_bruteforce_on_transitive_relations(n):
    for alg in all_atom_relations(n):
        res = clusters(alg)
        if res.uf_equivalence:
            assert res.agree
            assert len(res.primary) == res.n_classes
            assert set(res.primary) == set(clusters_bruteforce(alg))


def test_cluster_space_examples():
    cs = clust_space(make_contact(A2))
    assert len(cs.clusters) == 2 and len(cs.space.opens) == 4
    cs = clust_space(TOTAL2)
    assert len(cs.clusters) == 1
    assert cs.tau[0] == 0 and cs.tau[TOTAL2.top] == 1


@st.composite
def relations(draw, max_atoms=4):
    n = draw(st.integers(1, max_atoms))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return make_contact(FinBoolAlg(n), chosen)


@given(relations(), st.data())
def test_contact_axioms_c1_to_c4(alg, data):
    a = data.draw(st.integers(0, alg.top))
    b = data.draw(st.integers(0, alg.top))
    c = data.draw(st.integers(0, alg.top))
    assert alg.contact(a, b) == alg.contact(b, a)
    assert alg.contact(a, b | c) == (alg.contact(a, b) or alg.contact(a, c))
    if a:
        assert alg.contact(a, a)
    assert alg.ll(a, b) == (not alg.contact(a, alg.comp(b)))


@given(relations())
def test_normal_means_discrete(alg):
    assert check_axioms(alg).c16 == alg.is_discrete
