import pytest

from findual import pipelines as pl
from findual.contact import discrete, make_contact
from findual.devries import DVMap, dv_homs_to_2, dv_morphisms, dv_transform, identity, from_hom
from findual.errors import PreconditionError, ScaleError
from findual.finboole import FinBoolAlg, make_hom

D1, D2 = discrete(1), discrete(2)
TOTAL2 = make_contact(FinBoolAlg(2), [(0, 1)])


def test_stone_instance():
    inst = pl.stone_instance(1)
    assert inst.report.ok
    assert len(inst.adjunction.A.objects) == 1
    inst = pl.stone_instance(2)
    assert inst.report.ok
    assert inst.adjunction.eta["X2"] == ("map", 2, 2, (0, 1))


def test_core_checks():
    assert pl.devries_core_checks(D2).ok
    assert pl.devries_core_checks(D2, identity(D2)).ok
    for A in (D1, D2):
        for B in (D1, D2):
            for al in dv_morphisms(A, B):
                assert pl.devries_core_checks(A, al).ok


def test_equivalence_suite_small():
    rep = pl.equivalence_suite(2)
    assert rep.ok, [f.line() for f in rep.failures()]


def test_cover_of_constant_map():
    cov = pl.cover_structures(FinBoolAlg(2), (0, 0))
    assert cov.contact == TOTAL2
    W = pl.quotient_cover(cov.contact)
    assert len(W.classes) == 1


def test_fullness_examples():
    res = pl.fullness_construct(identity(D2))
    assert res.phi == identity(D2) and res.report.ok
    squash = DVMap(TOTAL2, TOTAL2, (0, 0, 0, 3))
    res = pl.fullness_construct(squash)
    assert res.report.ok and dv_transform(res.phi) == squash


def test_fullness_is_exhaustive_at_two_atoms():
    algs = pl.normal_algebras(2)
    for A in algs:
        for B in algs:
            for al in dv_morphisms(A, B):
                assert pl.fullness_construct(al).report.ok


def test_fullness_rejects_non_transitive_contact():
    three = make_contact(FinBoolAlg(3), [(0, 1), (1, 2)])
    with pytest.raises(PreconditionError):
        pl.fullness_construct(identity(three))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_monad(k):
    rep = pl.monad_check(k)
    assert rep.ok, [f.line() for f in rep.failures()]


def test_pair_examples():
    homs = dv_homs_to_2(D2)
    r = pl.pair_ops(D2, homs)
    assert r.is_pair and r.is_universal
    r = pl.pair_ops(D2, homs[:1])
    assert not r.is_pair and r.uncovered is not None
    P = pl.DeVriesPair(D2, homs)
    ys = pl._y_sets(D2, P.Y)
    assert frozenset(range(2)) in ys and frozenset() in ys


def test_pair_universality_declines_large_input():
    D3 = discrete(3)
    with pytest.raises(ScaleError):
        pl.pair_ops(D3, dv_homs_to_2(D3))


def test_extension_examples():
    homs = dv_homs_to_2(D2)
    g = pl.booleanization(D2, homs)
    checks = pl.extension_checks(g)
    assert checks["injective"][0] and checks["atoms are meets of image elements"][0]
    P = pl.DeVriesPair(D2, homs)
    assert pl.Delta(pl.Gamma(P)) == P
    n = pl.nu(g)
    assert tuple(n(v) for v in g.table) == pl.Gamma(pl.Delta(g)).table
    rep = pl.extension_ops(g)
    assert rep.report.ok


def test_bmo_roundtrip():
    assert pl.bmo_roundtrip(1).ok
    rep = pl.bmo_roundtrip(2)
    assert rep.ok, [f.line() for f in rep.failures()]


def test_survey_examples():
    rows, rep = pl.collapse_survey(1)
    assert len(rows) == 1 and rows[0].normal
    rows, rep = pl.collapse_survey(2)
    assert [r.normal for r in rows] == [True, False]
    assert not rows[1].axioms["C6"]
    rows, rep = pl.collapse_survey(3)
    assert len(rows) == 8 and len(pl.survey_table(rows)) == 9
    assert rep.ok


def test_survey_flags_non_diagonal_normal_rows(monkeypatch):
    import findual.pipelines as mod

    real = mod.check_axioms

    class Fake:
        def __init__(self, r):
            self.r = r
            self.c16 = True

        def passed(self, k):
            return True

    monkeypatch.setattr(mod, "check_axioms", lambda alg: Fake(real(alg)))
    _, rep = pl.collapse_survey(2)
    bad = [f for f in rep.failures() if f.check == "only the diagonal is normal"]
    assert [f.instance for f in bad] == ["2at[0-1]"]


def test_fed_classify():
    flags = pl.fed_classify(identity(D2))
    assert flags["boolean_hom"] and flags["fedorchuk"]
    flags = pl.fed_classify(from_hom(make_hom(D2.base, TOTAL2.base, (0, 1)), D2, TOTAL2))
    assert flags["boolean_hom"] and not flags["reflects_contact"]
    assert not pl.fed_classify(DVMap(D2, D2, (0, 0, 0, 3)))["boolean_hom"]
