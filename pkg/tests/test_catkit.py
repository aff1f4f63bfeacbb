import pytest

from findual import catkit as ck
from findual import fixtures as fx
from findual.errors import LawError, PreconditionError


def test_small_categories_are_valid():
    ck.validate_category(fx.one_morphism())
    split = fx.split_retraction()
    assert len(split.morphisms) == 5
    assert split.compose("p", "s") == "1y" and split.compose("s", "p") == "e"


def test_bad_table_gives_associativity_witness():
    with pytest.raises(LawError) as e:
        fx.split_retraction(bad_ee=True)
    assert e.value.law == "associativity"
    assert e.value.witness == ("s", "p", "e")


def test_opposite_and_hom_sets():
    split = fx.split_retraction()
    op = ck.opposite(split)
    assert op.op() is split
    assert ck.hom_enumeration(op, "y", "x") == split.hom("x", "y")
    ck.validate_category(op)


@pytest.mark.parametrize("cat", [fx.one_morphism(), fx.split_retraction(), fx.graphs()],
                         ids=lambda c: c.name)
def test_identity_adjunction_is_an_equivalence(cat):
    r = ck.check_dual_adjunction(ck.identity_adjunction(cat))
    assert r.ok and r.is_equivalence


@pytest.mark.parametrize("twisted", [False, True])
def test_tarski_fixture(twisted):
    for make in (fx.edgeless_fixture, fx.complete_fixture):
        adj = make(twisted)["adj"]
        r = ck.check_dual_adjunction(adj)
        assert r.ok and r.is_equivalence


def test_perturbed_unit_names_the_component():
    adj = fx.edgeless_fixture()["adj"]
    r = ck.check_dual_adjunction(fx.perturbed(adj, "D2"))
    assert not r.ok
    assert "S eta o eps S at D2" in r.failures()


def test_covering_classes():
    e = fx.edgeless_fixture()
    assert ck.covering_class(e["Y"], e["X"], e["P"]).ok
    Y = e["Y"]
    assert ck.covering_class(Y, Y, fx.identity_class(Y)).ok
    dropped = [p for p in e["P"] if Y.tgt[p] != "K2"]
    assert ck.covering_class(Y, e["X"], dropped).P3 == (False, "K2")


def test_identity_class_gives_an_equivalent_pair_category():
    e = fx.edgeless_fixture()
    X, adj = e["X"], e["adj"]
    pc = ck.build_C(adj, X, fx.identity_class(X))
    I = ck.embed_I(adj, pc)
    assert ck.is_full_and_faithful(I)
    assert all(any(pc.B.isos(I.ob[a], b) for a in adj.A.objects) for b in pc.B.objects)


def test_graph_fixture_pair_category():
    e = fx.edgeless_fixture()
    pc = ck.build_C(e["adj"], e["Y"], e["P"])
    assert len(pc.B.objects) == 5
    # after the quotient, hom-sets match graph homs between the vertex targets
    for o1 in pc.B.objects:
        for o2 in pc.B.objects:
            y1, y2 = e["Y"].tgt[o1[1]], e["Y"].tgt[o2[1]]
            assert len(pc.B.hom(o1, o2)) == len(e["Y"].hom(y2, y1))


def test_related_parallel_morphisms_collapse():
    e = fx.edgeless_fixture()
    Y = e["Y"]
    extra = ("gh", "D2", "G1", (0, 0))
    pc = ck.build_C(e["adj"], Y, list(e["P"]) + [extra])
    assert len(pc.C.morphisms) > len(pc.B.morphisms)
    assert not pc.discrete


@pytest.mark.parametrize("twisted", [False, True])
def test_lift_right_verifies_everything(twisted):
    e = fx.edgeless_fixture(twisted)
    L = ck.lift_right(e["adj"], e["Y"], e["P"], coreflection=(e["E"], e["unit"]))
    assert L.report.ok, [f.line() for f in L.report.failures()]
    checks = {f.check for f in L.report.findings}
    assert {"T~S~ = Id", "eta~ = 1", "T~ eps~ = 1", "eps~ S~ = 1", "T~ gamma = J eta",
            "DI = Id", "rho I = 1", "beta exists and is unique"} <= checks


@pytest.mark.parametrize("twisted", [False, True])
def test_lift_left_verifies_everything(twisted):
    c = fx.complete_fixture(twisted)
    L = ck.lift_left(c["adj"], c["Y"], c["P"], reflection=(c["E"], c["unit"]))
    assert L.report.ok, [f.line() for f in L.report.failures()]
    assert len([f for f in L.report.findings if f.check.startswith(("J beta", "beta S~", "S beta",
                                                                    "rho S~"))]) == 4


def test_perturbed_beta_is_caught():
    c = fx.complete_fixture()
    L = ck.lift_left(c["adj"], c["Y"], c["P"], reflection=(c["E"], c["unit"]))
    X = c["X"]
    o, b = next((o, b) for o, b in L.beta.items() if len(X.hom(X.src[b], X.tgt[b])) > 1)
    other = next(m for m in X.hom(X.src[b], X.tgt[b]) if m != b)
    M = ck.lift_left(c["adj"], c["Y"], c["P"], reflection=(c["E"], c["unit"]),
                     beta_override={o: other})
    failed = {f.check: f.witness for f in M.report.failures()}
    assert "J beta o iota T~ = T~ rho (beta o j = iota)" in failed


def test_pair_categories_need_an_equivalence():
    e = fx.edgeless_fixture()
    with pytest.raises(PreconditionError):
        ck.build_C(fx.perturbed(e["adj"], "D2"), e["Y"], e["P"])


def test_reflective_construction_is_opposite_of_coreflective():
    c = fx.complete_fixture()
    ok, w = ck.opposite_data_check(c["adj"], c["Y"], c["P"])
    assert ok, w


def test_validators_reject_broken_functors():
    split = fx.split_retraction()
    F = ck.Functor("F", split, split, {"x": "x", "y": "y"},
                   {"1x": "1x", "1y": "1y", "p": "p", "s": "s", "e": "1x"})
    with pytest.raises(LawError):
        ck.validate_functor(F)
