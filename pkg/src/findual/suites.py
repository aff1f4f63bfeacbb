"""Named verification suites shared by the command line and the test suite.

Each suite takes (max_atoms, max_points, seed) and returns a Report.  The
oracles here are deliberately written against raw tables rather than the
library's cached structures.
"""
import random
from itertools import combinations

from . import catkit as ck
from . import fixtures as fx
from . import pipelines as pl
from .contact import (all_atom_relations, check_axioms, check_relation, clusters,
                      clusters_bruteforce, is_cluster, make_contact)
from .devries import (DVMap, diamond, dv_homs_to_2, dv_morphisms, dv_transform, is_devboo,
                      monotone_maps, omega)
from .errors import LawError, PreconditionError, TheoremViolation
from .finboole import FinBoolAlg, all_homs, bits, fmt_set, ultrafilters, ultrafilters_bruteforce
from .fintop import (ContMap, continuous_maps, dense_restriction, irreducible_calculus,
                     is_hausdorff, is_normal_space, rc_algebra, rc_boolean_report, spaces_up_to,
                     t4_identity)
from .report import Report


# 1 -----------------------------------------------------------------------------

def ultrafilter_suite(max_atoms=4, max_points=None, seed=0):
    rep = Report("ultrafilters")
    for n in range(1, max_atoms + 1):
        A = FinBoolAlg(n)
        brute = sorted(sorted(u) for u in ultrafilters_bruteforce(A))
        principal = sorted(sorted(u.members) for u in ultrafilters(A))
        rep.add(f"{n} atoms", "brute force = principal family", brute == principal, len(brute))
    return rep


# 2 -----------------------------------------------------------------------------

def axiom_suite(max_atoms=4, max_points=None, seed=0):
    rep = Report("axioms")
    for n in range(1, max_atoms + 1):
        total = 0
        bad = None
        for alg in all_atom_relations(n):
            total += 1
            r = check_relation(n, alg.contact_rows)
            if not r.equivalences_hold and bad is None:
                bad = alg.describe()
        expected = 2 ** (n * (n - 1) // 2)
        rep.add(f"{n} atoms", "C1-4 iff I1-4 and C1-6 iff I1-6", bad is None, bad)
        rep.add(f"{n} atoms", "all relations enumerated", total == expected, total)
    return rep


# 3 -----------------------------------------------------------------------------

def contact_relations_bruteforce(n):
    """Every symmetric element relation on the n-atom algebra satisfying
    C1-C4, by backtracking over element pairs with C4 pruning.  Yields
    carrier bitmask rows."""
    size = 1 << n
    nonzero = list(range(1, size))
    pairs = [(a, b) for a, b in combinations(nonzero, 2)]
    pairs.sort(key=lambda ab: (max(bin(ab[0]).count("1"), bin(ab[1]).count("1")), ab))
    R = [[None] * size for _ in range(size)]
    for a in range(size):
        R[a][0] = R[0][a] = False
    for a in nonzero:
        R[a][a] = True
    cons = [(x, y, z) for x in range(size) for y in range(size) for z in range(size) if y != z]
    by_pair = {}
    for c in cons:
        x, y, z = c
        for p in ((x, y | z), (x, y), (x, z)):
            by_pair.setdefault(frozenset(p), []).append(c)

    def ok(a, b):
        for x, y, z in by_pair.get(frozenset((a, b)), ()):
            l, r1, r2 = R[x][y | z], R[x][y], R[x][z]
            if l is None or r1 is None or r2 is None:
                continue
            if l != (r1 or r2):
                return False
        return True

    def rec(k):
        if k == len(pairs):
            yield tuple(sum(1 << b for b in range(size) if R[a][b]) for a in range(size))
            return
        a, b = pairs[k]
        for v in (False, True):
            R[a][b] = R[b][a] = v
            if ok(a, b):
                yield from rec(k + 1)
        R[a][b] = R[b][a] = None

    yield from rec(0)


def atom_determinacy_suite(max_atoms=3, max_points=None, seed=0):
    rep = Report("atom determinacy")
    for n in range(1, max_atoms + 1):
        A = FinBoolAlg(n)
        found = 0
        bad = None
        for rows in contact_relations_bruteforce(n):
            found += 1
            if not check_relation(n, rows).c14:
                bad = ("oracle produced a non-contact relation", rows)
                break
            atoms = [(i, j) for i, j in combinations(range(n), 2) if rows[1 << i] >> (1 << j) & 1]
            if make_contact(A, atoms).contact_rows != rows:
                bad = rows
                break
        rep.add(f"{n} atoms", "every C1-C4 relation is derived from its atoms", bad is None, bad)
        rep.add(f"{n} atoms", "one relation per atom relation",
                found == 2 ** (n * (n - 1) // 2), found)
    return rep


# 4 -----------------------------------------------------------------------------

def cluster_suite(max_atoms=4, max_points=None, seed=0):
    rep = Report("clusters")
    for alg in pl.normal_algebras(max_atoms):
        try:
            res = clusters(alg)
        except TheoremViolation as e:
            rep.add(alg.describe(), "c_u family = brute-force clusters", False, e.witness)
            continue
        rep.add(alg.describe(), "c_u family = brute-force clusters", res.agree)
        rep.add(alg.describe(), "|Clust| = number of contact classes on Ult",
                len(res.primary) == res.n_classes, (len(res.primary), res.n_classes))
    return rep


# 5 -----------------------------------------------------------------------------

def _transform_oracle(phi):
    """phi^v from raw contact rows: b << a iff b does not touch a*."""
    A = phi.dom
    rows = A.contact_rows
    out = []
    for a in A.elements():
        j = 0
        for b in A.elements():
            if not rows[b] >> A.comp(a) & 1:
                j |= phi(b)
        out.append(j)
    return DVMap(phi.dom, phi.cod, tuple(out))


def _transform_laws(psi, phi):
    """None when every law holds, else the name of the first failure."""
    tp = dv_transform(phi, check=False)
    if tp != _transform_oracle(phi):
        return "transform matches the definition"
    if any(v & ~w for v, w in zip(tp.table, phi.table)):
        return "phi^v <= phi"
    if dv_transform(tp, check=False) != tp:
        return "idempotence"
    lhs = dv_transform(psi.after(phi), check=False)
    rhs = dv_transform(dv_transform(psi, check=False).after(tp), check=False)
    if lhs != rhs:
        return "(psi o phi)^v = (psi^v o phi^v)^v"
    if diamond(psi, phi, check=False) != lhs:
        return "diamond is the transform of the composite"
    return None


def _random_monotone(rng, A, B):
    order = sorted(A.elements(), key=lambda a: (bin(a).count("1"), a))
    t = [0] * A.size
    for a in order:
        floor = 0
        for i in bits(a):
            floor |= t[a ^ (1 << i)]
        if a == 0:
            t[a] = rng.choice((0, 0, 0, rng.randrange(B.size)))
            continue
        t[a] = floor | (B.top & ~floor & rng.randrange(B.size))
    return DVMap(A, B, tuple(t))


def transform_suite(max_atoms=2, max_points=None, seed=0, samples=1000):
    rep = Report("transform laws")
    algs = [alg for n in range(1, max_atoms + 1) for alg in all_atom_relations(n)]
    good = {}
    for A in algs:
        for B in algs:
            good[(A, B)] = [m for m in monotone_maps(A, B) if m.preserves_ll]
    count = 0
    bad = None
    for A in algs:
        for B in algs:
            for C in algs:
                for phi in good[(A, B)]:
                    for psi in good[(B, C)]:
                        count += 1
                        w = _transform_laws(psi, phi)
                        if w and bad is None:
                            bad = (w, phi.describe(), psi.describe())
    rep.add(f"<= {max_atoms} atoms", "transform laws on all pairs", bad is None, bad or count)

    rng = random.Random(seed)
    rels3 = list(all_atom_relations(3))
    domains = [A for A in rels3 if check_axioms(A).c15]
    rep.notes.append(f"random pairs: first domain ranges over the {len(domains)} 3-atom relations satisfying C1-C5")
    done = 0
    bad = None
    while done < samples:
        A, B, C = rng.choice(domains), rng.choice(rels3), rng.choice(rels3)
        phi = _random_monotone(rng, A, B)
        psi = _random_monotone(rng, B, C)
        if not (phi.preserves_ll and psi.preserves_ll):
            continue
        done += 1
        w = _transform_laws(psi, phi)
        if w and bad is None:
            bad = (w, A.describe(), phi.describe(), psi.describe())
    rep.add(f"3 atoms seed={seed}", "transform laws on random pairs", bad is None, bad or done)
    return rep


# 6 -----------------------------------------------------------------------------

def omega_suite(max_atoms=3, max_points=None, seed=0, naturality_atoms=2):
    rep = Report("omega")
    for A in pl.normal_algebras(max_atoms):
        om = omega(A)
        brute = clusters_bruteforce(A)
        homs = dv_homs_to_2(A)
        ok = len(homs) == len(brute) and sorted(
            sorted(a for a in A.elements() if h(A.comp(a)) == 0) for h in homs) == sorted(
            sorted(c.members) for c in brute)
        inverse = all(
            DVMap(A, h.cod, tuple(0 if A.comp(a) in c.members else 1 for a in A.elements())) == h
            for h in homs for c in [om.cluster_of(h)])
        rep.add(A.describe(), "omega is a bijection onto the clusters", om.bijective and ok)
        rep.add(A.describe(), "stated inverse recovers each map", inverse)
    small = pl.normal_algebras(naturality_atoms)
    for A in small:
        for B in small:
            for al in dv_morphisms(A, B):
                r = pl.devries_core_checks(A, al)
                for f in r.findings:
                    if f.check.startswith("omega"):
                        rep.findings.append(f)
    return rep


def _closed_irreducible(p):
    return p.is_surjective and p.is_closed_map and p.is_irreducible


# 7 -----------------------------------------------------------------------------

def rc_suite(max_atoms=None, max_points=3, seed=0):
    rep = Report("regular closed calculus")
    spaces = list(spaces_up_to(max_points))
    bad = [X.describe() for X in spaces if rc_boolean_report(X, all_subfamilies=True)]
    rep.add(f"{len(spaces)} spaces", "RC Boolean laws and joins = cl of unions", not bad, bad[:3] or None)
    maps = 0
    bad = None
    for X in spaces:
        for Y in spaces:
            for p in continuous_maps(X, Y):
                if not _closed_irreducible(p):
                    continue
                maps += 1
                r = irreducible_calculus(p)
                if not (r.iso and r.inverse) and bad is None:
                    bad = (X.describe(), Y.describe(), p.point_map, r.witness)
    rep.add(f"{maps} irreducible maps", "image map is a Boolean iso with the stated inverse", bad is None, bad)
    dense = 0
    bad = None
    for X in spaces:
        for S in range(1, 1 << X.n):
            if X.closure(S) != X.full:
                continue
            dense += 1
            d = dense_restriction(X, S)
            if not (d.inverse and d.boolean) and bad is None:
                bad = (X.describe(), fmt_set(S))
    rep.add(f"{dense} dense subsets", "restriction and extension are inverse Boolean maps", bad is None, bad)
    return rep


# 8 -----------------------------------------------------------------------------

def t4_suite(max_atoms=None, max_points=3, seed=0):
    rep = Report("T4 lemma")
    rep.notes.append("codomain of p normal and Hausdorff, p' surjective, spaces up to homeomorphism")
    reps = list(spaces_up_to(max_points, up_to_homeomorphism=True))
    cmaps = {}

    def cm(X, Y):
        key = (id(X), id(Y))
        if key not in cmaps:
            cmaps[key] = continuous_maps(X, Y)
        return cmaps[key]

    checks = 0
    configs = 0
    bad = None
    for X in reps:
        for Y in reps:
            if not (is_normal_space(Y) and is_hausdorff(Y)):
                continue
            for p in cm(X, Y):
                if not _closed_irreducible(p):
                    continue
                rcX = rc_algebra(X).elements
                for Xp in reps:
                    for Yp in reps:
                        for pp in cm(Xp, Yp):
                            if not pp.is_surjective:
                                continue
                            for g in cm(Yp, Y):
                                for f in cm(Xp, X):
                                    if any(p(f(x)) != g(pp(x)) for x in range(Xp.n)):
                                        continue
                                    configs += 1
                                    for G in rcX:
                                        checks += 1
                                        ok, lhs, rhs = t4_identity(p, pp, f, g, G)
                                        if not ok and bad is None:
                                            bad = (p.point_map, pp.point_map, f.point_map,
                                                   g.point_map, fmt_set(G), fmt_set(lhs), fmt_set(rhs))
    rep.add(f"{configs} squares", "identity holds for every G", bad is None, bad or checks)
    return rep


# 9 -----------------------------------------------------------------------------

def framework_suite(max_atoms=None, max_points=None, seed=0):
    rep = Report("lifting framework")
    split = fx.split_retraction()
    rep.add("split retraction", "valid category", len(split.morphisms) == 5)
    try:
        fx.split_retraction(bad_ee=True)
        rep.add("split retraction, e e = 1", "associativity witness", False)
    except LawError as e:
        rep.add("split retraction, e e = 1", "associativity witness", e.law == "associativity", e.witness)
    for twisted in (False, True):
        tag = " twisted" if twisted else ""
        edge = fx.edgeless_fixture(twisted)
        comp = fx.complete_fixture(twisted)
        for name, fixture in (("edgeless" + tag, edge), ("complete" + tag, comp)):
            adj = fixture["adj"]
            r = ck.check_dual_adjunction(adj)
            rep.add(name, "Tarski adjunction is an equivalence", r.ok and r.is_equivalence)
            X = fixture["X"]
            lifted = ck.lift_right(adj, X, fx.identity_class(X)) if name.startswith("edge") else \
                ck.lift_left(adj, X, fx.identity_class(X))
            B, I = lifted.pairs.B, lifted.I
            essential = all(any(B.isos(I.ob[a], b) for a in adj.A.objects) for b in B.objects)
            rep.add(name, "identity class: I is an equivalence",
                    lifted.report.ok and ck.is_full_and_faithful(I) and essential)
        bad = ck.check_dual_adjunction(fx.perturbed(edge["adj"], "D2"))
        rep.add("edgeless" + tag, "perturbed unit breaks the triangular identities",
                not bad.ok, bad.failures())
        Y = edge["Y"]
        cov = ck.covering_class(Y, edge["X"], edge["P"])
        rep.add("edgeless" + tag, "P1-P3", cov.ok)
        L = ck.lift_right(edge["adj"], Y, edge["P"], coreflection=(edge["E"], edge["unit"]))
        for f in L.report.findings:
            rep.add("edgeless" + tag, f.check, f.passed, f.witness)
        covJ = ck.covering_class(Y.op(), comp["X"].op(), comp["P"])
        rep.add("complete" + tag, "P1-P3 in the opposite category", covJ.ok)
        M = ck.lift_left(comp["adj"], Y, comp["P"], reflection=(comp["E"], comp["unit"]))
        for f in M.report.findings:
            rep.add("complete" + tag, f.check, f.passed, f.witness)
        Xc = comp["X"]
        o, b = next((o, b) for o, b in M.beta.items() if len(Xc.hom(Xc.src[b], Xc.tgt[b])) > 1)
        other = next(m for m in Xc.hom(Xc.src[b], Xc.tgt[b]) if m != b)
        N = ck.lift_left(comp["adj"], Y, comp["P"], reflection=(comp["E"], comp["unit"]),
                         beta_override={o: other})
        broken = [f for f in N.report.failures() if f.check.startswith("J beta o iota T~")]
        rep.add("complete" + tag, "perturbed beta is detected", bool(broken),
                broken[0].witness if broken else None)
        dropped = [q for q in edge["P"] if Y.tgt[q] != "K2"]
        p3 = ck.covering_class(Y, edge["X"], dropped).P3
        rep.add("edgeless" + tag, "dropping the K2 coreflection fails P3 at K2", p3 == (False, "K2"), p3[1])
        ok, w = ck.opposite_data_check(comp["adj"], Y, comp["P"])
        rep.add("complete" + tag, "D is the opposite of C on opposite data", ok, w)
    return rep


# 10 ----------------------------------------------------------------------------

def pipeline_suite(max_atoms=2, max_points=3, seed=0):
    rep = Report("pipelines")
    rep.extend(pl.equivalence_suite(max_atoms))
    objs = pl.equivalence_algebras(max_atoms)
    count = 0
    bad = None
    for A in objs:
        for B in objs:
            for h in all_homs(A.base, B.base):
                phi = DVMap(A, B, h.table)
                if not is_devboo(phi):
                    continue
                count += 1
                alpha = dv_transform(phi)
                res = pl.fullness_construct(alpha)
                if not res.report.ok or dv_transform(res.phi) != alpha:
                    bad = (A.describe(), B.describe(), phi.describe())
    rep.add(f"{count} deVBoo morphisms", "fullness_construct recovers the class of phi", bad is None, bad)
    normal = pl.normal_algebras(max_atoms)
    count = 0
    bad = None
    for A in normal:
        for B in normal:
            for al in dv_morphisms(A, B):
                count += 1
                res = pl.fullness_construct(al)
                if not res.report.ok:
                    bad = (al.describe(), [f.line() for f in res.report.failures()])
    rep.add(f"{count} V-morphisms", "fullness_construct succeeds", bad is None, bad)
    for k in range(1, max_points + 1):
        rep.extend(pl.monad_check(k, max_atoms))
    rep.extend(pl.bmo_roundtrip(max_atoms))
    return rep


# 11 ----------------------------------------------------------------------------

def survey_suite(max_atoms=4, max_points=None, seed=0):
    rows, rep = pl.collapse_survey(max_atoms)
    rep.add(f"{max_atoms} atoms", "rows enumerated", len(rows) == 2 ** (max_atoms * (max_atoms - 1) // 2),
            len(rows))
    return rep


# extra -------------------------------------------------------------------------

def devries_core_suite(max_atoms=2, max_points=None, seed=0):
    rep = Report("devries core")
    algs = pl.normal_algebras(max_atoms)
    for A in algs:
        rep.extend(pl.devries_core_checks(A))
        for B in algs:
            for al in dv_morphisms(A, B):
                r = pl.devries_core_checks(A, al)
                rep.findings.extend(f for f in r.findings if "->" in f.instance)
    return rep


def stone_suite(max_atoms=3, max_points=None, seed=0):
    return pl.stone_instance(max_atoms).report


SUITES = {
    "ultrafilters": (ultrafilter_suite, dict(max_atoms=4)),
    "axioms": (axiom_suite, dict(max_atoms=4)),
    "atom-determinacy": (atom_determinacy_suite, dict(max_atoms=3)),
    "clusters": (cluster_suite, dict(max_atoms=4)),
    "transform": (transform_suite, dict(max_atoms=2)),
    "omega": (omega_suite, dict(max_atoms=3)),
    "rc-calculus": (rc_suite, dict(max_points=3)),
    "t4-lemma": (t4_suite, dict(max_points=3)),
    "framework": (framework_suite, dict()),
    "pipelines": (pipeline_suite, dict(max_atoms=2, max_points=3)),
    "survey-normal": (survey_suite, dict(max_atoms=4)),
    "devries-core": (devries_core_suite, dict(max_atoms=2)),
    "stone": (stone_suite, dict(max_atoms=3)),
}


def run_suite(name, max_atoms=None, max_points=None, seed=0):
    if name not in SUITES:
        raise KeyError(name)
    fn, defaults = SUITES[name]
    kw = dict(defaults)
    if max_atoms is not None and "max_atoms" in kw:
        kw["max_atoms"] = max_atoms
    if max_points is not None and "max_points" in kw:
        kw["max_points"] = max_points
    return fn(seed=seed, **kw)
