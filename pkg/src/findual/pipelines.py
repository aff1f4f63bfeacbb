"""End-to-end instances: finite Stone duality, the cluster/regular-closed
correspondence for contact algebras, covers and the deVBoo equivalence, the
hom-set adjunction into sets, and pairs/extensions over maps into 2."""
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .catkit import DualAdjunction, FinCat, Functor, build_category, check_dual_adjunction
from .contact import (all_atom_relations, check_axioms, cluster_list, clust_space,
                      contact_via_ufs, discrete)
from .devries import (TWO_C, DVMap, clust_of_morphism, cover_structures, diamond, dv_homs_to_2,
                      dv_morphisms, dv_transform, f_of_hom, from_hom, hom_from_cluster,
                      induced_map, is_devboo, omega, omega_cluster, pull_back_ultrafilter,
                      quotient_cover)
from .errors import HomLawError, PreconditionError, ScaleError, TheoremViolation
from .finboole import (BoolHom, FinBoolAlg, all_homs, bits, fmt_set, is_sup_preserving,
                       tarski_maps, ultrafilters, ultrafilters_bruteforce, validate_hom)
from .fintop import ContMap, discrete_space, is_continuous, make_space, rc_algebra, sigma_map
from .fixtures import algebras
from .report import Report

SCALE_NOTE = "quantifiers over other algebras are bounded by {} atoms"


def normal_algebras(max_atoms):
    """Contact algebras on at most ``max_atoms`` atoms satisfying C1-C6."""
    return [alg for n in range(1, max_atoms + 1) for alg in all_atom_relations(n)
            if check_axioms(alg).c16]


def equivalence_algebras(max_atoms):
    """Contact algebras whose ultrafilter contact is an equivalence: the
    objects reachable from covers."""
    return [alg for n in range(1, max_atoms + 1) for alg in all_atom_relations(n)
            if contact_via_ufs(alg).is_equivalence]


def _name(alg):
    return alg.describe()


# -- finite Stone duality -----------------------------------------------------

def finite_sets(sizes):
    """Skeleton of finite discrete spaces X1, X2, ... with all maps."""
    objs = [f"X{k}" for k in sizes]
    spaces = {k: discrete_space(k) for k in sizes}
    morph = {}
    for m in sizes:
        for n in sizes:
            for t in product(range(n), repeat=m):
                if not is_continuous(spaces[m], spaces[n], t):
                    raise TheoremViolation("maps between discrete spaces are continuous", t)
                morph[("map", m, n, t)] = (f"X{m}", f"X{n}")
    comp = {}
    for f in morph:
        for g in morph:
            if g[1] == f[2]:
                comp[(g, f)] = ("map", f[1], g[2], tuple(g[3][v] for v in f[3]))
    ident = {f"X{k}": ("map", k, k, tuple(range(k))) for k in sizes}
    return build_category("FinDisc", objs, morph, comp, ident)


@dataclass
class StoneInstance:
    adjunction: DualAdjunction
    report: Report


def stone_instance(max_atoms):
    if not 1 <= max_atoms <= 4:
        raise ScaleError("stone_instance supports 1 to 4 atoms")
    sizes = tuple(range(1, max_atoms + 1))
    A = algebras(sizes)
    X = finite_sets(sizes)
    rep = Report(f"stone <= {max_atoms}")
    alg = {k: FinBoolAlg(k) for k in sizes}

    # S = clopen sets: every subset of a finite discrete space
    for k in sizes:
        sp = discrete_space(k)
        clopen = [U for U in sp.subsets() if sp.is_open(U) and sp.is_closed(U)]
        rep.add(f"X{k}", "clopens form the powerset", len(clopen) == 2 ** k)
    S_mor = {f: ("hom", f[2], f[1], f[3]) for f in X.morphisms}
    S = Functor("CO", X, A.op(), {f"X{k}": f"B{k}" for k in sizes}, S_mor)

    # T = ultrafilters, acting by preimage
    T_mor = {}
    for h in A.morphisms:
        _, m, n, amap = h
        hom = BoolHom(alg[m], alg[n], amap)
        t = tuple(pull_back_ultrafilter(hom, y) for y in range(n))
        T_mor[h] = ("map", n, m, t)
    T = Functor("Ult", A.op(), X, {f"B{k}": f"X{k}" for k in sizes}, T_mor)

    eta, eps = {}, {}
    for k in sizes:
        B = alg[k]
        brute = ultrafilters_bruteforce(B)
        principal = [u.members for u in ultrafilters(B)]
        rep.add(f"B{k}", "ultrafilters are principal", sorted(map(sorted, brute)) == sorted(map(sorted, principal)))
        # eta_X : x |-> {M : x in M}
        t = []
        for x in range(k):
            up = frozenset(M for M in B.elements() if M >> x & 1)
            t.append(principal.index(up))
        rep.add(f"X{k}", "eta is a bijection", sorted(t) == list(range(k)), t)
        eta[f"X{k}"] = ("map", k, k, tuple(t))
        # eps_A : a |-> {u : a in u}
        table = tuple(sum(1 << i for i, u in enumerate(ultrafilters(B)) if a in u) for a in B.elements())
        h = validate_hom(B, B, table)
        eps[f"B{k}"] = ("hom", k, k, h.atom_map)
    adj = DualAdjunction(A, X, S, T, eta, eps, "stone").validate()
    r = check_dual_adjunction(adj)
    rep.add("stone", "triangular identities", r.ok, ";".join(r.failures()) or None)
    rep.add("stone", "units are isomorphisms", r.is_equivalence)
    return StoneInstance(adj, rep)


# -- clusters and regular closed sets -------------------------------------------

def _tau_checks(alg, rep):
    cs = clust_space(alg)
    X = cs.space
    rc = rc_algebra(X)
    name = _name(alg)
    tau = cs.tau
    rep.add(name, "tau lands in RC", all(rc.is_element(tau[a]) for a in alg.elements()))
    rep.add(name, "tau is a bijection onto RC", sorted(tau) == sorted(rc.elements))
    ops = True
    ll = True
    for a in alg.elements():
        if tau[alg.comp(a)] != rc.comp(tau[a]):
            ops = False
        for b in alg.elements():
            if tau[a | b] != rc.join(tau[a], tau[b]) or tau[a & b] != rc.meet(tau[a], tau[b]):
                ops = False
            if alg.ll(a, b) != (tau[a] & ~X.interior(tau[b]) == 0):
                ll = False
    rep.add(name, "tau preserves the Boolean operations", ops)
    rep.add(name, "a << b iff tau(a) inside int tau(b)", ll)
    # rho along gamma o pi (Ult is discrete, so rho is the image map)
    tri = all(sum(1 << cs.cluster_of_atom(i) for i in bits(a)) == tau[a] for a in alg.elements())
    rep.add(name, "rho(gamma pi) o eps = tau", tri)
    return cs


def devries_core_checks(alg, alpha=None):
    if not check_axioms(alg).c16:
        raise PreconditionError("devries_core_checks needs an algebra satisfying C1-C6")
    rep = Report(f"core {_name(alg)}")
    cs = _tau_checks(alg, rep)
    if alpha is None:
        return rep
    if alpha.dom != alg:
        raise PreconditionError("alpha must start at the given algebra")
    if not alpha.is_dv:
        raise PreconditionError("alpha must satisfy V1-V4")
    B = alpha.cod
    cs2 = _tau_checks(B, rep)
    inst = f"{_name(alg)}->{_name(B)} {alpha.describe()}"
    cm = clust_of_morphism(alpha)
    pm = tuple(cs.clusters.index(cm(d)) for d in cs2.clusters)
    f = ContMap(cs2.space, cs.space, pm)
    X, X2 = cs.space, cs2.space
    square = all(X2.closure(f.preimage(X.interior(cs.tau[a]))) == cs2.tau[alpha(a)]
                 for a in alg.elements())
    rep.add(inst, "RC(Clust alpha) o tau = tau o alpha", square)
    om, om2 = omega(alg), omega(B)
    nat = all(omega_cluster(diamond(psi, alpha)) == cm(omega_cluster(psi)) for psi in om2.homs)
    rep.add(inst, "omega o hom(alpha,2) = Clust(alpha) o omega", nat)
    return rep


# -- covers and the deVBoo equivalence --------------------------------------------

def surjections(n):
    """Every map from n atoms onto {0..k-1}, for each k."""
    for k in range(1, n + 1):
        for p in product(range(k), repeat=n):
            if len(set(p)) == k:
                yield p


def _as_dv(hom, dom, cod):
    return DVMap(dom, cod, hom.table)


def equivalence_suite(max_atoms, morphism_atoms=2):
    if not 1 <= max_atoms <= 3:
        raise ScaleError("equivalence_suite supports 1 to 3 atoms")
    rep = Report(f"equivalence <= {max_atoms}")
    rep.notes.append(f"morphism-level checks over objects with <= {min(max_atoms, morphism_atoms)} atoms")
    objects = []
    for n in range(1, max_atoms + 1):
        A = FinBoolAlg(n)
        for p in surjections(n):
            objects.append(cover_structures(A, p))
    for alg in equivalence_algebras(max_atoms):
        rep.add(_name(alg), "U W = Id on objects", quotient_cover(alg).contact == alg)
    lam = {}
    for cov in objects:
        inst = f"{cov.algebra.n_atoms}at p={cov.p}"
        W = quotient_cover(cov.contact)
        rep.add(inst, "U W U = U", W.contact == cov.contact)
        ell = cov.ell
        commutes = all(ell[cov.p[i]] == W.pi[i] for i in range(cov.algebra.n_atoms))
        bij = sorted(ell.values()) == list(range(len(W.classes)))
        rep.add(inst, "lambda = (1, ell_p) is an isomorphism", commutes and bij)
        lam[id(cov)] = ell

    small = [c for c in objects if c.algebra.n_atoms <= morphism_atoms]
    for c1 in small:
        for c2 in small:
            inst = f"p={c1.p} -> p'={c2.p}"
            morphs = []
            defined_ok = True
            for h in all_homs(c1.algebra, c2.algebra):
                phi = _as_dv(h, c1.contact, c2.contact)
                try:
                    f = induced_map(h, c1, c2)
                except PreconditionError:
                    f = None
                if (f is not None) != is_devboo(phi):
                    defined_ok = False
                if f is not None:
                    morphs.append((phi, f))
            rep.add(inst, "C-morphisms are exactly the deVBoo morphisms", defined_ok)
            nat = True
            for phi, f in morphs:
                fphi = f_of_hom(phi)
                if any(fphi[lam[id(c2)][y2]] != lam[id(c1)][f[y2]] for y2 in c2.codomain):
                    nat = False
            rep.add(inst, "lambda natural", nat)
            trans = {phi: dv_transform(phi, check=False) for phi, _ in morphs}
            compat = all((f == g) == (trans[phi] == trans[psi])
                         for phi, f in morphs for psi, g in morphs)
            rep.add(inst, "f = g iff transforms agree", compat)

    objs = equivalence_algebras(min(max_atoms, morphism_atoms))
    homs = {(a, b): [m for m in (_as_dv(h, a, b) for h in all_homs(a.base, b.base)) if is_devboo(m)]
            for a in objs for b in objs}
    functorial = True
    witness = None
    for a in objs:
        for b in objs:
            for phi in homs[(a, b)]:
                fphi = f_of_hom(phi)
                for c in objs:
                    for psi in homs[(b, c)]:
                        fpsi = f_of_hom(psi)
                        comp = psi.after(phi)
                        fc = f_of_hom(comp)
                        if any(fc[z] != fphi[fpsi[z]] for z in fc):
                            functorial = False
                            witness = (phi.describe(), psi.describe())
    rep.add("deVBoo", "f_phi well defined and functorial", functorial, witness)
    return rep


# -- fullness ------------------------------------------------------------------

@dataclass
class FullnessResult:
    phi: DVMap
    report: Report


def fullness_construct(alpha):
    """A deVBoo morphism phi with phi^v = alpha, built through cluster maps,
    ultrafilter quotients and an explicit lift along the projections."""
    A, B = alpha.dom, alpha.cod
    for alg in (A, B):
        if not contact_via_ufs(alg).is_equivalence:
            raise PreconditionError("fullness_construct needs ultrafilter contact to be an equivalence")
    if not alpha.is_dv:
        raise PreconditionError("alpha must satisfy V1-V4")
    rep = Report("fullness")
    inst = f"{_name(A)}->{_name(B)} {alpha.describe()}"
    csA, csB = clust_space(A), clust_space(B)
    cm = clust_of_morphism(alpha)
    rep.add(inst, "Clust(alpha) lands in clusters", cm.valid)
    # f-bar on ultrafilter classes: gamma_A^-1 o Clust(alpha) o gamma_B
    gA_inv = {c: k for k, c in enumerate(csA.gamma)}
    fbar = {}
    for kB, cB in enumerate(csB.gamma):
        d = csB.clusters[cB]
        fbar[kB] = gA_inv[csA.clusters.index(cm(d))]
    # lift through the projections by choosing the first atom of each class
    f = []
    for y in range(B.n_atoms):
        target = csA.classes[fbar[csB.class_of_atom(y)]]
        if not target:
            raise TheoremViolation("lift along the projection", y)
        f.append(bits(target)[0])
    phi = DVMap(A, B, BoolHom(A.base, B.base, tuple(f)).table)
    rep.add(inst, "phi is a deVBoo morphism", is_devboo(phi))
    rep.add(inst, "phi^v = alpha", dv_transform(phi) == alpha)
    if check_axioms(A).c16 and check_axioms(B).c16:
        rep.add(inst, "tau^-1 (rho CO(Ult phi) rho^-1)^v tau = alpha", _via_tau(phi, alpha, csA, csB))
    return FullnessResult(phi, rep)


def _via_tau(phi, alpha, csA, csB):
    from .fintop import rc_contact

    A, B = phi.dom, phi.cod
    rcA, rcB = rc_algebra(csA.space), rc_algebra(csB.space)
    table = []
    for m in rcA.algebra.elements():
        G = rcA.from_mask(m)
        e = 0
        for k in bits(G):
            e |= csA.classes[csA.gamma.index(k)]
        img = 0
        for i in bits(phi(e)):
            img |= 1 << csB.cluster_of_atom(i)
        img = csB.space.closure(img)
        table.append(rcB.to_mask(img))
    moved = dv_transform(DVMap(rc_contact(csA.space), rc_contact(csB.space), tuple(table)))
    back = {rcB.to_mask(csB.tau[b]): b for b in B.elements()}
    return all(back[moved(rcA.to_mask(csA.tau[a]))] == alpha(a) for a in A.elements())


# -- the hom-set adjunction into sets ---------------------------------------------

def monad_check(k, max_atoms=2):
    if not 1 <= k <= 4:
        raise ScaleError("monad_check supports sets with 1 to 4 points")
    rep = Report(f"monad |X|={k}")
    PX = discrete(k)
    cl = sorted(sorted(c.members) for c in cluster_list(PX))
    uf = sorted(sorted(u) for u in ultrafilters_bruteforce(PX.base))
    rep.add(f"P({k})", "Clust = Ult", cl == uf, len(cl))
    for A in normal_algebras(max_atoms):
        inst = f"{_name(A)} vs {k} points"
        homs = dv_homs_to_2(A)
        maps = dv_morphisms(A, PX)
        forward = {}
        ok = True
        for phi in maps:
            fx = []
            for x in range(k):
                h = DVMap(A, TWO_C, tuple(phi(a) >> x & 1 for a in A.elements()))
                if h not in homs:
                    ok = False
                    break
                fx.append(homs.index(h))
            if ok:
                forward[phi] = tuple(fx)
        rep.add(inst, "f(x) = phi(-)(x) is a map into deV(A,2)", ok)
        targets = set(product(range(len(homs)), repeat=k))
        rep.add(inst, "phi |-> f injective", len(set(forward.values())) == len(forward))
        rep.add(inst, "phi |-> f surjective", set(forward.values()) == targets)
        back_ok = True
        for t in sorted(targets):
            table = tuple(sum(1 << x for x in range(k) if homs[t[x]](a)) for a in A.elements())
            phi = DVMap(A, PX, table)
            if not phi.is_dv or forward.get(phi) != t:
                back_ok = False
        rep.add(inst, "f |-> phi lands in de Vries morphisms and inverts", back_ok)
    return rep


# -- pairs and extensions ------------------------------------------------------

@dataclass(frozen=True)
class DeVriesPair:
    algebra: object
    Y: tuple

    def __post_init__(self):
        object.__setattr__(self, "Y", tuple(sorted(self.Y, key=lambda h: h.table)))


@dataclass(frozen=True)
class BooleanDVExtension:
    source: object
    target: object
    gamma: DVMap


def _check_pair_input(A, Y):
    if not check_axioms(A).c16:
        raise PreconditionError("pairs need an algebra satisfying C1-C6")
    allowed = dv_homs_to_2(A)
    for h in Y:
        if h.dom != A or h.cod != TWO_C or h not in allowed:
            raise PreconditionError(f"{h.describe()} is not a de Vries morphism into 2")


def is_pair(A, Y):
    """(ok, first element a > 0 with no phi in Y taking the value 1)."""
    for a in range(1, A.size):
        if not any(h(a) for h in Y):
            return False, fmt_set(a)
    return True, None


def dual_space(A):
    """deV(A,2) as a finite space: opens generated by {phi : phi(a) = 1}."""
    homs = dv_homs_to_2(A)
    base = [sum(1 << i for i, h in enumerate(homs) if h(a)) for a in A.elements()]
    return homs, make_space(len(homs), base)


def _y_sets(A, Y):
    """{Y_a : a in A} with Y_a = {phi in Y : phi(a*) = 0}, as index sets."""
    return {frozenset(i for i, h in enumerate(Y) if h(A.comp(a)) == 0) for a in A.elements()}


def pairs_of(A):
    homs = dv_homs_to_2(A)
    for r in range(1, len(homs) + 1):
        for Y in combinations(homs, r):
            if is_pair(A, Y)[0]:
                yield DeVriesPair(A, Y)


def pair_universal_by_search(A, Y, bound):
    """Definitional universality with other algebras bounded by ``bound`` atoms.
    Returns (universal, witness)."""
    fam = _y_sets(A, Y)
    n = len(Y)
    for A2 in normal_algebras(bound):
        alphas = dv_morphisms(A2, A)
        for P2 in pairs_of(A2):
            Y2 = P2.Y
            if len(Y2) != n:
                continue
            for h in permutations(range(n)):
                fam2 = {frozenset(i for i in range(n) if Y2[h[i]](A2.comp(a)) == 0)
                        for a in A2.elements()}
                if fam2 != fam:
                    continue
                if not any(all(diamond(Y[i], al) == Y2[h[i]] for i in range(n)) for al in alphas):
                    return False, (_name(A2), h)
    return True, None


@dataclass
class PairReport:
    is_pair: bool
    uncovered: object
    dense: bool
    is_universal: object
    maximal: bool
    shortcut_agrees: object
    sigma_tilde: dict
    report: Report


def sigma_tilde(X):
    """For each point x the map RC(X) -> 2, F |-> [x in int F], with a flag
    saying whether it is a de Vries morphism for the overlap contact."""
    from .fintop import rc_contact

    rc = rc_algebra(X)
    alg = rc_contact(X)
    sig = sigma_map(X)
    out = {}
    for x in X.points():
        table = tuple(1 if X.interior(rc.from_mask(m)) >> x & 1 else 0 for m in alg.elements())
        h = DVMap(alg, TWO_C, table)
        members, is_cl = sig[x]
        agrees = None
        if is_cl and check_axioms(alg).c16:
            from .contact import Cluster
            agrees = hom_from_cluster(alg, Cluster(alg, members)) == h
        out[x] = (h, h.is_dv, agrees)
    return out


def pair_ops(A, Y, universality=True, bound=None):
    Y = tuple(Y)
    _check_pair_input(A, Y)
    rep = Report(f"pair {_name(A)}")
    inst = f"{_name(A)} |Y|={len(Y)}"
    ok, unc = is_pair(A, Y)
    rep.add(inst, "de Vries pair", ok, unc)
    homs, space = dual_space(A)
    mask = sum(1 << homs.index(h) for h in Y)
    dense = space.closure(mask) == space.full
    if dense != ok:
        raise TheoremViolation("pair iff dense", inst)
    rep.add(inst, "dense in deV(A,2)", dense)
    maximal = set(Y) == set(homs)
    universal = None
    agrees = None
    if universality:
        if A.n_atoms > 2 or len(Y) > 6:
            raise ScaleError("universality search is limited to 2 atoms and |Y| <= 6")
        bound = bound or A.n_atoms
        rep.notes.append(SCALE_NOTE.format(bound))
        if ok:
            universal, w = pair_universal_by_search(A, Y, bound)
            rep.add(inst, "universal (definitional search)", universal, w)
        else:
            universal = False
        agrees = universal == (ok and maximal)
        rep.add(inst, "universal iff Y = deV(A,2) (finite finding)", agrees)
    st = sigma_tilde(space)
    return PairReport(ok, unc, dense, universal, maximal, agrees, st, rep)


def booleanization(A, Y):
    """gamma(a) = {phi in Y : phi(a) = 1} into P(Y) (discrete)."""
    Y = tuple(Y)
    B = discrete(len(Y))
    return DVMap(A, B, tuple(sum(1 << i for i, h in enumerate(Y) if h(a)) for a in A.elements()))


def extension_checks(gamma):
    """{check: (ok, witness)} for a candidate Boolean de Vries extension."""
    A, B = gamma.dom, gamma.cod
    out = {}
    if not B.is_discrete:
        raise PreconditionError("target must carry the discrete contact")
    t = gamma.table
    dup = next(((fmt_set(a), fmt_set(b)) for a in A.elements() for b in A.elements()
                if a < b and t[a] == t[b]), None)
    out["injective"] = (dup is None, dup)
    for k in ("V1", "V2", "V3", "V4"):
        out[k] = gamma.conditions[k]
    bad = None
    for x in range(B.n_atoms):
        above = [v for v in t if v >> x & 1]
        m = B.top
        for v in above:
            m &= v
        if m != 1 << x:
            bad = x
            break
    out["atoms are meets of image elements"] = (bad is None, bad)
    return out


def is_extension(gamma):
    return all(ok for ok, _ in extension_checks(gamma).values())


def extension_universal_by_search(gamma, bound):
    A, B = gamma.dom, gamma.cod
    image = set(gamma.table)
    for A2 in normal_algebras(bound):
        alphas = dv_morphisms(A2, A)
        for g2 in dv_morphisms(A2, B):
            if set(g2.table) != image or not is_extension(g2):
                continue
            if not any(diamond(gamma, al) == g2 for al in alphas):
                return False, (_name(A2), g2.describe())
    return True, None


def xi_maps(B):
    """The complete homs B -> 2, one per atom."""
    t = tarski_maps(B.base)
    return [from_hom(t.kappa(x), B, TWO_C) for x in range(B.n_atoms)]


def trace(gamma):
    """Y^gamma = {xi o gamma}, listed per atom of the target."""
    return [xi.after(gamma) for xi in xi_maps(gamma.cod)]


@dataclass
class ExtensionReport:
    gamma: DVMap
    checks: dict
    trace: list
    gamma_at_bijective: bool
    universal: object
    report: Report


def extension_ops(gamma, universality=True, bound=None):
    rep = Report("extension")
    inst = f"{_name(gamma.dom)}->{gamma.cod.n_atoms}at {gamma.describe()}"
    checks = extension_checks(gamma)
    for k, (ok, w) in checks.items():
        rep.add(inst, k, ok, w)
    tr = trace(gamma)
    bij = len(set(tr)) == len(tr)
    rep.add(inst, "gamma_at is a bijection onto the trace", bij)
    homs = dv_homs_to_2(gamma.dom)
    rep.add(inst, "trace lies in deV(A,2)", all(h in homs for h in tr))
    rep.add(inst, "trace is a de Vries pair", is_pair(gamma.dom, tr)[0])
    universal = None
    if universality:
        if gamma.dom.n_atoms > 2:
            raise ScaleError("extension universality search is limited to 2 atoms")
        bound = bound or gamma.dom.n_atoms
        rep.notes.append(SCALE_NOTE.format(bound))
        universal, w = extension_universal_by_search(gamma, bound)
        rep.add(inst, "universal (definitional search)", universal, w)
    return ExtensionReport(gamma, checks, tr, bij, universal, rep)


def Gamma(pair):
    return booleanization(pair.algebra, pair.Y)


def Delta(gamma):
    return DeVriesPair(gamma.dom, tuple(trace(gamma)))


def nu(gamma):
    """P(gamma_at^-1) o theta~_B : B -> P(Y^gamma), b |-> {xi o gamma : xi(b) = 1},
    with Y^gamma in the order used by Delta."""
    Y = Delta(gamma).Y
    tr = trace(gamma)
    B = gamma.cod
    pos = [Y.index(h) for h in tr]          # atom x of B -> index in Y
    table = tuple(sum(1 << pos[x] for x in bits(b)) for b in B.elements())
    return validate_hom(B.base, discrete(len(Y)).base, table)


def f_alpha(alpha, Y, Y2):
    """phi' |-> phi' <> alpha as an index map Y' -> Y (None if it leaves Y)."""
    out = []
    for h2 in Y2:
        h = diamond(h2, alpha)
        if h not in Y:
            return None
        out.append(Y.index(h))
    return tuple(out)


def _powerset_map(f, n):
    """P(f) : P(Y) -> P(Y') for f : Y' -> Y given as an index tuple."""
    return BoolHom(FinBoolAlg(n), FinBoolAlg(len(f)), f)


def bmo_roundtrip(max_atoms):
    if not 1 <= max_atoms <= 2:
        raise ScaleError("bmo_roundtrip supports 1 or 2 atoms")
    rep = Report(f"bmo <= {max_atoms}")
    rep.notes.append(SCALE_NOTE.format(max_atoms))
    algs = normal_algebras(max_atoms)
    pairs = []
    for A in algs:
        for P in pairs_of(A):
            u, _ = pair_universal_by_search(A, P.Y, max_atoms)
            if u:
                pairs.append(P)
    rep.add("UdeV", "universal pairs found", bool(pairs), len(pairs))
    for P in pairs:
        inst = f"{_name(P.algebra)} |Y|={len(P.Y)}"
        g = Gamma(P)
        rep.add(inst, "Gamma is a Boolean de Vries extension", is_extension(g))
        back = Delta(g)
        rep.add(inst, "Delta Gamma = Id", back == P)
        chi = all(from_hom(tarski_maps(g.cod.base).chi(i), g.cod, TWO_C).after(g) == h
                  for i, h in enumerate(P.Y))
        rep.add(inst, "chi^phi o gamma = phi", chi)
    # morphisms of UdeV and the action of Gamma
    morph = []
    for P in pairs:
        for P2 in pairs:
            for al in dv_morphisms(P.algebra, P2.algebra):
                f = f_alpha(al, P.Y, P2.Y)
                if f is not None:
                    morph.append((P, P2, al, f))
    squares = all(
        DVMap(P.algebra, discrete(len(P2.Y)), tuple(_powerset_map(f, len(P.Y))(v) for v in Gamma(P).table))
        == diamond(Gamma(P2), al)
        for P, P2, al, f in morph)
    rep.add("UdeV", "Gamma(alpha) = (alpha, P(f_alpha)) commutes", squares, len(morph))
    comp_ok = True
    for P, P2, al, f in morph:
        for Q, Q2, be, g in morph:
            if Q != P2:
                continue
            ba = diamond(be, al)
            fba = f_alpha(ba, P.Y, Q2.Y)
            if fba is None or fba != tuple(f[g[z]] for z in range(len(g))):
                comp_ok = False
    rep.add("UdeV", "Delta Gamma preserves composition", comp_ok)

    exts = []
    for A in algs:
        for m in range(1, len(dv_homs_to_2(A)) + 1):
            B = discrete(m)
            for g in dv_morphisms(A, B):
                if is_extension(g) and extension_universal_by_search(g, max_atoms)[0]:
                    exts.append(g)
    rep.add("UBdeV", "universal extensions found", bool(exts), len(exts))
    for g in exts:
        inst = f"{_name(g.dom)}->{g.cod.n_atoms}at {g.describe()}"
        n_ = nu(g)
        g2 = Gamma(Delta(g))
        rep.add(inst, "nu is a Boolean isomorphism",
                sorted(n_.atom_map) == list(range(g.cod.n_atoms)))
        rep.add(inst, "nu o gamma = Gamma Delta gamma", tuple(n_(v) for v in g.table) == g2.table)
    nat = True
    count = 0
    for g in exts:
        for g2 in exts:
            for al in dv_morphisms(g.dom, g2.dom):
                right = diamond(g2, al)
                for d in all_homs(g.cod.base, g2.cod.base):
                    if tuple(d(v) for v in g.table) != right.table:
                        continue
                    count += 1
                    f = f_alpha(al, Delta(g).Y, Delta(g2).Y)
                    if f is None:
                        nat = False
                        continue
                    Pf = _powerset_map(f, len(Delta(g).Y))
                    n1, n2 = nu(g), nu(g2)
                    if any(n2(d(b)) != Pf(n1(b)) for b in g.cod.elements()):
                        nat = False
    rep.add("UBdeV", "Gamma Delta iso natural", nat, count)
    return rep


# -- normality survey and Fedorchuk morphisms ------------------------------------

@dataclass
class SurveyRow:
    relation: str
    axioms: dict
    normal: bool
    diagonal: bool


def collapse_survey(n):
    if not 1 <= n <= 4:
        raise ScaleError("collapse_survey supports 1 to 4 atoms")
    rows = []
    for alg in all_atom_relations(n):
        r = check_axioms(alg)
        ax = {k: r.passed(k) for k in ("C1", "C2", "C3", "C4", "C5", "C6")}
        rows.append(SurveyRow(_name(alg), ax, r.c16, alg.is_discrete))
    rep = Report(f"survey {n}")
    rep.notes.append(f"{len(rows)} relations on {n} atoms, {sum(r.normal for r in rows)} satisfy C1-C6")
    for row in rows:
        consistent = not row.normal or all(row.axioms[k] for k in ("C1", "C2", "C3", "C4", "C5"))
        rep.add(row.relation, "table consistent", consistent)
        if row.normal and not row.diagonal:
            rep.add(row.relation, "only the diagonal is normal", False, "review")
    return rows, rep


def survey_table(rows):
    head = "relation\tC1\tC2\tC3\tC4\tC5\tC6\tnormal"
    lines = [head]
    for r in rows:
        marks = "\t".join("y" if r.axioms[k] else "n" for k in ("C1", "C2", "C3", "C4", "C5", "C6"))
        lines.append(f"{r.relation}\t{marks}\t{'normal' if r.normal else '-'}")
    return lines


def fed_classify(phi):
    """Flags for a map between contact algebras."""
    flags = {"boolean_hom": phi.is_boolean_hom}
    if phi.is_boolean_hom:
        sup, _ = is_sup_preserving(phi.hom)
        flags["sup_preserving"] = sup
        flags["reflects_contact"] = phi.reflects_contact
        flags["fedorchuk"] = sup and phi.reflects_contact
        flags["devboo"] = is_devboo(phi)
    else:
        flags.update(sup_preserving=False, reflects_contact=phi.reflects_contact,
                     fedorchuk=False, devboo=False)
    flags["coincide"] = flags["fedorchuk"] == flags["devboo"]
    return flags
