"""Small named categories used to exercise the pair-category constructions.

Graphs are reflexive: a graph map sends vertices to vertices and each edge
to an edge or to a single vertex.  Only the skeleton on at most two vertices
is built: one vertex ``G1``, two isolated vertices ``D2``, one edge ``K2``.
"""
from itertools import product

from .catkit import (DualAdjunction, FinCat, Functor, build_category, from_coreflection,
                     from_reflection, full_subcategory)

GRAPHS = {"G1": (1, ()), "D2": (2, ()), "K2": (2, ((0, 1),))}


def split_retraction(bad_ee=False):
    """x, y with p: x -> y, s: y -> x, p s = 1_y and e = s p idempotent.
    ``bad_ee`` declares e e = 1_x instead, which breaks associativity."""
    morph = {"1x": ("x", "x"), "1y": ("y", "y"), "p": ("x", "y"), "s": ("y", "x"), "e": ("x", "x")}
    comp = {
        ("1x", "1x"): "1x", ("1y", "1y"): "1y",
        ("p", "1x"): "p", ("1y", "p"): "p", ("s", "1y"): "s", ("1x", "s"): "s",
        ("e", "1x"): "e", ("1x", "e"): "e",
        ("p", "s"): "1y", ("s", "p"): "e",
        ("e", "e"): "1x" if bad_ee else "e",
        ("p", "e"): "p", ("e", "s"): "s",
    }
    return build_category("split", ["x", "y"], morph, comp, {"x": "1x", "y": "1y"})


def one_morphism():
    return build_category("1", ["*"], {"id": ("*", "*")}, {("id", "id"): "id"}, {"*": "id"})


def _graph_maps(g, h):
    n, edges = GRAPHS[g]
    m, hedges = GRAPHS[h]
    allowed = {(a, b) for a, b in hedges} | {(b, a) for a, b in hedges}
    for t in product(range(m), repeat=n):
        if all(t[a] == t[b] or (t[a], t[b]) in allowed for a, b in edges):
            yield t


def graphs():
    objs = list(GRAPHS)
    morph = {}
    for g in objs:
        for h in objs:
            for t in _graph_maps(g, h):
                morph[("gh", g, h, t)] = (g, h)
    comp = {}
    for f, (a, b) in morph.items():
        for g2, (b2, c) in morph.items():
            if b2 == b:
                comp[(g2, f)] = ("gh", a, c, tuple(g2[3][v] for v in f[3]))
    ident = {g: ("gh", g, g, tuple(range(GRAPHS[g][0]))) for g in objs}
    return build_category("Graphs<=2", objs, morph, comp, ident)


def algebras(sizes=(1, 2)):
    """Skeleton of finite Boolean algebras B1, B2 with all homomorphisms.
    A hom B_m -> B_n is stored by its atom map (atoms of B_n -> atoms of B_m)."""
    objs = [f"B{k}" for k in sizes]
    morph = {}
    for m in sizes:
        for n in sizes:
            for amap in product(range(m), repeat=n):
                morph[("hom", m, n, amap)] = (f"B{m}", f"B{n}")
    comp = {}
    for f in morph:
        for g in morph:
            if g[1] == f[2]:
                comp[(g, f)] = ("hom", f[1], g[2], tuple(f[3][z] for z in g[3]))
    ident = {f"B{k}": ("hom", k, k, tuple(range(k))) for k in sizes}
    return build_category("BA<=2", objs, morph, comp, ident)


def _swap(k):
    return tuple(reversed(range(k))) if k == 2 else tuple(range(k))


def tarski_adjunction(X, names, twisted=False):
    """S = powerset, T = atoms between B1, B2 and the graphs in ``names``
    (size -> object of X).  ``twisted`` conjugates T by the swap of the
    two-point set, which makes eta and eps nontrivial."""
    A = algebras()
    size = {v: k for k, v in names.items()}
    sig = {k: _swap(k) if twisted else tuple(range(k)) for k in names}

    def T_mor(h):
        _, m, n, amap = h
        # vertex map At(B_n) -> At(B_m), conjugated by the swap when twisted
        t = tuple(sig[m][amap[sig[n][v]]] for v in range(n))
        return ("gh", names[n], names[m], t)

    def S_mor(f):
        _, g, h, t = f
        return ("hom", size[h], size[g], t)

    T = Functor("T", A.op(), X, {f"B{k}": names[k] for k in names}, {h: T_mor(h) for h in A.morphisms})
    S = Functor("S", X, A.op(), {names[k]: f"B{k}" for k in names}, {f: S_mor(f) for f in X.morphisms})
    eta = {names[k]: ("gh", names[k], names[k], sig[k]) for k in names}
    eps = {f"B{k}": ("hom", k, k, sig[k]) for k in names}
    return DualAdjunction(A, X, S, T, eta, eps, "tarski" + (" twisted" if twisted else "")).validate()


def perturbed(adj, component):
    """Same data with eta at ``component`` replaced by another endomorphism."""
    X = adj.X
    cur = adj.eta[component]
    other = next(m for m in X.hom(component, component) if m != cur)
    eta = dict(adj.eta)
    eta[component] = other
    return DualAdjunction(adj.A, adj.X, adj.S, adj.T, eta, adj.eps, adj.name + " perturbed")


def _vertex_functor(Y, X, target):
    ob = {y: target[y] for y in Y.objects}
    mor = {f: ("gh", target[f[1]], target[f[2]], f[3]) for f in Y.morphisms}
    return Functor("E", Y, X, ob, mor)


def edgeless_fixture(twisted=False):
    """Edgeless graphs coreflective in graphs; E deletes edges and pi is the
    identity on vertices."""
    Y = graphs()
    X = full_subcategory(Y, ["G1", "D2"], "Edgeless")
    E = _vertex_functor(Y, X, {"G1": "G1", "D2": "D2", "K2": "D2"})
    pi = {y: ("gh", E.ob[y], y, tuple(range(GRAPHS[y][0]))) for y in Y.objects}
    adj = tarski_adjunction(X, {1: "G1", 2: "D2"}, twisted)
    P = from_coreflection(Y, X, E, pi)
    return {"Y": Y, "X": X, "E": E, "unit": pi, "adj": adj, "P": P}


def complete_fixture(twisted=False):
    """Complete graphs reflective in graphs; E adds all edges and iota is the
    identity on vertices."""
    Y = graphs()
    X = full_subcategory(Y, ["G1", "K2"], "Complete")
    E = _vertex_functor(Y, X, {"G1": "G1", "D2": "K2", "K2": "K2"})
    iota = {y: ("gh", y, E.ob[y], tuple(range(GRAPHS[y][0]))) for y in Y.objects}
    adj = tarski_adjunction(X, {1: "G1", 2: "K2"}, twisted)
    J = from_reflection(Y, X, E, iota)
    return {"Y": Y, "X": X, "E": E, "unit": iota, "adj": adj, "P": J}


def identity_class(X):
    """All isomorphisms of X: the smallest class closed under isomorphisms."""
    return sorted({m for a in X.objects for b in X.objects for m in X.isos(a, b)}, key=repr)
