"""Finite categories as explicit tables, plus the pair-category constructions
that lift a dual equivalence along a (co)reflective full embedding.

Morphisms are hashable identifiers.  ``comp[(g, f)]`` is ``g`` after ``f``.
Contravariant functors are ordinary functors out of (or into) an explicit
opposite category; opposite categories share morphism identifiers with the
original.
"""
from dataclasses import dataclass, field

from .errors import LawError, PreconditionError, TheoremViolation
from .report import Report


def _key(x):
    return repr(x)


class FinCat:
    def __init__(self, name, objects, morphisms, comp, ident):
        self.name = name
        self.objects = tuple(objects)
        self.src = {m: d for m, (d, c) in morphisms.items()}
        self.tgt = {m: c for m, (d, c) in morphisms.items()}
        self.comp = dict(comp)
        self.ident = dict(ident)
        self._hom = {}
        for m in sorted(self.src, key=_key):
            self._hom.setdefault((self.src[m], self.tgt[m]), []).append(m)
        self._op = None

    def __repr__(self):
        return f"FinCat({self.name}: {len(self.objects)} objects, {len(self.src)} morphisms)"

    @property
    def morphisms(self):
        return sorted(self.src, key=_key)

    def _hom_from(self, a):
        return [m for m in self.morphisms if self.src[m] == a]

    def hom(self, a, b):
        return list(self._hom.get((a, b), []))

    def compose(self, *ms):
        """compose(h, g, f) = h o g o f."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.comp[(m, out)]
        return out

    def identity(self, x):
        return self.ident[x]

    def inverse(self, f):
        for g in self.hom(self.tgt[f], self.src[f]):
            if self.comp[(g, f)] == self.ident[self.src[f]] and self.comp[(f, g)] == self.ident[self.tgt[f]]:
                return g
        return None

    def is_iso(self, f):
        return self.inverse(f) is not None

    def isos(self, a, b):
        return [f for f in self.hom(a, b) if self.is_iso(f)]

    def op(self):
        if self._op is None:
            morph = {m: (self.tgt[m], self.src[m]) for m in self.src}
            comp = {(f, g): h for (g, f), h in self.comp.items()}
            name = self.name[:-3] if self.name.endswith("^op") else self.name + "^op"
            o = FinCat(name, self.objects, morph, comp, self.ident)
            o._op = self
            self._op = o
        return self._op


def opposite(cat):
    return cat.op()


def hom_enumeration(cat, a, b):
    return cat.hom(a, b)


def validate_category(cat):
    """Raise LawError naming the first failing law."""
    for x in cat.objects:
        i = cat.ident.get(x)
        if i is None or cat.src.get(i) != x or cat.tgt.get(i) != x:
            raise LawError("identity", x)
    for m in cat.morphisms:
        if cat.src[m] not in cat.objects or cat.tgt[m] not in cat.objects:
            raise LawError("morphism endpoints", m)
    for f in cat.morphisms:
        for g in cat._hom_from(cat.tgt[f]):
            h = cat.comp.get((g, f))
            if h is None:
                raise LawError("composition total", (g, f))
            if cat.src.get(h) != cat.src[f] or cat.tgt.get(h) != cat.tgt[g]:
                raise LawError("composite endpoints", (g, f, h))
    for (g, f) in cat.comp:
        if cat.src[g] != cat.tgt[f]:
            raise LawError("composition of non-composable pair", (g, f))
    for f in cat.morphisms:
        if cat.comp[(cat.ident[cat.tgt[f]], f)] != f or cat.comp[(f, cat.ident[cat.src[f]])] != f:
            raise LawError("identity neutral", f)
    by_src = {}
    for m in cat.morphisms:
        by_src.setdefault(cat.src[m], []).append(m)
    for f in cat.morphisms:
        for g in by_src.get(cat.tgt[f], ()):
            gf = cat.comp[(g, f)]
            for h in by_src.get(cat.tgt[g], ()):
                if cat.comp[(h, gf)] != cat.comp[(cat.comp[(h, g)], f)]:
                    raise LawError("associativity", (h, g, f))
    return cat


def build_category(name, objects, morphisms, comp, ident):
    return validate_category(FinCat(name, objects, morphisms, comp, ident))


class Functor:
    def __init__(self, name, src, tgt, ob, mor):
        self.name = name
        self.src = src
        self.tgt = tgt
        self.ob = dict(ob)
        self.mor = dict(mor)

    def __repr__(self):
        return f"Functor({self.name}: {self.src.name} -> {self.tgt.name})"

    def __call__(self, x):
        return self.mor[x] if x in self.mor else self.ob[x]

    def op(self):
        return Functor(self.name + "^op", self.src.op(), self.tgt.op(), self.ob, self.mor)

    def then(self, other):
        """other o self."""
        if other.src is not self.tgt:
            raise LawError("functor composition", (self.name, other.name))
        return Functor(f"{other.name}{self.name}", self.src, other.tgt,
                       {x: other.ob[y] for x, y in self.ob.items()},
                       {m: other.mor[n] for m, n in self.mor.items()})

    def same_as(self, other):
        return (self.src is other.src and self.tgt is other.tgt
                and self.ob == other.ob and self.mor == other.mor)


def identity_functor(cat):
    return Functor("Id", cat, cat, {x: x for x in cat.objects}, {m: m for m in cat.morphisms})


def validate_functor(F):
    C, D = F.src, F.tgt
    for x in C.objects:
        if F.ob.get(x) not in D.objects:
            raise LawError("object map", (F.name, x))
    for m in C.morphisms:
        n = F.mor.get(m)
        if n is None or D.src.get(n) != F.ob[C.src[m]] or D.tgt.get(n) != F.ob[C.tgt[m]]:
            raise LawError("preserves endpoints", (F.name, m))
    for x in C.objects:
        if F.mor[C.ident[x]] != D.ident[F.ob[x]]:
            raise LawError("preserves identities", (F.name, x))
    for (g, f), h in C.comp.items():
        if F.mor[h] != D.comp[(F.mor[g], F.mor[f])]:
            raise LawError("preserves composition", (F.name, g, f))
    return F


class NatTrans:
    def __init__(self, name, F, G, comps):
        self.name = name
        self.F = F
        self.G = G
        self.comps = dict(comps)

    def __getitem__(self, x):
        return self.comps[x]

    def __repr__(self):
        return f"NatTrans({self.name}: {self.F.name} -> {self.G.name})"


def validate_nat(eta):
    F, G = eta.F, eta.G
    if F.src is not G.src or F.tgt is not G.tgt:
        raise LawError("parallel functors", eta.name)
    C, D = F.src, F.tgt
    for x in C.objects:
        c = eta.comps.get(x)
        if c is None or D.src.get(c) != F.ob[x] or D.tgt.get(c) != G.ob[x]:
            raise LawError("component endpoints", (eta.name, x))
    for m in C.morphisms:
        a, b = C.src[m], C.tgt[m]
        if D.comp[(G.mor[m], eta.comps[a])] != D.comp[(eta.comps[b], F.mor[m])]:
            raise LawError("naturality", (eta.name, m))
    return eta


def build_validated(kind, *args, **kw):
    """Build and validate a category, functor or natural transformation."""
    if kind == "category":
        return build_category(*args, **kw)
    if kind == "functor":
        return validate_functor(Functor(*args, **kw))
    if kind == "nat":
        return validate_nat(NatTrans(*args, **kw))
    raise ValueError(kind)


# -- dual adjunctions ---------------------------------------------------------

@dataclass
class DualAdjunction:
    """S: X -> A^op and T: A^op -> X with eta: Id_X -> TS (components
    X -> TSX in X) and eps: Id_A -> ST (components A -> STA in A)."""

    A: FinCat
    X: FinCat
    S: Functor
    T: Functor
    eta: dict
    eps: dict
    name: str = "adj"

    def validate(self):
        if self.S.src is not self.X or self.S.tgt is not self.A.op():
            raise LawError("S must be X -> A^op", self.name)
        if self.T.src is not self.A.op() or self.T.tgt is not self.X:
            raise LawError("T must be A^op -> X", self.name)
        validate_functor(self.S)
        validate_functor(self.T)
        TS = self.S.then(self.T)
        validate_nat(NatTrans("eta", identity_functor(self.X), TS, self.eta))
        ST = self.T.then(self.S).op()
        ST.src, ST.tgt = self.A, self.A
        validate_nat(NatTrans("eps", identity_functor(self.A), ST, self.eps))
        return self


@dataclass
class AdjReport:
    triangle_T: dict
    triangle_S: dict
    is_equivalence: bool

    @property
    def ok(self):
        return all(self.triangle_T.values()) and all(self.triangle_S.values())

    def failures(self):
        out = [f"T eps o eta T at {a}" for a, ok in self.triangle_T.items() if not ok]
        out += [f"S eta o eps S at {x}" for x, ok in self.triangle_S.items() if not ok]
        return out


def check_dual_adjunction(adj):
    A, X, S, T = adj.A, adj.X, adj.S, adj.T
    tri_T = {}
    for a in A.objects:
        Ta = T.ob[a]
        tri_T[a] = X.comp[(T.mor[adj.eps[a]], adj.eta[Ta])] == X.ident[Ta]
    tri_S = {}
    for x in X.objects:
        Sx = S.ob[x]
        tri_S[x] = A.comp[(S.mor[adj.eta[x]], adj.eps[Sx])] == A.ident[Sx]
    equiv = all(X.is_iso(m) for m in adj.eta.values()) and all(A.is_iso(m) for m in adj.eps.values())
    return AdjReport(tri_T, tri_S, equiv)


def identity_adjunction(cat):
    """Any category against its opposite, with identity units."""
    X = cat.op()
    S = Functor("S", X, cat.op(), {x: x for x in cat.objects}, {m: m for m in cat.morphisms})
    T = Functor("T", cat.op(), X, {x: x for x in cat.objects}, {m: m for m in cat.morphisms})
    ident = {x: cat.ident[x] for x in cat.objects}
    return DualAdjunction(cat, X, S, T, ident, dict(ident), "identity")


# -- covering classes ---------------------------------------------------------

def full_subcategory(Y, objects, name=None):
    objs = [o for o in Y.objects if o in set(objects)]
    morph = {m: (Y.src[m], Y.tgt[m]) for m in Y.morphisms if Y.src[m] in objs and Y.tgt[m] in objs}
    comp = {(g, f): h for (g, f), h in Y.comp.items() if f in morph and g in morph}
    return FinCat(name or Y.name + "|sub", objs, morph, comp, {o: Y.ident[o] for o in objs})


def check_full_subcategory(Y, X):
    for x in X.objects:
        for x2 in X.objects:
            if set(X.hom(x, x2)) != set(Y.hom(x, x2)):
                raise PreconditionError(f"X is not a full subcategory of Y at ({x}, {x2})")
    for m in X.morphisms:
        if X.identity(X.src[m]) != Y.identity(Y.src[m]):
            raise PreconditionError("identities differ")


@dataclass
class CoveringReport:
    P1: tuple      # (ok, witness)
    P2: tuple
    P3: tuple

    @property
    def ok(self):
        return self.P1[0] and self.P2[0] and self.P3[0]


def covering_class(Y, X, P):
    check_full_subcategory(Y, X)
    P = list(P)
    w1 = next((x for x in X.objects if Y.ident[x] not in P), None)
    w2 = None
    for p in P:
        for x in X.objects:
            for f in Y.hom(x, Y.tgt[p]):
                if not any(Y.comp[(p, g)] == f for g in Y.hom(x, Y.src[p])):
                    w2 = (p, f)
                    break
            if w2:
                break
        if w2:
            break
    w3 = next((y for y in Y.objects
               if not any(Y.tgt[p] == y and Y.src[p] in X.objects for p in P)), None)
    return CoveringReport((w1 is None, w1), (w2 is None, w2), (w3 is None, w3))


def bar_closure(Y, X, P):
    """P precomposed with isomorphisms of Y, restricted to X-domains."""
    out = set()
    for p in P:
        for x in X.objects:
            for i in Y.isos(x, Y.src[p]):
                out.add(Y.comp[(p, i)])
    return sorted(out, key=_key)


def from_coreflection(Y, X, E, pi):
    """Coreflections pi_Y : EY -> Y precomposed with X-isomorphisms."""
    out = set()
    for y in Y.objects:
        for x in X.objects:
            for b in X.isos(E.ob[y], x):
                out.add(Y.comp[(pi[y], X.inverse(b))])
    return sorted(out, key=_key)


def from_reflection(Y, X, E, iota):
    """Reflections iota_Y : Y -> EY post-composed with X-isomorphisms."""
    out = set()
    for y in Y.objects:
        for x in X.objects:
            for b in X.isos(E.ob[y], x):
                out.add(Y.comp[(b, iota[y])])
    return sorted(out, key=_key)


# -- pair categories ----------------------------------------------------------

@dataclass
class PairCategory:
    """Unquotiented pair category, its quotient by equality of the second
    component, and the chosen representatives."""

    C: FinCat
    B: FinCat
    rep: dict           # B-morphism -> lexicographically first C-morphism
    cls: dict           # C-morphism -> B-morphism
    congruence: bool
    discrete: bool
    kind: str           # "C" (covers p: TA -> Y) or "D" (j: Y -> TA)


def _pairs(A, T, Y, klass, kind):
    X = T.tgt
    objects = []
    for a in A.objects:
        for p in klass:
            end = Y.src[p] if kind == "C" else Y.tgt[p]
            if end == T.ob[a]:
                objects.append((a, p))
    yobj = (lambda p: Y.tgt[p]) if kind == "C" else (lambda j: Y.src[j])
    morph = {}
    for (a, p) in objects:
        for (a2, p2) in objects:
            for phi in A.hom(a, a2):
                Tphi = T.mor[phi]
                for f in Y.hom(yobj(p2), yobj(p)):
                    if kind == "C":
                        ok = Y.comp[(p, Tphi)] == Y.comp[(f, p2)]
                    else:
                        ok = Y.comp[(Tphi, p2)] == Y.comp[(p, f)]
                    if ok:
                        morph[("m", (a, p), (a2, p2), phi, f)] = ((a, p), (a2, p2))
    by_src = {}
    for m in morph:
        by_src.setdefault(m[1], []).append(m)
    comp = {}
    for m in morph:
        for n in by_src.get(m[2], ()):
            # n after m: (phi', f') o (phi, f) = (phi' o phi, f o f')
            h = ("m", m[1], n[2], A.comp[(n[3], m[3])], Y.comp[(m[4], n[4])])
            comp[(n, m)] = h
    ident = {o: ("m", o, o, A.ident[o[0]], Y.ident[yobj(o[1])]) for o in objects}
    C = FinCat(f"{kind}(A,P,X)", objects, morph, comp, ident)
    return C


def _quotient(C, kind):
    cls = {m: ("c", m[1], m[2], m[4]) for m in C.morphisms}
    rep = {}
    for m in C.morphisms:
        rep.setdefault(cls[m], m)
    morph = {b: (b[1], b[2]) for b in rep}
    comp = {}
    congruence = True
    for (g, f), h in C.comp.items():
        key = (cls[g], cls[f])
        if comp.setdefault(key, cls[h]) != cls[h]:
            congruence = False
    ident = {o: cls[C.ident[o]] for o in C.objects}
    B = FinCat(f"{kind}/~", C.objects, morph, comp, ident)
    discrete = len(rep) == len(cls)
    return B, rep, cls, congruence, discrete


def build_pairs(A, T, Y, klass, kind):
    C = validate_category(_pairs(A, T, Y, klass, kind))
    B, rep, cls, congruence, discrete = _quotient(C, kind)
    if not congruence:
        raise TheoremViolation("equality of second components is a congruence", kind)
    validate_category(B)
    return PairCategory(C, B, rep, cls, congruence, discrete, kind)


def _require_equivalence(adj):
    rep = check_dual_adjunction(adj)
    if not (rep.ok and rep.is_equivalence):
        raise PreconditionError("a dual equivalence is required")


def build_C(adj, Y, P):
    _require_equivalence(adj)
    check_full_subcategory(Y, adj.X)
    return build_pairs(adj.A, adj.T, Y, P, "C")


def build_D(adj, Y, Jclass):
    _require_equivalence(adj)
    check_full_subcategory(Y, adj.X)
    return build_pairs(adj.A, adj.T, Y, Jclass, "D")


def embed_I(adj, pc):
    """I: A -> B, phi |-> [phi, T phi] between the identity-pair objects."""
    A, T, B = adj.A, adj.T, pc.B
    ob = {a: (a, adj.X.ident[T.ob[a]]) for a in A.objects}
    for o in ob.values():
        if o not in B.objects:
            raise PreconditionError(f"identity of {o[1]} is not in the class")
    mor = {phi: ("c", ob[A.src[phi]], ob[A.tgt[phi]], T.mor[phi]) for phi in A.morphisms}
    I = validate_functor(Functor("I", A, B, ob, mor))
    return I


def is_full_and_faithful(F):
    for a in F.src.objects:
        for b in F.src.objects:
            image = [F.mor[m] for m in F.src.hom(a, b)]
            if len(set(image)) != len(image) or set(image) != set(F.tgt.hom(F.ob[a], F.ob[b])):
                return False
    return True


# -- lifting ------------------------------------------------------------------

@dataclass
class Lifting:
    pairs: PairCategory
    adjunction: DualAdjunction      # the lifted one: B against Y
    I: Functor
    gamma: dict
    report: Report
    D: object = None
    rho: dict = None
    beta: dict = None


def _choose(Y, X, klass, kind, choice):
    """One class member per Y-object (codomain for covers, domain for
    embeddings), identities on X-objects."""
    chosen = {}
    for y in Y.objects:
        if choice and y in choice:
            chosen[y] = choice[y]
        elif y in X.objects:
            chosen[y] = Y.ident[y]
        else:
            cands = [p for p in klass if (Y.tgt[p] if kind == "C" else Y.src[p]) == y]
            if not cands:
                raise PreconditionError(f"no class member at {y}")
            chosen[y] = sorted(cands, key=_key)[0]
        if y in X.objects and chosen[y] != Y.ident[y]:
            raise PreconditionError(f"choice at the X-object {y} must be the identity")
    return chosen


def lift_right(adj, Y, P, choice=None, coreflection=None):
    """Lift along I: A -> C(A,P,X)/~ and J: X -> Y.  ``coreflection`` =
    (E, pi) additionally verifies the reflector identities."""
    pc = build_C(adj, Y, P)
    return _lift(adj, Y, P, pc, choice, "C", coreflection)


def lift_left(adj, Y, Jclass, choice=None, reflection=None, beta_override=None):
    pc = build_D(adj, Y, Jclass)
    return _lift(adj, Y, Jclass, pc, choice, "D", reflection, beta_override)


def _lift(adj, Y, klass, pc, choice, kind, extra, beta_override=None):
    A, X, S, T = adj.A, adj.X, adj.S, adj.T
    B = pc.B
    rep = Report(f"lift {kind}")
    I = embed_I(adj, pc)
    _add(rep, kind, "I full and faithful", is_full_and_faithful(I))
    cover = _choose(Y, X, klass, kind, choice)
    E = {y: (Y.src[cover[y]] if kind == "C" else Y.tgt[cover[y]]) for y in Y.objects}
    eta_inv = {x: X.inverse(adj.eta[x]) for x in X.objects}

    def tilde_obj(y):
        e = E[y]
        if kind == "C":
            m = Y.comp[(cover[y], eta_inv[e])]          # TSEY -> EY -> Y
        else:
            m = Y.comp[(adj.eta[e], cover[y])]          # Y -> EY -> TSEY
        o = (S.ob[e], m)
        if o not in B.objects:
            raise PreconditionError(f"{m} is not in the class (close it under isomorphisms)")
        return o

    St_ob = {y: tilde_obj(y) for y in Y.objects}

    def search(src, tgt, f):
        cands = [m for m in pc.C.hom(src, tgt) if m[4] == f]
        return sorted(cands, key=lambda m: _key(m[3]))[0] if cands else None

    St_mor = {}
    phi_f = {}
    for f in Y.morphisms:
        y2, y = Y.src[f], Y.tgt[f]            # f: Y' -> Y gives S~Y -> S~Y' in B
        m = search(St_ob[y], St_ob[y2], f)
        if m is None:
            raise TheoremViolation("a lift phi_f exists", f)
        phi_f[f] = m[3]
        St_mor[f] = pc.cls[m]
    S_t = validate_functor(Functor("S~", Y, B.op(), St_ob, St_mor))
    T_t = validate_functor(Functor("T~", B.op(), Y, {o: (Y.tgt[o[1]] if kind == "C" else Y.src[o[1]])
                                                     for o in B.objects},
                                   {b: b[3] for b in B.morphisms}))
    _add(rep, kind, "T~S~ = Id", S_t.then(T_t).same_as(identity_functor(Y)))
    eta_t = {y: Y.ident[y] for y in Y.objects}
    eps_t = {}
    for o in B.objects:
        y = T_t.ob[o]
        m = search(o, St_ob[y], Y.ident[y])
        if m is None:
            raise TheoremViolation("a counit component exists", o)
        eps_t[o] = pc.cls[m]
    lifted = DualAdjunction(B, Y, S_t, T_t, eta_t, eps_t, f"lifted {kind}").validate()
    adj_rep = check_dual_adjunction(lifted)
    _add(rep, kind, "lifted triangular identities", adj_rep.ok, ";".join(adj_rep.failures()) or None)
    _add(rep, kind, "lifted adjunction is an equivalence", adj_rep.is_equivalence)
    _add(rep, kind, "eta~ = 1", all(v == Y.ident[y] for y, v in eta_t.items()))
    _add(rep, kind, "T~ eps~ = 1", all(T_t.mor[eps_t[o]] == Y.ident[T_t.ob[o]] for o in B.objects))
    _add(rep, kind, "eps~ S~ = 1", all(eps_t[St_ob[y]] == B.ident[St_ob[y]] for y in Y.objects))
    _add(rep, kind, "eps~ components are isomorphisms", all(B.is_iso(m) for m in eps_t.values()))
    _add(rep, kind, "T~ full and faithful",
            all(len({T_t.mor[m] for m in B.hom(o2, o)}) == len(B.hom(o2, o))
                and {T_t.mor[m] for m in B.hom(o2, o)} == set(Y.hom(T_t.ob[o], T_t.ob[o2]))
                for o in B.objects for o2 in B.objects))

    # gamma_X = [1_SX, eta_X] : ISX -> S~X
    gamma = {}
    for x in X.objects:
        src = I.ob[S.ob[x]]
        m = ("c", src, St_ob[x], adj.eta[x])
        if m not in pc.rep:
            raise TheoremViolation("gamma component is a morphism", x)
        gamma[x] = m
    ISop = S.then(I.op())
    StJ = Functor("S~J", X, B.op(), {x: St_ob[x] for x in X.objects},
                  {f: St_mor[f] for f in X.morphisms})
    F1, F2 = ISop.op(), StJ.op()
    F1.src = F2.src = X.op()
    F1.tgt = F2.tgt = B
    try:
        validate_nat(NatTrans("gamma", F1, F2, gamma))
        nat_ok = True
    except LawError:
        nat_ok = False
    _add(rep, kind, "gamma natural", nat_ok)
    _add(rep, kind, "gamma components are isomorphisms", all(B.is_iso(m) for m in gamma.values()))
    _add(rep, kind, "T~ gamma = J eta", all(T_t.mor[gamma[x]] == adj.eta[x] for x in X.objects))
    _add(rep, kind, "gamma T o I eps = eps~ I",
            all(B.comp[(gamma[T.ob[a]], I.mor[adj.eps[a]])] == eps_t[I.ob[a]] for a in A.objects))
    out = Lifting(pc, lifted, I, gamma, rep)
    if extra is not None:
        _projection_identities(out, adj, Y, kind, extra, cover, E, St_ob, St_mor, eps_t, beta_override)
    return out


def _projection_identities(out, adj, Y, kind, extra, cover, E, St_ob, St_mor, eps_t, beta_override):
    A, X, S, T = adj.A, adj.X, adj.S, adj.T
    pc, I, gamma, rep = out.pairs, out.I, out.gamma, out.report
    B = pc.B
    Efun, unit = extra
    _add(rep, kind, "equivalence relation is discrete", pc.discrete)
    D_mor = {b: pc.rep[b][3] for b in B.morphisms}
    D = validate_functor(Functor("D", B, A, {o: o[0] for o in B.objects}, D_mor))
    out.D = D
    _add(rep, kind, "DI = Id", I.then(D).same_as(identity_functor(A)))
    _add(rep, kind, "DS~ = SE", all(
        D.ob[St_ob[y]] == S.ob[Efun.ob[y]] for y in Y.objects) and all(
        D.mor[St_mor[f]] == S.mor[Efun.mor[f]] for f in Y.morphisms))
    rho = {}
    for o in B.objects:
        a, p = o
        Io = I.ob[a]
        m = ("c", o, Io, p) if kind == "C" else ("c", Io, o, p)
        if m not in pc.rep:
            raise TheoremViolation("rho component is a morphism", o)
        rho[o] = m
    out.rho = rho
    idB = identity_functor(B)
    ID = D.then(I)
    try:
        if kind == "C":
            validate_nat(NatTrans("rho", idB, ID, rho))
        else:
            validate_nat(NatTrans("rho", ID, idB, rho))
        _add(rep, kind, "rho natural", True)
    except LawError as e:
        _add(rep, kind, "rho natural", False, e.witness)
    _add(rep, kind, "rho I = 1", all(rho[I.ob[a]] == B.ident[I.ob[a]] for a in A.objects))

    beta = {}
    unique = True
    for o in B.objects:
        a, p = o
        y = Y.tgt[p] if kind == "C" else Y.src[p]
        if kind == "C":
            cands = [b for b in X.hom(E[y], T.ob[a]) if Y.comp[(p, b)] == unit[y]]
        else:
            cands = [b for b in X.hom(T.ob[a], E[y]) if Y.comp[(b, p)] == unit[y]]
        unique &= len(cands) == 1
        if cands:
            beta[o] = cands[0]
    _add(rep, kind, "beta exists and is unique", unique and len(beta) == len(B.objects))
    if beta_override:
        beta.update(beta_override)
    out.beta = beta
    if kind == "C":
        _add(rep, kind, "T~rho o J beta = pi T~", _first_fail(
            (o for o in B.objects if Y.comp[(o[1], beta[o])] != unit[Y.tgt[o[1]]])))
        _add(rep, kind, "beta S~ = eta E", _first_fail(
            (y for y in Y.objects if beta[St_ob[y]] != adj.eta[E[y]])))
        _add(rep, kind, "S beta o eps D = D eps~", _first_fail(
            (o for o in B.objects
             if A.comp[(S.mor[beta[o]], adj.eps[o[0]])] != D.mor[eps_t[o]])))
        _add(rep, kind, "gamma E o rho S~ = S~ pi", _first_fail(
            (y for y in Y.objects
             if B.comp[(gamma[E[y]], rho[St_ob[y]])] != St_mor[unit[y]])))
    else:
        # reflective case: read in X (not X^op), beta_(A,j) : TA -> EY
        _add(rep, kind, "J beta o iota T~ = T~ rho (beta o j = iota)", _first_fail(
            (o for o in B.objects if Y.comp[(beta[o], o[1])] != unit[Y.src[o[1]]])))
        _add(rep, kind, "beta S~ = eta E (beta o eta_EY = 1)", _first_fail(
            (y for y in Y.objects
             if X.comp[(beta[St_ob[y]], adj.eta[E[y]])] != X.ident[E[y]])))
        _add(rep, kind, "S beta o eps D = D eps~ (S(beta^-1) o eps = phi)", _first_fail(
            (o for o in B.objects
             if X.inverse(beta[o]) is None
             or A.comp[(S.mor[X.inverse(beta[o])], adj.eps[o[0]])] != D.mor[eps_t[o]])))
        _add(rep, kind, "rho S~ = S~ iota o gamma E", _first_fail(
            (y for y in Y.objects
             if rho[St_ob[y]] != B.comp[(St_mor[unit[y]], gamma[E[y]])])))


def _first_fail(gen):
    w = next(gen, None)
    return (w is None, w)


def _add(rep, inst, check, result, witness=None):
    """rep.add that also accepts an (ok, witness) pair."""
    if isinstance(result, tuple):
        result, witness = result
    return rep.add(inst, check, result, witness)


def opposite_data_check(adj, Y, Jclass):
    """D(A,J,X) against the opposite of C built from the opposite data
    (A^op, T^op, Y^op, J).  Returns (ok, witness); the correspondence keeps
    each (phi, f) and swaps source and target."""
    D = build_pairs(adj.A, adj.T, Y, Jclass, "D").C
    C = build_pairs(adj.A.op(), adj.T.op(), Y.op(), Jclass, "C").C
    if set(D.objects) != set(C.objects):
        return False, "objects differ"
    flip = {m: ("m", m[2], m[1], m[3], m[4]) for m in D.morphisms}
    if set(flip.values()) != set(C.morphisms):
        m = next(m for m in D.morphisms if flip[m] not in C.src)
        return False, m
    for (g, f), h in D.comp.items():
        if C.comp[(flip[f], flip[g])] != flip[h]:
            return False, (g, f)
    return True, None
