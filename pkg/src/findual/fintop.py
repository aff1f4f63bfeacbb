"""Finite topological spaces given by their full family of open sets.

Point sets are bitmasks over the point indices ``0..n-1``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations, product

from .contact import ContactAlg, is_cluster
from .errors import PreconditionError, TheoremViolation
from .finboole import FinBoolAlg, bits, fmt_set, popcount


def _mask(S):
    if isinstance(S, int):
        return S
    m = 0
    for x in S:
        m |= 1 << x
    return m


@dataclass(frozen=True)
class FinTopSpace:
    n: int
    opens: frozenset
    added: tuple = field(default=(), compare=False, repr=False)

    @property
    def full(self):
        return (1 << self.n) - 1

    def points(self):
        return range(self.n)

    @cached_property
    def _interiors(self):
        opens = sorted(self.opens)
        out = []
        for S in range(1 << self.n):
            m = 0
            for U in opens:
                if U & ~S == 0:
                    m |= U
            out.append(m)
        return tuple(out)

    def interior(self, S):
        return self._interiors[S]

    def closure(self, S):
        return self.full ^ self._interiors[self.full ^ S]

    def is_open(self, S):
        return S in self.opens

    def is_closed(self, S):
        return (self.full ^ S) in self.opens

    @cached_property
    def closed_sets(self):
        return frozenset(self.full ^ U for U in self.opens)

    def subsets(self):
        return range(1 << self.n)

    def leq(self, x, y):
        """Specialization preorder: x <= y iff x lies in the closure of {y}."""
        return bool(self.closure(1 << y) >> x & 1)

    def describe(self):
        opens = sorted(self.opens, key=lambda U: (popcount(U), bits(U)))
        return f"{self.n}pt[" + " ".join(fmt_set(U) for U in opens) + "]"


def _close_family(n, family):
    full = (1 << n) - 1
    fam = set(family) | {0, full}
    changed = True
    while changed:
        changed = False
        cur = list(fam)
        for U in cur:
            for V in cur:
                for W in (U | V, U & V):
                    if W not in fam:
                        fam.add(W)
                        changed = True
    return fam


def make_space(n, opens=()):
    """Space on points 0..n-1; the family is completed under union and
    intersection, and whatever had to be added is kept in ``added``."""
    if n < 1:
        raise ValueError("a space needs at least one point")
    given = set()
    for U in opens:
        m = _mask(U)
        if m >> n:
            raise ValueError(f"open set {U} mentions a point outside 0..{n - 1}")
        given.add(m)
    fam = _close_family(n, given)
    added = tuple(sorted(fam - given))
    return FinTopSpace(n, frozenset(fam), added)


def discrete_space(n):
    return make_space(n, range(1 << n))


def indiscrete_space(n):
    return make_space(n)


def sierpinski():
    return make_space(2, [0b10])


def quotient_space(X, q):
    """Quotient topology along the surjection ``q`` (point -> class index)."""
    k = max(q) + 1
    opens = []
    for V in range(1 << k):
        pre = 0
        for x, c in enumerate(q):
            if V >> c & 1:
                pre |= 1 << x
        if X.is_open(pre):
            opens.append(V)
    return make_space(k, opens)


def subspace(X, Y):
    """Subspace on the points of the mask Y, relabelled 0..k-1 in order.
    Returns (space, embedding tuple)."""
    emb = tuple(bits(Y))
    opens = {_restrict(U, emb) for U in X.opens}
    return make_space(len(emb), opens), emb


def _restrict(S, emb):
    m = 0
    for i, x in enumerate(emb):
        if S >> x & 1:
            m |= 1 << i
    return m


def _extend(S, emb):
    m = 0
    for i in bits(S):
        m |= 1 << emb[i]
    return m


@lru_cache(maxsize=None)
def all_topologies(n):
    """Every topology on n labelled points."""
    full = (1 << n) - 1
    middle = [S for S in range(1, full)]
    out = []
    for choice in range(1 << len(middle)):
        fam = {0, full}
        for k, S in enumerate(middle):
            if choice >> k & 1:
                fam.add(S)
        if all((U | V) in fam and (U & V) in fam for U in fam for V in fam):
            out.append(FinTopSpace(n, frozenset(fam)))
    return tuple(out)


def _relabel(S, perm):
    m = 0
    for x in bits(S):
        m |= 1 << perm[x]
    return m


@lru_cache(maxsize=None)
def topology_representatives(n):
    """One topology per homeomorphism class on n points."""
    seen = set()
    reps = []
    for X in all_topologies(n):
        key = min(tuple(sorted(_relabel(U, p) for U in X.opens)) for p in permutations(range(n)))
        if key not in seen:
            seen.add(key)
            reps.append(X)
    return tuple(reps)


def spaces_up_to(max_points, up_to_homeomorphism=False):
    for n in range(1, max_points + 1):
        yield from (topology_representatives(n) if up_to_homeomorphism else all_topologies(n))


# -- maps --------------------------------------------------------------------

@dataclass(frozen=True)
class ContMap:
    dom: FinTopSpace
    cod: FinTopSpace
    point_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "point_map", tuple(self.point_map))
        if len(self.point_map) != self.dom.n or any(not 0 <= y < self.cod.n for y in self.point_map):
            raise ValueError("point map must send every domain point into the codomain")
        for V in self.cod.opens:
            if not self.dom.is_open(self.preimage(V)):
                raise ValueError(f"not continuous: preimage of open {fmt_set(V)} is not open")

    def __call__(self, x):
        return self.point_map[x]

    def image(self, S):
        m = 0
        for x in bits(S):
            m |= 1 << self.point_map[x]
        return m

    def preimage(self, T):
        m = 0
        for x, y in enumerate(self.point_map):
            if T >> y & 1:
                m |= 1 << x
        return m

    def then(self, g):
        """g after self."""
        return ContMap(self.dom, g.cod, tuple(g.point_map[y] for y in self.point_map))

    @cached_property
    def is_surjective(self):
        return self.image(self.dom.full) == self.cod.full

    @cached_property
    def is_closed_map(self):
        return all(self.cod.is_closed(self.image(F)) for F in self.dom.closed_sets)

    @cached_property
    def is_open_map(self):
        return all(self.cod.is_open(self.image(U)) for U in self.dom.opens)

    @cached_property
    def quasi_open_witness(self):
        for U in sorted(self.dom.opens):
            if U and not self.cod.interior(self.image(U)):
                return U
        return None

    @property
    def is_quasi_open(self):
        return self.quasi_open_witness is None

    @cached_property
    def is_irreducible(self):
        if not (self.is_closed_map and self.is_surjective):
            return False
        full = self.dom.full
        return all(self.image(F) != self.cod.full for F in self.dom.closed_sets if F != full)


def is_continuous(X, Y, pmap):
    try:
        ContMap(X, Y, pmap)
    except ValueError:
        return False
    return True


def continuous_maps(X, Y):
    out = []
    for pm in product(range(Y.n), repeat=X.n):
        if all(X.is_open(_pre(pm, V)) for V in Y.opens):
            out.append(ContMap(X, Y, pm))
    return out


def _pre(pm, V):
    m = 0
    for x, y in enumerate(pm):
        if V >> y & 1:
            m |= 1 << x
    return m


def is_homeomorphism(X, Y, pmap):
    if X.n != Y.n or sorted(pmap) != list(range(Y.n)):
        return False
    f = ContMap.__new__(ContMap)
    object.__setattr__(f, "dom", X)
    object.__setattr__(f, "cod", Y)
    object.__setattr__(f, "point_map", tuple(pmap))
    return all(X.is_open(f.preimage(V)) for V in Y.opens) and f.is_open_map


def identity_map(X):
    return ContMap(X, X, tuple(range(X.n)))


def classify_map(f):
    return {
        "continuous": True,
        "closed": f.is_closed_map,
        "open": f.is_open_map,
        "surjective": f.is_surjective,
        "quasi_open": f.is_quasi_open,
        "irreducible": f.is_irreducible,
    }


def is_normal_space(X):
    closed = sorted(X.closed_sets)
    opens = sorted(X.opens)
    for F in closed:
        for G in closed:
            if F & G == 0 and not any(
                    F & ~U == 0 and G & ~V == 0 and U & V == 0 for U in opens for V in opens):
                return False
    return True


def is_hausdorff(X):
    for x in range(X.n):
        for y in range(x + 1, X.n):
            if not any(U >> x & 1 and V >> y & 1 and U & V == 0
                       for U in X.opens for V in X.opens):
                return False
    return True


def is_extremally_disconnected(X):
    return all(X.is_open(X.closure(U)) for U in X.opens)


def classify_space(X):
    normal = is_normal_space(X)
    return {
        "extremally_disconnected": is_extremally_disconnected(X),
        "normal": normal,
        "T4": normal,
        "hausdorff": is_hausdorff(X),
        "discrete": len(X.opens) == 1 << X.n,
    }


# -- regular closed sets -----------------------------------------------------

def _lex_key(S):
    return tuple(bits(S))


@dataclass(frozen=True)
class RCAlgebra:
    """RC(X) presented as a finite Boolean algebra over its atoms."""

    space: FinTopSpace
    elements: tuple     # regular closed sets (point masks), canonical order
    atoms: tuple        # minimal non-empty regular closed sets

    @cached_property
    def algebra(self):
        return FinBoolAlg(len(self.atoms), "RC")

    @cached_property
    def _to_mask(self):
        out = {}
        for F in self.elements:
            m = 0
            for i, a in enumerate(self.atoms):
                if a & ~F == 0:
                    m |= 1 << i
            out[F] = m
        return out

    @cached_property
    def _from_mask(self):
        return {m: F for F, m in self._to_mask.items()}

    def to_mask(self, F):
        return self._to_mask[F]

    def from_mask(self, m):
        return self._from_mask[m]

    def is_element(self, F):
        return F in self._to_mask

    def join(self, F, G):
        return F | G

    def meet(self, F, G):
        X = self.space
        return X.closure(X.interior(F & G))

    def comp(self, F):
        X = self.space
        return X.closure(X.full ^ F)

    def join_all(self, fam):
        u = 0
        for F in fam:
            u |= F
        return self.space.closure(u)

    def meet_all(self, fam):
        i = self.space.full
        for F in fam:
            i &= F
        return self.space.closure(self.space.interior(i))

    @cached_property
    def contact(self):
        pairs = [(i, j) for i, a in enumerate(self.atoms) for j, b in enumerate(self.atoms)
                 if i < j and a & b]
        return ContactAlg(self.algebra, frozenset(pairs))


@lru_cache(maxsize=None)
def rc_algebra(X):
    elems = [F for F in X.subsets() if X.closure(X.interior(F)) == F]
    elems.sort(key=_lex_key)
    nonzero = [F for F in elems if F]
    atoms = [F for F in nonzero if not any(G != F and G & ~F == 0 for G in nonzero)]
    atoms.sort(key=_lex_key)
    return RCAlgebra(X, tuple(elems), tuple(atoms))


def regular_open_sets(X):
    return sorted((U for U in X.subsets() if X.interior(X.closure(U)) == U), key=_lex_key)


def rc_boolean_report(X, all_subfamilies=False):
    """Check the Boolean structure of RC(X).  Returns a list of failure
    strings (empty when everything holds)."""
    rc = rc_algebra(X)
    fails = []
    A = rc.algebra
    if len(rc.elements) != A.size:
        fails.append(f"RC has {len(rc.elements)} elements but {len(rc.atoms)} atoms")
        return fails
    for F in rc.elements:
        if rc.from_mask(rc.to_mask(F)) != F:
            fails.append(f"{fmt_set(F)} is not the union of its atoms")
    if rc.from_mask(0) != 0 or rc.from_mask(A.top) != X.full:
        fails.append("bottom/top")
    for F in rc.elements:
        mf = rc.to_mask(F)
        c = rc.comp(F)
        if not rc.is_element(c) or rc.to_mask(c) != A.comp(mf):
            fails.append(f"complement of {fmt_set(F)}")
        for G in rc.elements:
            mg = rc.to_mask(G)
            j, m = rc.join(F, G), rc.meet(F, G)
            if not rc.is_element(j) or rc.to_mask(j) != mf | mg:
                fails.append(f"join {fmt_set(F)} {fmt_set(G)}")
            if not rc.is_element(m) or rc.to_mask(m) != mf & mg:
                fails.append(f"meet {fmt_set(F)} {fmt_set(G)}")
    ro = regular_open_sets(X)
    if sorted(X.interior(F) for F in rc.elements) != sorted(ro):
        fails.append("int is not a bijection RC -> RO")
    for F in rc.elements:
        if X.interior(rc.comp(F)) != X.interior(X.full ^ X.interior(F)):
            fails.append(f"int does not carry the complement of {fmt_set(F)}")
        for G in rc.elements:
            if X.interior(rc.meet(F, G)) != X.interior(F) & X.interior(G):
                fails.append(f"int does not carry meet {fmt_set(F)} {fmt_set(G)}")
            if X.interior(F | G) != X.interior(X.closure(X.interior(F) | X.interior(G))):
                fails.append(f"int does not carry join {fmt_set(F)} {fmt_set(G)}")
    if all_subfamilies:
        for fam_mask in range(1 << A.size):
            fam = [rc.from_mask(m) for m in bits(fam_mask)]
            sup = A.join_all(rc.to_mask(F) for F in fam)
            inf = A.meet_all(rc.to_mask(F) for F in fam)
            if rc.from_mask(sup) != rc.join_all(fam):
                fails.append(f"infinite join on family {fam_mask}")
            if rc.from_mask(inf) != rc.meet_all(fam):
                fails.append(f"infinite meet on family {fam_mask}")
    return fails


@lru_cache(maxsize=None)
def rc_contact(X):
    """Contact F touches G iff F and G share a point, on the RC presentation."""
    rc = rc_algebra(X)
    alg = rc.contact
    for F in rc.elements:
        for G in rc.elements:
            mf, mg = rc.to_mask(F), rc.to_mask(G)
            if alg.contact(mf, mg) != bool(F & G):
                raise TheoremViolation("RC contact is overlap", (fmt_set(F), fmt_set(G)))
            if alg.ll(mf, mg) != (F & ~X.interior(G) == 0):
                raise TheoremViolation("RC << is F inside int G", (fmt_set(F), fmt_set(G)))
    return alg


def sigma_map(X):
    """For each point x: the RC elements containing x (as RC masks) and
    whether that set is a cluster of the RC contact algebra."""
    rc = rc_algebra(X)
    alg = rc_contact(X)
    out = {}
    for x in X.points():
        members = frozenset(rc.to_mask(F) for F in rc.elements if F >> x & 1)
        out[x] = (members, is_cluster(alg, members)[0])
    return out


def rc_of_map(f):
    """The map RC(cod) -> RC(dom), G |-> cl(f^-1(int G)), as a DVMap."""
    from .devries import DVMap

    rc_dom, rc_cod = rc_algebra(f.dom), rc_algebra(f.cod)
    table = []
    for m in rc_cod.algebra.elements():
        G = rc_cod.from_mask(m)
        H = f.dom.closure(f.preimage(f.cod.interior(G)))
        if not rc_dom.is_element(H):
            raise TheoremViolation("cl f^-1 int G is regular closed", fmt_set(H))
        table.append(rc_dom.to_mask(H))
    return DVMap(rc_contact(f.cod), rc_contact(f.dom), tuple(table))


# -- irreducible maps ---------------------------------------------------------

@dataclass
class IrreducibleReport:
    rho: dict                 # RC(dom) point set -> image point set
    iso: bool
    inverse: bool
    lemma: object = None      # None when no square supplied, else bool
    witness: object = None


def irreducible_calculus(p, square=None, G=None):
    """Image map of a closed irreducible p on regular closed sets, with both
    directions of its inverse checked.  ``square`` = (p_prime, f, g) with
    p o f = g o p_prime optionally checks the irreducible-square identity for
    one G (or every G when omitted)."""
    if not p.is_closed_map:
        raise PreconditionError("p must be a closed map")
    if not p.is_surjective:
        raise PreconditionError("p must be surjective")
    if not p.is_irreducible:
        raise PreconditionError("p must be irreducible")
    X, Y = p.dom, p.cod
    rcX, rcY = rc_algebra(X), rc_algebra(Y)
    rho = {H: p.image(H) for H in rcX.elements}
    iso = all(rcY.is_element(K) for K in rho.values()) and sorted(rho.values()) == sorted(rcY.elements)
    witness = None
    if iso:
        for H in rcX.elements:
            for H2 in rcX.elements:
                if rho[rcX.meet(H, H2)] != rcY.meet(rho[H], rho[H2]) or rho[H | H2] != rho[H] | rho[H2]:
                    iso, witness = False, ("operations", fmt_set(H), fmt_set(H2))
            if rho[rcX.comp(H)] != rcY.comp(rho[H]):
                iso, witness = False, ("complement", fmt_set(H))
    inv = lambda K: X.closure(p.preimage(Y.interior(K)))
    inverse = all(inv(rho[H]) == H for H in rcX.elements) and all(
        p.image(inv(K)) == K for K in rcY.elements)
    rep = IrreducibleReport(rho, iso, inverse, witness=witness)
    if square is not None:
        pp, f, g = square
        _check_square(p, pp, f, g)
        targets = [G] if G is not None else list(rcX.elements)
        rep.lemma = True
        for GG in targets:
            ok, lhs, rhs = t4_identity(p, pp, f, g, GG)
            if not ok:
                rep.lemma = False
                rep.witness = (fmt_set(GG), fmt_set(lhs), fmt_set(rhs))
                break
    return rep


def _check_square(p, pp, f, g):
    if not (is_normal_space(p.cod) and is_hausdorff(p.cod)):
        raise PreconditionError("codomain of p must be normal and Hausdorff")
    if f.cod != p.dom or g.cod != p.cod or f.dom != pp.dom or g.dom != pp.cod:
        raise PreconditionError("square maps do not line up")
    if any(p(f(x)) != g(pp(x)) for x in range(f.dom.n)):
        raise PreconditionError("square does not commute")
    if not pp.is_surjective:
        raise PreconditionError("p_prime must be surjective")


def t4_identity(p, pp, f, g, G):
    """(holds, lhs, rhs) for
    cl(g^-1(int p(G))) == join{pp(f^-1(H)) : H in RC(dom p), p(H) inside int p(G)}."""
    Y, Yp = p.cod, pp.cod
    target = Y.interior(p.image(G))
    lhs = Yp.closure(g.preimage(target))
    u = 0
    for H in rc_algebra(p.dom).elements:
        if p.image(H) & ~target == 0:
            u |= pp.image(f.preimage(H))
    rhs = Yp.closure(u)
    return lhs == rhs, lhs, rhs


# -- dense subspaces ----------------------------------------------------------

@dataclass
class DenseRestriction:
    sub: FinTopSpace
    embedding: tuple
    r: dict            # RC(X) point set -> RC(sub) point set (sub labels)
    e: dict            # RC(sub) point set -> RC(X) point set
    inverse: bool
    boolean: bool


def dense_restriction(X, Y):
    Y = _mask(Y)
    if X.closure(Y) != X.full:
        raise PreconditionError(f"{fmt_set(Y)} is not dense")
    sub, emb = subspace(X, Y)
    rcX, rcY = rc_algebra(X), rc_algebra(sub)
    r = {F: _restrict(F, emb) for F in rcX.elements}
    e = {G: X.closure(_extend(G, emb)) for G in rcY.elements}
    inverse = (all(rcY.is_element(v) for v in r.values())
               and all(e[r[F]] == F for F in rcX.elements)
               and all(r.get(e[G]) == G for G in rcY.elements))
    boolean = inverse and all(
        r[rcX.meet(F, G)] == rcY.meet(r[F], r[G]) and r[F | G] == r[F] | r[G]
        and r[rcX.comp(F)] == rcY.comp(r[F])
        for F in rcX.elements for G in rcX.elements)
    return DenseRestriction(sub, emb, r, e, inverse, boolean)


# -- complete separation ------------------------------------------------------

def comparability_components(X):
    """Components of the graph joining specialization-comparable points."""
    comps = []
    seen = 0
    for x in X.points():
        if seen >> x & 1:
            continue
        comp = 1 << x
        stack = [x]
        while stack:
            y = stack.pop()
            for z in X.points():
                if not comp >> z & 1 and (X.leq(y, z) or X.leq(z, y)):
                    comp |= 1 << z
                    stack.append(z)
        comps.append(comp)
        seen |= comp
    return comps


def separation(X, F, G):
    """True when F and G are completely separated."""
    F, G = _mask(F), _mask(G)
    return not any(c & F and c & G for c in comparability_components(X))


def separation_oracle(X, F, G):
    """Search for a continuous X -> [0,1] with value 0 on F and 1 on G among
    maps with values on an evenly spaced grid.  Continuity is checked against
    the real line: the image is a finite, hence discrete, subspace, so each
    preimage of a subset of the image must be open."""
    F, G = _mask(F), _mask(G)
    grid = [Fraction(k, X.n) for k in range(X.n + 1)]
    for values in product(grid, repeat=X.n):
        if any(values[x] != 0 for x in bits(F)) or any(values[x] != 1 for x in bits(G)):
            continue
        image = sorted(set(values))
        ok = True
        for sel in range(1, 1 << len(image)):
            chosen = {image[k] for k in bits(sel)}
            pre = _mask(x for x in X.points() if values[x] in chosen)
            if not X.is_open(pre):
                ok = False
                break
        if ok:
            return True
    return False


def beta_contact(X):
    """Contact on RC(X): F touches G iff they are not completely separated."""
    rc = rc_algebra(X)
    pairs = [(i, j) for i, a in enumerate(rc.atoms) for j, b in enumerate(rc.atoms)
             if i < j and not separation(X, a, b)]
    alg = ContactAlg(rc.algebra, frozenset(pairs))
    for F in rc.elements:
        for G in rc.elements:
            if F and G and alg.contact(rc.to_mask(F), rc.to_mask(G)) == separation(X, F, G):
                raise TheoremViolation("separation contact is additive", (fmt_set(F), fmt_set(G)))
    return alg
