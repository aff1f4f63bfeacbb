"""Maps between contact algebras: the V1-V4 conditions, the repair
a |-> join{phi(b) : b << a}, and the composition built from it."""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from .contact import (Cluster, ContactAlg, check_axioms, cluster_from_uf, cluster_list,
                      contact_via_ufs, discrete, is_cluster, make_contact, uf_classes, uf_contact)
from .errors import (CompositionError, HomLawError, NonMonotoneError, PreconditionError,
                     TheoremViolation)
from .finboole import BoolHom, FinBoolAlg, Ultrafilter, bits, fmt_set, is_sup_preserving, validate_hom

TWO_C = discrete(1)


@lru_cache(maxsize=None)
def ll_below(alg):
    """ll_below(alg)[a] = every b with b << a."""
    return tuple(tuple(b for b in alg.elements() if alg.ll(b, a)) for a in alg.elements())


@dataclass(frozen=True)
class DVMap:
    dom: ContactAlg
    cod: ContactAlg
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.size:
            raise ValueError("table must be total on the domain carrier")
        if any(not 0 <= v <= self.cod.top for v in self.table):
            raise ValueError("table values must lie in the codomain carrier")

    def __call__(self, a):
        return self.table[a]

    def after(self, other):
        """Plain composite self o other."""
        if other.cod != self.dom:
            raise CompositionError("maps are not composable")
        return DVMap(other.dom, self.cod, tuple(self.table[v] for v in other.table))

    @cached_property
    def is_monotone(self):
        t = self.table
        for a in self.dom.elements():
            for i in range(self.dom.n_atoms):
                b = a | 1 << i
                if t[a] & ~t[b]:
                    return False
        return True

    @cached_property
    def hom(self):
        """The Boolean hom with this table, or None."""
        try:
            return validate_hom(self.dom.base, self.cod.base, self.table)
        except HomLawError:
            return None

    @property
    def is_boolean_hom(self):
        return self.hom is not None

    @cached_property
    def conditions(self):
        return _conditions(self)

    @property
    def v1(self):
        return self.conditions["V1"][0]

    @property
    def v2(self):
        return self.conditions["V2"][0]

    @property
    def v3(self):
        return self.conditions["V3"][0]

    @property
    def v4(self):
        return self.conditions["V4"][0]

    @property
    def is_dv(self):
        return all(self.conditions[k][0] for k in ("V1", "V2", "V3", "V4"))

    @cached_property
    def reflects_contact(self):
        t = self.table
        return all(self.dom.contact(a, b) or not self.cod.contact(t[a], t[b])
                   for a in self.dom.elements() for b in self.dom.elements())

    @cached_property
    def preserves_ll(self):
        t = self.table
        return all(not self.dom.ll(a, b) or self.cod.ll(t[a], t[b])
                   for a in self.dom.elements() for b in self.dom.elements())

    def describe(self):
        return "[" + " ".join(fmt_set(v) for v in self.table) + "]"


def identity(alg):
    return DVMap(alg, alg, tuple(alg.elements()))


def from_hom(hom, dom, cod):
    if hom.dom != dom.base or hom.cod != cod.base:
        raise ValueError("hom does not match the contact algebras")
    return DVMap(dom, cod, hom.table)


def _conditions(phi):
    A, B, t = phi.dom, phi.cod, phi.table
    out = {}
    out["V1"] = (t[0] == 0, None if t[0] == 0 else (fmt_set(0),))
    w = None
    for a in A.elements():
        for b in A.elements():
            if t[a & b] != t[a] & t[b]:
                w = (fmt_set(a), fmt_set(b))
                break
        if w:
            break
    out["V2"] = (w is None, w)
    w = None
    for a in A.elements():
        for b in A.elements():
            if A.ll(A.comp(a), b) and not B.ll(B.comp(t[a]), t[b]):
                w = (fmt_set(a), fmt_set(b))
                break
        if w:
            break
    out["V3"] = (w is None, w)
    below = ll_below(A)
    w = None
    for a in A.elements():
        j = 0
        for b in below[a]:
            j |= t[b]
        if j != t[a]:
            w = (fmt_set(a),)
            break
    out["V4"] = (w is None, w)
    return out


@dataclass(frozen=True)
class DVReport:
    conditions: dict
    derived: dict       # filled when V1-V3 hold

    @property
    def is_dv(self):
        return all(ok for ok, _ in self.conditions.values())


def check_dv_morphism(phi):
    cond = phi.conditions
    derived = {}
    if all(cond[k][0] for k in ("V1", "V2", "V3")):
        A, B, t = phi.dom, phi.cod, phi.table
        derived["preserves 1"] = t[A.top] == B.top
        derived["phi(a*) <= phi(a)*"] = all(t[A.comp(a)] & t[a] == 0 for a in A.elements())
        derived["preserves <<"] = phi.preserves_ll
        for name, ok in derived.items():
            if not ok:
                raise TheoremViolation(f"V1-V3 imply {name}", phi.describe())
    return DVReport(cond, derived)


def _transform_table(phi):
    below = ll_below(phi.dom)
    t = phi.table
    out = []
    for a in phi.dom.elements():
        j = 0
        for b in below[a]:
            j |= t[b]
        out.append(j)
    return tuple(out)


def dv_transform(phi, check=True):
    """phi^v(a) = join{phi(b) : b << a} for a monotone phi."""
    if not phi.is_monotone:
        raise NonMonotoneError("the transform is only defined for monotone maps")
    res = DVMap(phi.dom, phi.cod, _transform_table(phi))
    if check:
        if not res.is_monotone:
            raise TheoremViolation("transform is monotone", phi.describe())
        if any(v & ~w for v, w in zip(res.table, phi.table)):
            raise TheoremViolation("transform lies below the map", phi.describe())
        if phi.preserves_ll and check_axioms(phi.dom).c15:
            A, B = phi.dom, phi.cod
            for a in A.elements():
                for b in ll_below(A)[a]:
                    if not B.ll(phi(b), res(a)):
                        raise TheoremViolation("b << a implies phi(b) << phi^v(a)",
                                               (phi.describe(), fmt_set(b), fmt_set(a)))
    return res


def diamond(psi, phi, check=True):
    """(psi o phi)^v."""
    if phi.cod != psi.dom:
        raise CompositionError("codomain of the first map differs from domain of the second")
    comp = psi.after(phi)
    res = DVMap(phi.dom, psi.cod, _transform_table(comp))
    if check:
        if (phi.is_monotone and psi.is_monotone and phi.preserves_ll and psi.preserves_ll
                and check_axioms(phi.dom).c15):
            other = DVMap(phi.dom, psi.cod, _transform_table(
                dv_transform(psi, False).after(dv_transform(phi, False))))
            if other != res:
                raise TheoremViolation("(psi o phi)^v = (psi^v o phi^v)^v",
                                       (psi.describe(), phi.describe()))
        if psi.is_boolean_hom and phi.v4 and is_sup_preserving(psi.hom)[0]:
            if res != comp:
                raise TheoremViolation("diamond is composition for sup-preserving homs",
                                       (psi.describe(), phi.describe()))
        if phi.table == tuple(phi.dom.elements()) and psi.is_dv and res != psi:
            raise TheoremViolation("identity is neutral on the right", psi.describe())
        if psi.table == tuple(psi.dom.elements()) and phi.is_dv and res != phi:
            raise TheoremViolation("identity is neutral on the left", phi.describe())
    return res


def is_devboo(phi):
    if not phi.is_boolean_hom:
        return False
    if phi.reflects_contact != phi.preserves_ll:
        raise TheoremViolation("for Boolean homs contact reflection equals << preservation",
                               phi.describe())
    return phi.reflects_contact


def sim_equal(phi, psi):
    if phi.dom != psi.dom or phi.cod != psi.cod:
        raise CompositionError("maps must be parallel")
    return _transform_table(phi) == _transform_table(psi)


# -- enumeration --------------------------------------------------------------

def all_maps(dom, cod):
    for table in product(range(cod.size), repeat=dom.size):
        yield DVMap(dom, cod, table)


def monotone_maps(dom, cod):
    """Every monotone map, built value by value in increasing element order."""
    order = sorted(dom.elements(), key=lambda a: (bin(a).count("1"), a))
    lower = {a: [a ^ (1 << i) for i in bits(a)] for a in dom.elements()}
    table = [None] * dom.size

    def rec(k):
        if k == len(order):
            yield DVMap(dom, cod, tuple(table))
            return
        a = order[k]
        floor = 0
        for b in lower[a]:
            floor |= table[b]
        for v in range(cod.size):
            if v & floor == floor:
                table[a] = v
                yield from rec(k + 1)

    yield from rec(0)


def dv_morphisms(dom, cod):
    return [m for m in monotone_maps(dom, cod) if m.is_dv]


def dv_homs_to_2(A):
    """All maps A -> 2 satisfying V1-V4 (every 2-valued table is scanned)."""
    return [DVMap(A, TWO_C, t) for t in product((0, 1), repeat=A.size)
            if DVMap(A, TWO_C, t).is_dv]


# -- clusters of morphisms ----------------------------------------------------

@dataclass(frozen=True)
class ClustMap:
    morphism: DVMap
    mapping: tuple          # (cod cluster, dom cluster) pairs
    valid: bool
    shortcut_agrees: object  # None when the morphism is not a Boolean hom

    def __call__(self, cluster):
        for d, c in self.mapping:
            if d == cluster:
                return c
        raise KeyError(cluster)

    def as_dict(self):
        return dict(self.mapping)


def clust_image(alpha, d):
    A, B = alpha.dom, alpha.cod
    members = frozenset(
        a for a in A.elements()
        if all(B.comp(alpha(b)) in d.members for b in ll_below(A)[A.comp(a)]))
    return Cluster(A, members)


def clust_of_morphism(alpha):
    if not alpha.is_dv:
        raise PreconditionError("Clust of a map needs V1-V4")
    normal = check_axioms(alpha.dom).c16 and check_axioms(alpha.cod).c16
    mapping = []
    valid = True
    for d in cluster_list(alpha.cod):
        c = clust_image(alpha, d)
        if not is_cluster(alpha.dom, c.members)[0]:
            valid = False
            if normal:
                raise TheoremViolation("Clust(alpha) lands in clusters", (alpha.describe(), d))
        mapping.append((d, c))
    shortcut = None
    if alpha.is_boolean_hom and contact_via_ufs(alpha.cod).is_equivalence:
        shortcut = True
        amap = alpha.hom.atom_map
        lookup = dict(mapping)
        for y in range(alpha.cod.n_atoms):
            d = cluster_from_uf(alpha.cod, Ultrafilter(alpha.cod.base, y))
            expect = cluster_from_uf(alpha.dom, Ultrafilter(alpha.dom.base, amap[y]))
            if lookup[d] != expect:
                shortcut = False
        if normal and not shortcut:
            raise TheoremViolation("Clust of a hom agrees with pulling back ultrafilters",
                                   alpha.describe())
    return ClustMap(alpha, tuple(mapping), valid, shortcut)


# -- representation by maps into 2 --------------------------------------------

@dataclass(frozen=True)
class OmegaData:
    algebra: ContactAlg
    homs: tuple
    clusters: tuple
    forward: tuple      # forward[i] = index of the cluster of homs[i]
    bijective: bool

    def cluster_of(self, phi):
        return self.clusters[self.forward[self.homs.index(phi)]]

    def hom_of(self, cluster):
        return self.homs[self.forward.index(self.clusters.index(cluster))]

    def tau_tilde(self, a):
        """Indices of homs with phi(a*) = 0."""
        A = self.algebra
        return frozenset(i for i, h in enumerate(self.homs) if h(A.comp(a)) == 0)

    def tau_tilde_interior(self, a):
        return frozenset(i for i, h in enumerate(self.homs) if h(a) == 1)


def omega_cluster(phi):
    A = phi.dom
    return Cluster(A, frozenset(a for a in A.elements() if phi(A.comp(a)) == 0))


def hom_from_cluster(A, c):
    """phi_c(a) = 0 iff a* in c."""
    return DVMap(A, TWO_C, tuple(0 if A.comp(a) in c.members else 1 for a in A.elements()))


def omega(A):
    if not contact_via_ufs(A).is_equivalence:
        raise PreconditionError("omega needs the ultrafilter contact to be an equivalence")
    homs = tuple(dv_homs_to_2(A))
    cl = tuple(cluster_list(A))
    forward = []
    ok = True
    for h in homs:
        c = omega_cluster(h)
        if c not in cl:
            ok = False
            forward.append(-1)
            continue
        forward.append(cl.index(c))
        if hom_from_cluster(A, c) != h:
            ok = False
    for c in cl:
        h = hom_from_cluster(A, c)
        if h not in homs or omega_cluster(h) != c:
            ok = False
    ok = ok and sorted(forward) == list(range(len(cl)))
    if not ok:
        raise TheoremViolation("omega is a bijection with the stated inverse", A.describe())
    return OmegaData(A, homs, cl, tuple(forward), ok)


# -- cover data ---------------------------------------------------------------

@dataclass(frozen=True)
class CoverData:
    algebra: FinBoolAlg
    p: tuple                # ultrafilter (atom) index -> label
    codomain: tuple         # labels in canonical order
    contact: ContactAlg     # contact induced by p
    classes: tuple          # ultrafilter classes as atom bitmasks
    pi: tuple               # atom -> class index
    ell: dict               # label -> class index

    def label_index(self, y):
        return self.codomain.index(y)


def cover_structures(A, p, codomain=None):
    p = tuple(p)
    if len(p) != A.n_atoms:
        raise ValueError("cover must be defined on every ultrafilter")
    cod = tuple(sorted(set(p))) if codomain is None else tuple(codomain)
    if set(p) != set(cod):
        missing = sorted(set(cod) - set(p), key=repr)
        raise PreconditionError(f"cover is not surjective: {missing} not reached")
    pairs = [(i, j) for i in range(A.n_atoms) for j in range(i + 1, A.n_atoms) if p[i] == p[j]]
    alg = make_contact(A, pairs)
    ufs = [Ultrafilter(A, i) for i in range(A.n_atoms)]
    for u in ufs:
        for v in ufs:
            if uf_contact(alg, u, v) != (p[u.atom] == p[v.atom]):
                raise TheoremViolation("ultrafilters touch iff they have the same image", (u, v))
    for a in A.elements():
        for b in A.elements():
            via = bool({p[i] for i in bits(a)} & {p[j] for j in bits(b)})
            if via != alg.contact(a, b):
                raise TheoremViolation("induced contact via images", (fmt_set(a), fmt_set(b)))
    classes = tuple(uf_classes(alg))
    pi = tuple(next(k for k, c in enumerate(classes) if c >> i & 1) for i in range(A.n_atoms))
    ell = {}
    for i, y in enumerate(p):
        if ell.setdefault(y, pi[i]) != pi[i]:
            raise TheoremViolation("ell is well defined", y)
    if sorted(ell.values()) != list(range(len(classes))):
        raise TheoremViolation("ell is a bijection", ell)
    return CoverData(A, p, cod, alg, classes, pi, ell)


def quotient_cover(alg):
    """The canonical cover of an algebra by its ultrafilter classes."""
    classes = uf_classes(alg)
    pi = tuple(next(k for k, c in enumerate(classes) if c >> i & 1) for i in range(alg.n_atoms))
    return cover_structures(alg.base, pi)


def pull_back_ultrafilter(hom, y):
    """Atom generating hom^-1(up y), found by comparing member sets."""
    pre = frozenset(a for a in hom.dom.elements() if hom(a) >> y & 1)
    for u in range(hom.dom.n_atoms):
        if Ultrafilter(hom.dom, u).members == pre:
            return u
    raise TheoremViolation("preimage of an ultrafilter is an ultrafilter", y)


def induced_map(hom, cover_dom, cover_cod):
    """f with f(p'(u')) = p(hom^-1(u')), as a dict cod labels -> dom labels."""
    if hom.dom != cover_dom.algebra or hom.cod != cover_cod.algebra:
        raise PreconditionError("covers do not match the hom")
    f = {}
    for y in range(hom.cod.n_atoms):
        label = cover_cod.p[y]
        val = cover_dom.p[pull_back_ultrafilter(hom, y)]
        if f.setdefault(label, val) != val:
            raise PreconditionError(f"induced map is not well defined at {label!r}")
    return f


def f_of_hom(phi):
    """Induced map between ultrafilter quotients for a contact-reflecting hom
    (dict: class index of cod -> class index of dom)."""
    if not phi.is_boolean_hom or not phi.reflects_contact:
        raise PreconditionError("needs a Boolean hom reflecting contact")
    return induced_map(phi.hom, quotient_cover(phi.dom), quotient_cover(phi.cod))
