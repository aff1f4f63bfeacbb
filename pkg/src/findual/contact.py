"""Contact algebras on finite Boolean algebras.

Contact is stored on atoms as a reflexive symmetric relation; element contact
is derived: ``a`` touches ``b`` when some atom of ``a`` is related to some atom
of ``b``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import PreconditionError, TheoremViolation
from .finboole import FinBoolAlg, Ultrafilter, bits, fmt_set, submasks, ultrafilters


def _norm_pair(i, j):
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class ContactAlg:
    base: FinBoolAlg
    atom_rel: frozenset

    def __post_init__(self):
        n = self.base.n_atoms
        rel = set()
        for i, j in self.atom_rel:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"contact pair {i}-{j} out of range for {n} atoms")
            rel.add(_norm_pair(i, j))
        rel.update((i, i) for i in range(n))
        object.__setattr__(self, "atom_rel", frozenset(rel))

    @property
    def n_atoms(self):
        return self.base.n_atoms

    @property
    def top(self):
        return self.base.top

    @property
    def size(self):
        return self.base.size

    def elements(self):
        return self.base.elements()

    def comp(self, a):
        return self.base.top ^ a

    @cached_property
    def neighbours(self):
        nb = [0] * self.n_atoms
        for i, j in self.atom_rel:
            nb[i] |= 1 << j
            nb[j] |= 1 << i
        return tuple(nb)

    @cached_property
    def reach(self):
        """reach[a] = join of the neighbourhoods of the atoms of a."""
        out = [0] * self.size
        for a in range(1, self.size):
            low = a & -a
            out[a] = out[a ^ low] | self.neighbours[low.bit_length() - 1]
        return tuple(out)

    def contact(self, a, b):
        return self.reach[a] & b != 0

    def ll(self, a, b):
        return self.reach[a] & ~b & self.top == 0

    @cached_property
    def contact_rows(self):
        """contact_rows[a]: bitmask over the carrier of all b with a contact b."""
        rows = []
        for a in self.elements():
            r = self.reach[a]
            m = 0
            for b in self.elements():
                if r & b:
                    m |= 1 << b
            rows.append(m)
        return tuple(rows)

    @property
    def is_discrete(self):
        return all(i == j for i, j in self.atom_rel)

    def describe(self):
        pairs = sorted(p for p in self.atom_rel if p[0] != p[1])
        return f"{self.n_atoms}at[" + ",".join(f"{i}-{j}" for i, j in pairs) + "]"


def make_contact(A, pairs=()):
    return ContactAlg(A, frozenset(tuple(p) for p in pairs))


def discrete(n):
    return make_contact(FinBoolAlg(n))


def relations(alg, a, b):
    return alg.contact(a, b), alg.ll(a, b)


def canonical_contacts(A):
    smallest = make_contact(A)
    largest = make_contact(A, combinations(range(A.n_atoms), 2))
    for a in A.elements():
        for b in A.elements():
            if smallest.ll(a, b) != A.leq(a, b):
                raise TheoremViolation("discrete contact: << equals <=", (a, b))
    return smallest, largest


def all_atom_relations(n):
    """Every reflexive symmetric atom relation on n atoms, in a fixed order."""
    A = FinBoolAlg(n)
    off = list(combinations(range(n), 2))
    for mask in range(1 << len(off)):
        yield make_contact(A, [off[k] for k in range(len(off)) if mask >> k & 1])


# -- axioms on an arbitrary element relation --------------------------------

AXIOMS_C = ("C1", "C2", "C3", "C4", "C5", "C6")
AXIOMS_I = ("I1", "I2", "I3", "I4", "I5", "I6")


def _contact_axioms(n, rows):
    """Evaluate C1-C6 on a relation given as carrier bitmask rows.
    Returns {name: (ok, witness)}."""
    size = 1 << n
    top = size - 1
    R = lambda a, b: rows[a] >> b & 1
    out = {}

    out["C1"] = _first(((a,) for a in range(1, size) if not R(a, a)))
    out["C2"] = _first(((a, b) for a in range(size) for b in range(size)
                        if R(a, b) and (a == 0 or b == 0)))
    out["C3"] = _first(((a, b) for a in range(size) for b in range(size)
                        if R(a, b) != R(b, a)))
    out["C4"] = _first(((a, b, c) for a in range(size) for b in range(size) for c in range(size)
                        if bool(R(a, b | c)) != bool(R(a, b) or R(a, c))))
    out["C5"] = _first(((a, b) for a in range(size) for b in range(size)
                        if not R(a, b)
                        and not any(not R(a, c) and not R(b, top ^ c) for c in range(size))))
    out["C6"] = _first(((a,) for a in range(size) if a != top
                        and not any(not R(b, a) for b in range(1, size))))
    return out


def _ll_axioms(n, rows):
    """Evaluate I1-I6 for a << b defined as not R(a, b*)."""
    size = 1 << n
    top = size - 1
    L = lambda a, b: not (rows[a] >> (top ^ b) & 1)
    out = {}

    out["I1"] = _first(((a, b) for a in range(size) for b in range(size)
                        if L(a, b) and a & ~b))

    def i2():
        for b in range(size):
            for c in range(size):
                if L(b, c):
                    for a in submasks(b):
                        for d_extra in submasks(top ^ c):
                            if not L(a, c | d_extra):
                                return (a, b, c, c | d_extra)
        return None

    w = i2()
    out["I2"] = (w is None, w)
    if not L(0, 0):
        out["I3"] = (False, (0, 0))
    else:
        out["I3"] = _first(((a, b) for a in range(size) for b in range(size)
                            if L(a, b) and not L(top ^ b, top ^ a)))
    out["I4"] = _first(((a, b, c) for c in range(size) for a in range(size) for b in range(size)
                        if L(a, c) and L(b, c) and not L(a | b, c)))
    out["I5"] = _first(((a, c) for a in range(size) for c in range(size)
                        if L(a, c) and not any(L(a, b) and L(b, c) for b in range(size))))
    out["I6"] = _first(((a,) for a in range(1, size)
                        if not any(L(b, a) for b in range(1, size))))
    return out


def _first(gen):
    w = next(gen, None)
    return (w is None, w)


@dataclass(frozen=True)
class AxiomReport:
    results: dict
    n_atoms: int = field(default=1)

    def passed(self, name):
        return self.results[name][0]

    def witness(self, name):
        return self.results[name][1]

    def all_pass(self, names):
        return all(self.results[k][0] for k in names)

    @property
    def c14(self):
        return self.all_pass(AXIOMS_C[:4])

    @property
    def c15(self):
        return self.all_pass(AXIOMS_C[:5])

    @property
    def c16(self):
        return self.all_pass(AXIOMS_C)

    @property
    def i14(self):
        return self.all_pass(AXIOMS_I[:4])

    @property
    def i16(self):
        return self.all_pass(AXIOMS_I)

    @property
    def equivalences_hold(self):
        return self.c14 == self.i14 and self.c16 == self.i16

    def lines(self):
        out = []
        for name in AXIOMS_C + AXIOMS_I:
            ok, w = self.results[name]
            wit = "-" if w is None else ",".join(fmt_set(x) for x in w)
            out.append((name, ok, wit))
        return out


def check_relation(n, rows):
    """Axiom report for an arbitrary element relation on the n-atom algebra."""
    res = _contact_axioms(n, rows)
    res.update(_ll_axioms(n, rows))
    return AxiomReport(res, n)


def check_axioms(alg):
    report = check_relation(alg.n_atoms, alg.contact_rows)
    if not report.equivalences_hold:
        raise TheoremViolation("axiom lists C and I disagree", alg.describe())
    return report


def is_normal(alg):
    return check_axioms(alg).c16


# -- ultrafilter contact and clusters --------------------------------------

def uf_contact(alg, u, v):
    return all(alg.contact(c, d) for c in u.members for d in v.members)


@dataclass(frozen=True)
class UFContactReport:
    characterization_holds: bool
    witness: object
    is_equivalence: bool
    matrix: tuple


def contact_via_ufs(alg):
    ufs = ultrafilters(alg.base)
    mat = tuple(tuple(uf_contact(alg, u, v) for v in ufs) for u in ufs)
    witness = None
    for a in alg.elements():
        for b in alg.elements():
            via = any(mat[i][j] for i in bits(a) for j in bits(b))
            if via != alg.contact(a, b):
                witness = (fmt_set(a), fmt_set(b))
                break
        if witness:
            break
    n = len(ufs)
    equiv = all(mat[i][i] for i in range(n)) and all(
        mat[i][j] == mat[j][i] for i in range(n) for j in range(n)) and all(
        not (mat[i][j] and mat[j][k]) or mat[i][k]
        for i in range(n) for j in range(n) for k in range(n))
    return UFContactReport(witness is None, witness, equiv, mat)


def uf_classes(alg):
    """Equivalence classes of the ultrafilter contact (atom-index bitmasks);
    requires that relation to be an equivalence."""
    rep = contact_via_ufs(alg)
    if not rep.is_equivalence:
        raise PreconditionError("ultrafilter contact is not an equivalence relation")
    classes = []
    seen = 0
    for i in range(alg.n_atoms):
        if seen >> i & 1:
            continue
        cls = 0
        for j in range(alg.n_atoms):
            if rep.matrix[i][j]:
                cls |= 1 << j
        classes.append(cls)
        seen |= cls
    return classes


@dataclass(frozen=True)
class Cluster:
    algebra: ContactAlg
    members: frozenset

    def __contains__(self, a):
        return a in self.members

    @cached_property
    def mask(self):
        m = 0
        for a in self.members:
            m |= 1 << a
        return m

    def __repr__(self):
        return "Cluster{" + ",".join(fmt_set(a) for a in sorted(self.members)) + "}"


def _as_mask(S):
    if isinstance(S, int):
        return S
    m = 0
    for a in S:
        m |= 1 << a
    return m


def cluster_from_uf(alg, u):
    return Cluster(alg, frozenset(a for a in alg.elements()
                                  if all(alg.contact(a, b) for b in u.members)))


def is_cluster(alg, S):
    """(ok, reason) for cl1-cl4.  S is an element collection or a carrier mask."""
    S = _as_mask(S)
    rows = alg.contact_rows
    members = bits(S)
    if not members:
        return False, "cl1: empty"
    for a in members:
        if S & ~rows[a]:
            b = bits(S & ~rows[a])[0]
            return False, f"cl2: {fmt_set(a)} not in contact with {fmt_set(b)}"
    for a in alg.elements():
        if not S >> a & 1 and S & ~rows[a] == 0:
            return False, f"cl4: {fmt_set(a)} touches every member but is missing"
    for a in alg.elements():
        for b in range(a, alg.size):
            if S >> (a | b) & 1 and not (S >> a & 1 or S >> b & 1):
                return False, f"cl3: {fmt_set(a | b)} in but neither {fmt_set(a)} nor {fmt_set(b)}"
    return True, None


def clusters_bruteforce(alg):
    found = []
    for S in range(1, 1 << alg.size):
        if is_cluster(alg, S)[0]:
            found.append(Cluster(alg, frozenset(bits(S))))
    return found


@dataclass(frozen=True)
class ClusterResult:
    primary: tuple
    oracle: tuple
    uf_equivalence: bool
    n_classes: int

    @property
    def agree(self):
        return set(self.primary) == set(self.oracle)

    @property
    def discrepancy(self):
        return not self.agree


def clusters(alg):
    seen = []
    for u in ultrafilters(alg.base):
        c = cluster_from_uf(alg, u)
        if c not in seen:
            seen.append(c)
    primary = tuple(sorted(seen, key=_cluster_key))
    oracle = tuple(sorted(clusters_bruteforce(alg), key=_cluster_key))
    equiv = contact_via_ufs(alg).is_equivalence
    n_classes = len(uf_classes(alg)) if equiv else -1
    res = ClusterResult(primary, oracle, equiv, n_classes)
    if equiv and (not res.agree or len(primary) != n_classes):
        raise TheoremViolation("clusters are the ultrafilter classes", alg.describe())
    return res


def _cluster_key(c):
    return tuple(sorted(c.members))


def cluster_list(alg):
    """Clusters via the primary strategy, in canonical order."""
    seen = []
    for u in ultrafilters(alg.base):
        c = cluster_from_uf(alg, u)
        if c not in seen:
            seen.append(c)
    return sorted(seen, key=_cluster_key)


@dataclass(frozen=True)
class ClustSpace:
    algebra: ContactAlg
    clusters: tuple
    tau: tuple          # tau[a] = bitmask over cluster indices
    space: object       # FinTopSpace on the cluster indices
    classes: tuple      # ultrafilter classes (atom bitmasks)
    gamma: tuple        # gamma[k] = cluster index of class k

    def tau_set(self, a):
        return frozenset(self.clusters[i] for i in bits(self.tau[a]))

    def class_of_atom(self, i):
        for k, cls in enumerate(self.classes):
            if cls >> i & 1:
                return k
        raise ValueError(i)

    def cluster_of_atom(self, i):
        return self.gamma[self.class_of_atom(i)]


def clust_space(alg):
    from .fintop import make_space, quotient_space, discrete_space, is_homeomorphism

    if not contact_via_ufs(alg).is_equivalence:
        raise PreconditionError("cluster space needs ultrafilter contact to be an equivalence")
    cl = tuple(cluster_list(alg))
    k = len(cl)
    tau = []
    for a in alg.elements():
        m = 0
        for i, c in enumerate(cl):
            if a in c:
                m |= 1 << i
        tau.append(m)
    full = (1 << k) - 1
    # closed sets: intersections of subfamilies of the base (the base is
    # closed under finite unions because tau turns joins into unions)
    closed = set()
    base = sorted(set(tau))
    frontier = {full}
    while frontier:
        closed |= frontier
        nxt = set()
        for c in frontier:
            for b in base:
                m = c & b
                if m not in closed:
                    nxt.add(m)
        frontier = nxt
    space = make_space(k, [full ^ c for c in closed])
    normal = check_axioms(alg).c16
    for a in alg.elements():
        if normal and space.interior(tau[a]) != full ^ tau[alg.comp(a)]:
            raise TheoremViolation("interior of tau(a) is the complement of tau(a*)", fmt_set(a))
    classes = tuple(uf_classes(alg))
    gamma = []
    for cls in classes:
        i = bits(cls)[0]
        c = cluster_from_uf(alg, Ultrafilter(alg.base, i))
        gamma.append(cl.index(c))
    if sorted(gamma) != list(range(k)):
        raise TheoremViolation("gamma is a bijection", gamma)
    pi = tuple(next(kk for kk, cls in enumerate(classes) if cls >> i & 1)
               for i in range(alg.n_atoms))
    quotient = quotient_space(discrete_space(alg.n_atoms), pi)
    if not is_homeomorphism(quotient, space, tuple(gamma)):
        raise TheoremViolation("gamma is a homeomorphism", alg.describe())
    return ClustSpace(alg, cl, tuple(tau), space, classes, tuple(gamma))
