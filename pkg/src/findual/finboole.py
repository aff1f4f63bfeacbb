"""Finite Boolean algebras presented by atoms.

Elements are bitmasks over the atom indices: bit ``i`` of an element is set
when atom ``i`` lies below it.  ``0`` is the bottom and ``top`` the full mask.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .errors import DegenerateAlgebraError, HomLawError


def popcount(x):
    return bin(x).count("1")


def bits(x):
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def submasks(x):
    """All submasks of ``x`` (including 0 and ``x``)."""
    s = x
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & x


def fmt_set(x):
    return "{" + ",".join(str(i) for i in bits(x)) + "}"


@dataclass(frozen=True)
class FinBoolAlg:
    n_atoms: int
    name: str = field(default="A", compare=False)

    def __post_init__(self):
        if self.n_atoms < 1:
            raise DegenerateAlgebraError("a Boolean algebra needs at least one atom")

    @property
    def top(self):
        return (1 << self.n_atoms) - 1

    @property
    def size(self):
        return 1 << self.n_atoms

    def elements(self):
        return range(self.size)

    def atoms(self):
        return [1 << i for i in range(self.n_atoms)]

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        return a | b

    def comp(self, a):
        return self.top ^ a

    def leq(self, a, b):
        return a & ~b == 0

    def join_all(self, elems):
        out = 0
        for e in elems:
            out |= e
        return out

    def meet_all(self, elems):
        out = self.top
        for e in elems:
            out &= e
        return out

    def contains(self, a):
        return isinstance(a, int) and 0 <= a <= self.top

    def element(self, atom_indices):
        out = 0
        for i in atom_indices:
            if not 0 <= i < self.n_atoms:
                raise ValueError(f"atom index {i} out of range for {self.n_atoms} atoms")
            out |= 1 << i
        return out


def make_algebra(n, name="A"):
    return FinBoolAlg(n, name)


TWO = FinBoolAlg(1, "2")


@dataclass(frozen=True)
class Ultrafilter:
    algebra: FinBoolAlg
    atom: int

    @cached_property
    def members(self):
        bit = 1 << self.atom
        return frozenset(a for a in self.algebra.elements() if a & bit)

    def __contains__(self, a):
        return bool(a >> self.atom & 1)

    def __repr__(self):
        return f"Ultrafilter(up {fmt_set(1 << self.atom)})"


def ultrafilters(A):
    return [Ultrafilter(A, i) for i in range(A.n_atoms)]


def ultrafilters_bruteforce(A):
    """Every carrier subset that is a maximal proper, non-empty, down-directed
    up-set.  Subsets are encoded as bitmasks over the carrier."""
    size = A.size
    full = (1 << size) - 1
    up = [0] * size
    down = [0] * size
    for a in range(size):
        for b in range(size):
            if a & ~b == 0:
                up[a] |= 1 << b
                down[b] |= 1 << a

    filters = []
    for S in range(1, full):
        members = [a for a in range(size) if S >> a & 1]
        if any(up[a] & ~S for a in members):
            continue
        if all(down[a] & down[b] & S for a in members for b in members):
            filters.append(S)
    maximal = [S for S in filters if not any(T != S and S & ~T == 0 for T in filters)]
    return [frozenset(a for a in range(size) if S >> a & 1) for S in sorted(maximal)]


def eps(A, a):
    return frozenset(u for u in ultrafilters(A) if a in u)


def eps_is_isomorphism(A):
    """eps as a map A -> P(Ult(A)) is bijective and preserves the operations."""
    ufs = ultrafilters(A)
    images = {a: eps(A, a) for a in A.elements()}
    if len(set(images.values())) != A.size or A.size != 2 ** len(ufs):
        return False
    for a in A.elements():
        if images[A.comp(a)] != frozenset(ufs) - images[a]:
            return False
        for b in A.elements():
            if images[a | b] != images[a] | images[b] or images[a & b] != images[a] & images[b]:
                return False
    return True


@dataclass(frozen=True)
class BoolHom:
    """Boolean homomorphism stored by its dual atom map (cod atom -> dom atom)."""

    dom: FinBoolAlg
    cod: FinBoolAlg
    atom_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "atom_map", tuple(self.atom_map))
        if len(self.atom_map) != self.cod.n_atoms:
            raise ValueError("atom map must be total on the codomain atoms")
        for x in self.atom_map:
            if not 0 <= x < self.dom.n_atoms:
                raise ValueError(f"atom map value {x} outside the domain atoms")

    def __call__(self, a):
        out = 0
        for y, x in enumerate(self.atom_map):
            if a >> x & 1:
                out |= 1 << y
        return out

    @cached_property
    def table(self):
        return tuple(self(a) for a in self.dom.elements())

    def then(self, other):
        """``other`` after ``self``."""
        if other.dom != self.cod:
            raise ValueError("homs are not composable")
        return BoolHom(self.dom, other.cod, tuple(self.atom_map[x] for x in other.atom_map))


def make_hom(dom, cod, atom_map):
    return BoolHom(dom, cod, atom_map)


def identity_hom(A):
    return BoolHom(A, A, tuple(range(A.n_atoms)))


def all_homs(dom, cod):
    for amap in product(range(dom.n_atoms), repeat=cod.n_atoms):
        yield BoolHom(dom, cod, amap)


def validate_hom(dom, cod, table):
    """Check a raw element table against the homomorphism laws and recover
    the atom map.  Laws are scanned in a fixed order and the first failure is
    raised with its witness."""
    table = tuple(table)
    if len(table) != dom.size or any(not cod.contains(v) for v in table):
        raise HomLawError("totality", "table must map every element into the codomain")
    elems = list(dom.elements())
    if table[0] != 0:
        return _fail("preserves 0", (fmt_set(0),))
    if table[dom.top] != cod.top:
        return _fail("preserves 1", (fmt_set(dom.top),))
    for a in elems:
        for b in elems:
            if a < b and table[a] | table[b] != table[a | b]:
                return _fail("preserves join", (fmt_set(a), fmt_set(b)))
    for a in elems:
        for b in elems:
            if a < b and table[a] & table[b] != table[a & b]:
                return _fail("preserves meet", (fmt_set(a), fmt_set(b)))
    for a in elems:
        if table[dom.comp(a)] != cod.comp(table[a]):
            return _fail("preserves complement", (fmt_set(a),))
    amap = []
    for y in range(cod.n_atoms):
        low = dom.meet_all(a for a in elems if table[a] >> y & 1)
        if popcount(low) != 1:
            raise HomLawError("atom recovery", (y, fmt_set(low)))
        amap.append(bits(low)[0])
    hom = BoolHom(dom, cod, tuple(amap))
    if hom.table != table:
        raise HomLawError("atom recovery", "recovered atom map does not reproduce the table")
    return hom


def _fail(law, witness):
    raise HomLawError(law, witness)


def adjunction_law_holds(hom):
    """y <= hom(a)  iff  atom_map(y) <= a, for every atom y and element a."""
    for a in hom.dom.elements():
        image = hom(a)
        for y, x in enumerate(hom.atom_map):
            if bool(image >> y & 1) != bool(a >> x & 1):
                return False
    return True


@dataclass(frozen=True)
class TarskiMaps:
    algebra: FinBoolAlg

    def theta(self, a):
        return frozenset(bits(a))

    def kappa(self, atom):
        """Characteristic hom of the up-set of ``atom``, as a hom into 2."""
        return BoolHom(self.algebra, TWO, (atom,))

    def kappa_inverse(self, hom):
        low = self.algebra.meet_all(a for a in self.algebra.elements() if hom(a) == 1)
        return bits(low)[0]

    def chi(self, point):
        """chi^x on the powerset of the atom set: M |-> 1 iff x in M."""
        return BoolHom(self.algebra, TWO, (point,))


def tarski_maps(A):
    return TarskiMaps(A)


def homs_to_two_by_table(A):
    """All homs A -> 2 found by validating every 2-valued table."""
    found = []
    for table in product((0, 1), repeat=A.size):
        try:
            found.append(validate_hom(A, TWO, table))
        except HomLawError:
            pass
    return found


def verify_tarski(A):
    """theta is a Boolean iso onto P(At(A)); kappa and chi are bijections onto
    the homs into 2 (enumerated independently)."""
    t = tarski_maps(A)
    atoms = frozenset(range(A.n_atoms))
    thetas = {a: t.theta(a) for a in A.elements()}
    if len(set(thetas.values())) != A.size:
        return False
    for a in A.elements():
        if thetas[A.comp(a)] != atoms - thetas[a]:
            return False
        for b in A.elements():
            if thetas[a | b] != thetas[a] | thetas[b] or thetas[a & b] != thetas[a] & thetas[b]:
                return False
    homs = {h.table for h in homs_to_two_by_table(A)}
    kappas = {t.kappa(x).table for x in range(A.n_atoms)}
    chis = {t.chi(x).table for x in range(A.n_atoms)}
    if kappas != homs or chis != homs or len(kappas) != A.n_atoms:
        return False
    return all(t.kappa_inverse(t.kappa(x)) == x for x in range(A.n_atoms))


def is_sup_preserving(hom):
    """(ok, witness): hom(join D) == join hom(D) for every subset D of the
    domain carrier."""
    A = hom.dom
    table = hom.table
    for D in range(1 << A.size):
        j = 0
        jimg = 0
        for a in bits(D):
            j |= a
            jimg |= table[a]
        if table[j] != jimg:
            return False, frozenset(fmt_set(a) for a in bits(D))
    return True, None
