"""Text format and command line entry point.

A document is a sequence of blocks separated by blank lines.  A block opens
with ``<kind> <name>`` and continues with ``key value...`` lines; ``#``
starts a comment.  Atom and point indices are 0-based.

    algebra A
    atoms 3
    contact 0-1 1-2

    space S
    points 2
    open 1

    map h : A -> A
    atoms-map 0 -> 0
"""
import argparse
import contextlib
import io
import re
import sys
from dataclasses import dataclass, field

from . import catkit as ck
from .contact import (check_axioms, clust_space, clusters, make_contact)
from .devries import DVMap, TWO_C, clust_of_morphism, dv_homs_to_2, from_hom
from .errors import (LawError, ParseError, PreconditionError, ScaleError, TheoremViolation)
from .finboole import BoolHom, FinBoolAlg, bits, fmt_set
from .fintop import classify_space, is_continuous, make_space, rc_algebra, rc_boolean_report
from .pipelines import DeVriesPair, collapse_survey, extension_checks, is_pair, survey_table
from .report import Report
from .suites import SUITES, run_suite

KINDS = ("algebra", "contact", "space", "map", "category", "functor", "adjunction", "pair", "extension")

KEYS = {
    "algebra": {"atoms", "contact"},
    "contact": {"atoms", "contact"},
    "space": {"points", "open"},
    "map": {"elem", "atoms-map", "point"},
    "category": {"object", "morphism", "compose", "identity"},
    "functor": {"object", "morphism"},
    "adjunction": {"left", "right", "unit", "counit"},
    "pair": {"member"},
    "extension": {"elem"},
}

BUILTIN = {"2": TWO_C}

_SET = re.compile(r"\{\s*([0-9,\s]*)\}")
_PAIR = re.compile(r"^(\d+)-(\d+)$")


@dataclass(frozen=True)
class Block:
    kind: str
    name: str
    head: tuple = ()
    body: tuple = ()        # ((key, value tuple), ...) in canonical order
    line: int = field(default=0, compare=False)


@dataclass
class Document:
    blocks: list
    objects: dict = field(default_factory=dict, compare=False)

    def __eq__(self, other):
        return isinstance(other, Document) and self.blocks == other.blocks


# -- tokenising ----------------------------------------------------------------

def _strip(line):
    return line.split("#", 1)[0].strip()


def _int(tok, ln, what="index"):
    if not tok.isdigit():
        raise ParseError(ln, f"expected a non-negative {what}, got {tok!r}")
    return int(tok)


def _set(text, ln):
    m = _SET.fullmatch(text.strip())
    if not m:
        raise ParseError(ln, f"expected a set like {{0,1}}, got {text.strip()!r}")
    items = [t for t in re.split(r"[,\s]+", m.group(1)) if t]
    return tuple(sorted({_int(t, ln) for t in items}))


def _pairs(tokens, ln):
    out = set()
    for t in tokens:
        m = _PAIR.match(t)
        if not m:
            raise ParseError(ln, f"expected a pair like 0-1, got {t!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if i != j:
            out.add((min(i, j), max(i, j)))
    return out


def _arrow(rest, ln):
    if "->" not in rest:
        raise ParseError(ln, "expected 'x -> y'")
    left, right = rest.split("->", 1)
    return left.strip(), right.strip()


def _header(kind, tokens, ln):
    """(name, head) for the opening line of a block."""
    if len(tokens) < 2:
        raise ParseError(ln, f"{kind} block needs a name")
    name, rest = tokens[1], tokens[2:]
    if kind in ("algebra", "space", "category"):
        if rest:
            raise ParseError(ln, f"unexpected text after {kind} name")
        return name, ()
    if kind == "contact":
        return name, tuple(sorted(_pairs(rest, ln)))
    if kind == "pair":
        if len(rest) != 2 or rest[0] != ":":
            raise ParseError(ln, "expected 'pair NAME : ALGEBRA'")
        return name, (rest[1],)
    if kind == "adjunction":
        if len(rest) != 3 or rest[0] != ":":
            raise ParseError(ln, "expected 'adjunction NAME : A X'")
        return name, (rest[1], rest[2])
    if len(rest) != 4 or rest[0] != ":" or rest[2] != "->":
        raise ParseError(ln, f"expected '{kind} NAME : DOM -> COD'")
    return name, (rest[1], rest[3])


def _body_line(kind, key, rest, ln):
    if key not in KEYS[kind]:
        raise ParseError(ln, f"unknown key {key!r} in {kind} block")
    toks = rest.split()
    if key in ("atoms", "points"):
        if len(toks) != 1:
            raise ParseError(ln, f"{key} takes one number")
        return (_int(toks[0], ln, "count"),)
    if key == "contact":
        return tuple(sorted(_pairs(toks, ln)))
    if key == "open":
        return tuple(sorted({_int(t, ln) for t in toks}))
    if key == "elem":
        a, b = _arrow(rest, ln)
        return (_set(a, ln), _set(b, ln))
    if key in ("atoms-map", "point"):
        a, b = _arrow(rest, ln)
        return (_int(a, ln), _int(b, ln))
    if key == "member":
        vals = tuple(_int(t, ln, "value") for t in toks)
        if any(v > 1 for v in vals):
            raise ParseError(ln, "member values are 0 or 1")
        return vals
    if key == "object" and kind == "category":
        if not toks:
            raise ParseError(ln, "object needs at least one name")
        return tuple(toks)
    if key in ("object", "morphism") and kind == "functor":
        a, b = _arrow(rest, ln)
        return (a, b)
    if key == "morphism":
        if len(toks) != 5 or toks[1] != ":" or toks[3] != "->":
            raise ParseError(ln, "expected 'morphism ID : SRC -> TGT'")
        return (toks[0], toks[2], toks[4])
    if key == "compose":
        if len(toks) != 4 or toks[2] != "=":
            raise ParseError(ln, "expected 'compose G F = H'")
        return (toks[0], toks[1], toks[3])
    if key in ("identity", "unit", "counit"):
        if len(toks) != 3 or toks[1] != "=":
            raise ParseError(ln, f"expected '{key} OBJECT = MORPHISM'")
        return (toks[0], toks[2])
    if key in ("left", "right"):
        if len(toks) != 1:
            raise ParseError(ln, f"{key} takes a functor name")
        return (toks[0],)
    raise ParseError(ln, f"unknown key {key!r}")


def _canonical(kind, rows, ln):
    """Merge and order body rows so that equal meaning gives equal blocks."""
    out = []
    for key, lines in _group(rows):
        if key in ("atoms", "points", "left", "right"):
            if len(lines) > 1:
                raise ParseError(lines[1][1], f"{key} given twice")
            out.append((key, lines[0][0]))
        elif key == "contact":
            merged = set()
            for v, _ in lines:
                merged.update(v)
            out.append((key, tuple(sorted(merged))))
        elif key in ("open", "member"):
            for v in sorted({v for v, _ in lines}):
                out.append((key, v))
        elif key in ("elem", "atoms-map", "point", "identity", "unit", "counit") or (
                kind == "functor"):
            seen = {}
            for v, l in lines:
                if v[0] in seen and seen[v[0]] != v[1]:
                    raise ParseError(l, f"{key} {_show(v[0])} given twice")
                seen[v[0]] = v[1]
            for k in sorted(seen, key=_order):
                out.append((key, (k, seen[k])))
        else:
            for v, _ in lines:
                out.append((key, v))
    return tuple(out)


def _order(k):
    if isinstance(k, tuple):
        return (0, sum(1 << i for i in k), "")
    if isinstance(k, int):
        return (0, k, "")
    return (1, 0, k)


def _group(rows):
    order = []
    groups = {}
    for key, v, ln in rows:
        if key not in groups:
            order.append(key)
            groups[key] = []
        groups[key].append((v, ln))
    return [(k, groups[k]) for k in order]


def parse(text):
    blocks = []
    cur = None

    def close():
        nonlocal cur
        if cur is not None:
            kind, name, head, rows, ln = cur
            blocks.append(Block(kind, name, head, _canonical(kind, rows, ln), ln))
        cur = None

    for ln, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            if not raw.strip():
                close()
            continue
        key, _, rest = line.partition(" ")
        if cur is None:
            if key not in KINDS:
                raise ParseError(ln, f"unknown block kind {key!r}")
            name, head = _header(key, line.split(), ln)
            cur = (key, name, head, [], ln)
            continue
        kind = cur[0]
        cur[3].append((key, _body_line(kind, key, rest, ln), ln))
    close()
    doc = Document(blocks)
    doc.objects = resolve(doc)
    return doc


# -- building objects -----------------------------------------------------------

def _rows(block, key):
    return [v for k, v in block.body if k == key]


def _one(block, key):
    vals = _rows(block, key)
    if not vals:
        raise ParseError(block.line, f"{block.kind} {block.name} needs '{key}'")
    return vals[0]


def _mask(idx, n, ln, what="atom"):
    m = 0
    for i in idx:
        if i >= n:
            raise ParseError(ln, f"{what} {i} out of range 0..{n - 1}")
        m |= 1 << i
    return m


def _algebra(block, existing):
    ln = block.line
    pairs = set(block.head)
    for v in _rows(block, "contact"):
        pairs.update(v)
    atoms = _rows(block, "atoms")
    if block.kind == "contact" and existing is not None:
        if atoms and atoms[0][0] != existing.n_atoms:
            raise ParseError(ln, f"{block.name} has {existing.n_atoms} atoms")
        n = existing.n_atoms
    elif atoms:
        n = atoms[0][0]
    elif block.kind == "contact":
        n = max((j for _, j in pairs), default=0) + 1
    else:
        raise ParseError(ln, f"algebra {block.name} needs 'atoms'")
    if n < 1:
        raise ParseError(ln, "an algebra needs at least one atom")
    for i, j in pairs:
        if j >= n:
            raise ParseError(ln, f"contact pair {i}-{j} out of range for {n} atoms")
    return make_contact(FinBoolAlg(n, block.name), pairs)


def _lookup(objs, name, types, ln, what):
    if name in BUILTIN and what == "algebra":
        return BUILTIN[name]
    base = name[:-3] if name.endswith("^op") else name
    if base not in objs:
        raise ParseError(ln, f"unknown {what} {name!r}")
    obj = objs[base]
    if not isinstance(obj, types):
        raise ParseError(ln, f"{name!r} is not a {what}")
    if name.endswith("^op"):
        if not isinstance(obj, ck.FinCat):
            raise ParseError(ln, f"only categories have opposites ({name!r})")
        return obj.op()
    return obj


@dataclass(frozen=True)
class PointMap:
    """A point map between finite spaces, continuous or not."""
    dom: object
    cod: object
    point_map: tuple


def _map(block, objs):
    from .contact import ContactAlg
    from .fintop import FinTopSpace
    ln = block.line
    dname, cname = block.head
    elems, amap, points = _rows(block, "elem"), _rows(block, "atoms-map"), _rows(block, "point")
    if sum(bool(x) for x in (elems, amap, points)) != 1:
        raise ParseError(ln, "a map uses exactly one of elem, atoms-map or point rows")
    if points:
        X = _lookup(objs, dname, FinTopSpace, ln, "space")
        Y = _lookup(objs, cname, FinTopSpace, ln, "space")
        pm = dict(points)
        if sorted(pm) != list(range(X.n)):
            raise ParseError(ln, f"point rows must cover points 0..{X.n - 1}")
        if any(y >= Y.n for y in pm.values()):
            raise ParseError(ln, "point image out of range")
        return PointMap(X, Y, tuple(pm[x] for x in range(X.n)))
    A = _lookup(objs, dname, ContactAlg, ln, "algebra")
    B = _lookup(objs, cname, ContactAlg, ln, "algebra")
    if amap:
        am = dict(amap)
        if sorted(am) != list(range(B.n_atoms)):
            raise ParseError(ln, f"atoms-map rows must cover atoms 0..{B.n_atoms - 1} of {cname}")
        if any(i >= A.n_atoms for i in am.values()):
            raise ParseError(ln, f"atoms-map target out of range for {dname}")
        return from_hom(BoolHom(A.base, B.base, tuple(am[j] for j in range(B.n_atoms))), A, B)
    table = {}
    for a, b in elems:
        table[_mask(a, A.n_atoms, ln)] = _mask(b, B.n_atoms, ln)
    if sorted(table) != list(A.elements()):
        raise ParseError(ln, f"elem rows must cover all {A.size} elements of {dname}")
    return DVMap(A, B, tuple(table[a] for a in A.elements()))


def _category(block):
    ln = block.line
    objects = [o for v in _rows(block, "object") for o in v]
    if len(set(objects)) != len(objects):
        raise ParseError(ln, f"duplicate object in category {block.name}")
    morph = {}
    for mid, a, b in _rows(block, "morphism"):
        if mid in morph:
            raise ParseError(ln, f"morphism {mid} declared twice")
        if a not in objects or b not in objects:
            raise ParseError(ln, f"morphism {mid} mentions an unknown object")
        morph[mid] = (a, b)
    ident = dict(_rows(block, "identity"))
    comp = {}
    for g, f, h in _rows(block, "compose"):
        for m in (g, f, h):
            if m not in morph:
                raise ParseError(ln, f"compose mentions unknown morphism {m}")
        comp[(g, f)] = h
    for x, m in ident.items():
        if x not in objects or m not in morph:
            raise ParseError(ln, f"identity {x} = {m} does not resolve")
    return ck.FinCat(block.name, objects, morph, comp, ident)


def _functor(block, objs):
    ln = block.line
    C = _lookup(objs, block.head[0], ck.FinCat, ln, "category")
    D = _lookup(objs, block.head[1], ck.FinCat, ln, "category")
    ob = dict(_rows(block, "object"))
    mor = dict(_rows(block, "morphism"))
    if set(ob) != set(C.objects) or set(mor) != set(C.morphisms):
        raise ParseError(ln, f"functor {block.name} must be total on {C.name}")
    if not set(ob.values()) <= set(D.objects) or not set(mor.values()) <= set(D.morphisms):
        raise ParseError(ln, f"functor {block.name} leaves {D.name}")
    return ck.Functor(block.name, C, D, ob, mor)


def _adjunction(block, objs):
    ln = block.line
    A = _lookup(objs, block.head[0], ck.FinCat, ln, "category")
    X = _lookup(objs, block.head[1], ck.FinCat, ln, "category")
    S = _lookup(objs, _one(block, "left")[0], ck.Functor, ln, "functor")
    T = _lookup(objs, _one(block, "right")[0], ck.Functor, ln, "functor")
    eta, eps = dict(_rows(block, "unit")), dict(_rows(block, "counit"))
    if set(eta) != set(X.objects) or set(eps) != set(A.objects):
        raise ParseError(ln, "unit needs every object of X and counit every object of A")
    return ck.DualAdjunction(A, X, S, T, eta, eps, block.name)


def _pair(block, objs):
    from .contact import ContactAlg
    ln = block.line
    A = _lookup(objs, block.head[0], ContactAlg, ln, "algebra")
    Y = []
    for vals in _rows(block, "member"):
        if len(vals) != A.size:
            raise ParseError(ln, f"member needs {A.size} values, one per element")
        Y.append(DVMap(A, TWO_C, vals))
    return DeVriesPair(A, tuple(Y))


def resolve(doc):
    from .contact import ContactAlg
    objs = {}
    contacted = set()
    for b in doc.blocks:
        if b.name in BUILTIN:
            raise ParseError(b.line, f"{b.name!r} is reserved")
        if b.kind == "contact":
            prev = objs.get(b.name)
            if prev is not None and not isinstance(prev, ContactAlg):
                raise ParseError(b.line, f"{b.name!r} is not an algebra")
            if b.name in contacted:
                raise ParseError(b.line, f"contact for {b.name} given twice")
            contacted.add(b.name)
            objs[b.name] = _algebra(b, prev)
            continue
        if b.name in objs:
            raise ParseError(b.line, f"name {b.name!r} used twice")
        if b.kind == "algebra":
            objs[b.name] = _algebra(b, None)
        elif b.kind == "space":
            n = _one(b, "points")[0]
            if n < 1:
                raise ParseError(b.line, "a space needs at least one point")
            opens = [_mask(v, n, b.line, "point") for v in _rows(b, "open")]
            objs[b.name] = make_space(n, opens)
        elif b.kind == "map":
            objs[b.name] = _map(b, objs)
        elif b.kind == "extension":
            objs[b.name] = _map(b, objs)
        elif b.kind == "category":
            objs[b.name] = _category(b)
        elif b.kind == "functor":
            objs[b.name] = _functor(b, objs)
        elif b.kind == "adjunction":
            objs[b.name] = _adjunction(b, objs)
        elif b.kind == "pair":
            objs[b.name] = _pair(b, objs)
    return objs


# -- writing --------------------------------------------------------------------

def _show(v):
    if isinstance(v, tuple):
        return "{" + ",".join(str(i) for i in v) + "}"
    return str(v)


def _value(kind, key, v):
    if key == "contact":
        return " ".join(f"{i}-{j}" for i, j in v)
    if key in ("elem", "atoms-map", "point") or (kind == "functor"):
        return f"{_show(v[0])} -> {_show(v[1])}"
    if key == "morphism":
        return f"{v[0]} : {v[1]} -> {v[2]}"
    if key == "compose":
        return f"{v[0]} {v[1]} = {v[2]}"
    if key in ("identity", "unit", "counit"):
        return f"{v[0]} = {v[1]}"
    return " ".join(str(x) for x in v)


def _head(b):
    if b.kind in ("algebra", "space", "category"):
        return f"{b.kind} {b.name}"
    if b.kind == "contact":
        return " ".join([b.kind, b.name] + [f"{i}-{j}" for i, j in b.head])
    if b.kind == "pair":
        return f"pair {b.name} : {b.head[0]}"
    if b.kind == "adjunction":
        return f"adjunction {b.name} : {b.head[0]} {b.head[1]}"
    return f"{b.kind} {b.name} : {b.head[0]} -> {b.head[1]}"


def serialize(doc):
    chunks = []
    for b in doc.blocks:
        lines = [_head(b)]
        for key, v in b.body:
            text = _value(b.kind, key, v)
            lines.append(f"{key} {text}" if text else key)
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + ("\n" if chunks else "")


def algebra_block(name, alg):
    body = [("atoms", (alg.n_atoms,))]
    pairs = tuple(sorted(p for p in alg.atom_rel if p[0] != p[1]))
    if pairs:
        body.append(("contact", pairs))
    return Block("algebra", name, (), tuple(body))


def space_block(name, X):
    opens = sorted((tuple(bits(U)) for U in X.opens if U not in (0, X.full)),
                   key=lambda t: sum(1 << i for i in t))
    return Block("space", name, (), (("points", (X.n,)),) + tuple(("open", o) for o in opens))


# -- subcommands ----------------------------------------------------------------

def _live(doc):
    """Blocks in order, minus algebra blocks that a later contact block replaces."""
    last = {b.name: i for i, b in enumerate(doc.blocks) if b.kind in ("algebra", "contact")}
    return [b for i, b in enumerate(doc.blocks)
            if b.kind not in ("algebra", "contact") or last[b.name] == i]


def _algebras(doc):
    return {b.name: doc.objects[b.name] for b in _live(doc) if b.kind in ("algebra", "contact")}


def _check_algebra(rep, name, alg):
    r = check_axioms(alg)
    bad = next((k for k in ("C1", "C2", "C3", "C4") if not r.passed(k)), None)
    rep.add(name, "contact algebra (C1-C4)", r.c14, bad and (bad, r.witness(bad)))
    rep.add(name, "C1-4 iff I1-4 and C1-6 iff I1-6", r.equivalences_hold)
    failing = [k for k in ("C5", "C6") if not r.passed(k)]
    rep.notes.append(f"{name}: " + ("normal (C1-C6)" if not failing else
                                     "not normal, fails " + " ".join(failing)))
    if r.c16:
        rep.add(name, "only the diagonal is normal", alg.is_discrete, alg.describe())


def check_document(doc):
    rep = Report("check-axioms")
    for b in _live(doc):
        obj = doc.objects.get(b.name)
        if b.kind in ("algebra", "contact"):
            _check_algebra(rep, b.name, obj)
        elif b.kind == "space":
            bad = rc_boolean_report(obj)
            rep.add(b.name, "RC(X) Boolean laws", not bad, bad[:1] or None)
            cls = classify_space(obj)
            rep.notes.append(f"{b.name}: " + " ".join(k for k, v in cls.items() if v))
        elif b.kind == "map" and isinstance(obj, PointMap):
            rep.add(b.name, "continuous", is_continuous(obj.dom, obj.cod, obj.point_map))
        elif b.kind == "map":
            for k, (ok, w) in obj.conditions.items():
                rep.add(b.name, k, ok, w)
            rep.notes.append(f"{b.name}: " + ("Boolean homomorphism" if obj.is_boolean_hom
                                              else "not a Boolean homomorphism"))
        elif b.kind == "extension":
            for k, (ok, w) in extension_checks(obj).items():
                rep.add(b.name, k, ok, w)
        elif b.kind == "category":
            _law(rep, b.name, "category laws", ck.validate_category, obj)
        elif b.kind == "functor":
            _law(rep, b.name, "functor laws", ck.validate_functor, obj)
        elif b.kind == "adjunction":
            if _law(rep, b.name, "S, T, eta, eps well formed", ck.DualAdjunction.validate, obj):
                a = ck.check_dual_adjunction(obj)
                rep.add(b.name, "triangular identities", a.ok, a.failures() or None)
                rep.notes.append(f"{b.name}: " + ("dual equivalence" if a.is_equivalence
                                                  else "not an equivalence"))
        elif b.kind == "pair":
            homs = dv_homs_to_2(obj.algebra)
            bad = [h.describe() for h in obj.Y if h not in homs]
            rep.add(b.name, "members are de Vries morphisms into 2", not bad, bad[:1] or None)
            ok, w = is_pair(obj.algebra, obj.Y)
            rep.add(b.name, "de Vries pair", ok, w)
    return rep


def _law(rep, name, check, fn, obj):
    try:
        fn(obj)
    except LawError as e:
        return rep.add(name, check, False, (e.law, e.witness))
    return rep.add(name, check, True)


def cluster_document(doc):
    rep = Report("clusters")
    for name, alg in _algebras(doc).items():
        res = clusters(alg)
        for k, c in enumerate(res.primary):
            rep.notes.append(f"{name} cluster {k}: " + " ".join(fmt_set(a) for a in sorted(c.members)))
        rep.add(name, "clusters from ultrafilters = brute-force clusters", res.agree, len(res.primary))
        if res.uf_equivalence:
            rep.add(name, "one cluster per contact class", len(res.primary) == res.n_classes,
                    res.n_classes)
    return rep


def dualize_document(doc):
    """Dual space of every algebra block and RC algebra of every space block."""
    out = []
    taken = set(doc.objects)

    def fresh(base):
        name, k = base, 1
        while name in taken:
            k += 1
            name = f"{base}{k}"
        taken.add(name)
        return name

    dual = {}
    for b in _live(doc):
        obj = doc.objects[b.name]
        if b.kind in ("algebra", "contact"):
            dual[b.name] = fresh(f"{b.name}.dual")
            out.append(space_block(dual[b.name], clust_space(obj).space))
        elif b.kind == "space":
            out.append(algebra_block(fresh(f"{b.name}.rc"), rc_algebra(obj).contact))
        elif b.kind == "map" and isinstance(obj, DVMap) and obj.is_dv:
            dom, cod = b.head
            if dom in dual and cod in dual:
                # Clust of the map runs backwards, from the codomain's clusters
                cm = clust_of_morphism(obj)
                csA, csB = clust_space(obj.dom), clust_space(obj.cod)
                pts = tuple(("point", (k, csA.clusters.index(cm(d))))
                            for k, d in enumerate(csB.clusters))
                out.append(Block("map", fresh(f"{b.name}.dual"), (dual[cod], dual[dom]), pts))
    return Document(out)


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    except ParseError as e:
        raise InputError(f"{path}: {e}")


class InputError(Exception):
    pass


def _finish(rep, out):
    out.append(rep.render())
    n, bad = len(rep.findings), len(rep.failures())
    out.append(f"{rep.title}: {n} checks, {bad} failed")
    return 0 if rep.ok else 1


def _parser():
    p = argparse.ArgumentParser(prog="findual", description="Finite-model checks for contact algebras "
                                "and their dualities.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, what in (("check-axioms", "check every block of FILE"),
                       ("clusters", "list the clusters of every algebra in FILE"),
                       ("dualize", "emit the dual of every algebra and space in FILE")):
        s = sub.add_parser(name, help=what)
        s.add_argument("file")
    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", help="one of: " + ", ".join(SUITES))
    v.add_argument("--max-atoms", type=int)
    v.add_argument("--max-points", type=int)
    v.add_argument("--seed", type=int, default=0)
    s = sub.add_parser("survey-normal", help="axiom table for every atom relation on N atoms")
    s.add_argument("n", type=int)
    return p


def run(subcommand, args):
    """Run one subcommand; returns (exit code, output text)."""
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err):
            ns = _parser().parse_args([subcommand] + list(args))
    except SystemExit as e:
        return (2 if e.code else 0), err.getvalue().rstrip("\n")
    out = []
    try:
        if ns.command == "check-axioms":
            code = _finish(check_document(_read(ns.file)), out)
        elif ns.command == "clusters":
            code = _finish(cluster_document(_read(ns.file)), out)
        elif ns.command == "dualize":
            out.append(serialize(dualize_document(_read(ns.file))).rstrip("\n"))
            code = 0
        elif ns.command == "verify":
            if ns.suite not in SUITES:
                raise InputError(f"unknown suite {ns.suite!r}; choose from {', '.join(SUITES)}")
            rep = run_suite(ns.suite, ns.max_atoms, ns.max_points, ns.seed)
            out.append(f"# suite {ns.suite} seed={ns.seed}")
            code = _finish(rep, out)
        else:
            rows, rep = collapse_survey(ns.n)
            out.extend(survey_table(rows))
            code = _finish(rep, out)
    except (InputError, PreconditionError, ScaleError) as e:
        return 2, f"error: {e}"
    except TheoremViolation as e:
        out.append(f"FAIL\t{e.check}\t{e.witness}")
        return 1, "\n".join(out)
    return code, "\n".join(out)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        _parser().print_help()
        return 2
    code, text = run(argv[0], argv[1:])
    if text:
        stream = sys.stderr if code == 2 else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
