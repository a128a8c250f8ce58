"""Decorated graphs: blocks (surface x circle) glued along tori.

Conventions, fixed once:

* A torus seen from its plus side has homology basis (fibre_+, section_+),
  where section_+ is the boundary circle of the plus block.
* ``gluing`` writes the minus side's (fibre, section) basis in the plus
  side's basis, column by column. The minus fibre is therefore the first
  column and the fibre-intersection number is the lower-left entry.
* Boundary circles of a block are indexed 0..b-1.
"""

import random as _random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .abelian import IntMatrix, cokernel, integer_kernel, solve_int
from .errors import GroupMismatch, MalformedGraph, SchemaError, ValidationError

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class Block:
    id: object
    genus: int
    boundary: int

    def __post_init__(self):
        if int(self.genus) < 0:
            raise MalformedGraph("block %r has negative genus" % (self.id,))
        if int(self.boundary) < 1:
            raise MalformedGraph("block %r needs at least one boundary circle" % (self.id,))

    @property
    def chi(self):
        return 2 - 2 * self.genus - self.boundary


@dataclass(frozen=True)
class TorusGluing:
    id: object
    plus: tuple
    minus: tuple
    gluing: tuple

    def __post_init__(self):
        try:
            G = tuple(tuple(int(x) for x in row) for row in self.gluing)
        except (TypeError, ValueError):
            raise MalformedGraph("gluing must be a 2x2 integer matrix") from None
        if len(G) != 2 or any(len(r) != 2 for r in G):
            raise MalformedGraph("gluing must be a 2x2 integer matrix")
        if abs(G[0][0] * G[1][1] - G[0][1] * G[1][0]) != 1:
            raise MalformedGraph("gluing not unimodular", torus=self.id)
        object.__setattr__(self, "gluing", G)
        object.__setattr__(self, "plus", (self.plus[0], int(self.plus[1])))
        object.__setattr__(self, "minus", (self.minus[0], int(self.minus[1])))

    @property
    def c(self):
        return fibre_intersection(self)

    @property
    def is_self_pasting(self):
        return self.plus[0] == self.minus[0]

    def reversed(self):
        """The same torus with the two sides exchanged."""
        (a, b), (c, d) = self.gluing
        s = a * d - b * c
        inv = ((d * s, -b * s), (-c * s, a * s))
        return TorusGluing(self.id, self.minus, self.plus, inv)


def fibre_intersection(t: TorusGluing) -> int:
    """Intersection number of the two fibres on the torus: the lower-left
    gluing entry."""
    return t.gluing[1][0]


@dataclass(frozen=True)
class DecoratedGraph:
    blocks: tuple
    tori: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "tori", tuple(self.tori))
        ids = [b.id for b in self.blocks]
        if len(set(ids)) != len(ids):
            raise MalformedGraph("duplicate block id")
        tids = [t.id for t in self.tori]
        if len(set(tids)) != len(tids):
            raise MalformedGraph("duplicate torus id")
        _check_matching(self)

    def block(self, bid) -> Block:
        for b in self.blocks:
            if b.id == bid:
                return b
        raise MalformedGraph("unknown block %r" % (bid,))

    def torus(self, tid) -> TorusGluing:
        for t in self.tori:
            if t.id == tid:
                return t
        raise MalformedGraph("unknown torus %r" % (tid,))

    def block_index(self, bid):
        for i, b in enumerate(self.blocks):
            if b.id == bid:
                return i
        raise MalformedGraph("unknown block %r" % (bid,))

    def euler_characteristic(self):
        return sum(b.chi for b in self.blocks)

    def cycle_rank(self):
        return len(self.tori) - len(self.blocks) + len(components(self))


def _check_matching(g):
    sizes = {b.id: b.boundary for b in g.blocks}
    seen = {}
    for t in g.tori:
        for end in (t.plus, t.minus):
            bid, idx = end
            if bid not in sizes:
                raise MalformedGraph("torus %r refers to unknown block %r" % (t.id, bid))
            if not 0 <= idx < sizes[bid]:
                raise MalformedGraph("torus %r uses boundary %d of block %r which has %d"
                                     % (t.id, idx, bid, sizes[bid]))
            if end in seen:
                raise MalformedGraph("boundary %d of block %r is used twice" % (idx, bid))
            seen[end] = t.id
    for bid, b in sizes.items():
        for idx in range(b):
            if (bid, idx) not in seen:
                raise MalformedGraph("boundary %d of block %r is not glued" % (idx, bid))


def components(g):
    """Connected components as lists of block ids."""
    adj = {b.id: [] for b in g.blocks}
    for t in g.tori:
        adj[t.plus[0]].append(t.minus[0])
        adj[t.minus[0]].append(t.plus[0])
    seen, out = set(), []
    for b in g.blocks:
        if b.id in seen:
            continue
        comp, queue = [], deque([b.id])
        seen.add(b.id)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.append(comp)
    return out


def spanning_tree(g):
    """Torus ids of a spanning forest found by breadth-first search from the
    first block of each component, scanning tori in list order."""
    tree, seen = [], set()
    for b in g.blocks:
        if b.id in seen:
            continue
        seen.add(b.id)
        queue = deque([b.id])
        while queue:
            v = queue.popleft()
            for t in g.tori:
                if t.plus[0] == v or t.minus[0] == v:
                    w = t.minus[0] if t.plus[0] == v else t.plus[0]
                    if w not in seen:
                        seen.add(w)
                        tree.append(t.id)
                        queue.append(w)
    return tree


@dataclass(frozen=True)
class StructureReport:
    reduced: bool
    composite: bool
    self_pastings: tuple
    connected: bool
    nonnegative_chi_blocks: tuple = ()
    zero_intersection_tori: tuple = ()

    def as_dict(self):
        return {
            "reduced": self.reduced,
            "composite": self.composite,
            "self_pastings": list(self.self_pastings),
            "connected": self.connected,
            "nonnegative_chi_blocks": list(self.nonnegative_chi_blocks),
            "zero_intersection_tori": list(self.zero_intersection_tori),
        }


def validate_structure(g: DecoratedGraph) -> StructureReport:
    _check_matching(g)
    zero = tuple(t.id for t in g.tori if fibre_intersection(t) == 0)
    nonneg = tuple(b.id for b in g.blocks if b.chi >= 0)
    connected = len(components(g)) == 1
    reduced = not zero
    return StructureReport(
        reduced=reduced,
        composite=reduced and not nonneg and connected,
        self_pastings=tuple(t.id for t in g.tori if t.is_self_pasting),
        connected=connected,
        nonnegative_chi_blocks=nonneg,
        zero_intersection_tori=zero,
    )


@dataclass(frozen=True)
class TypeReport:
    kind: str
    reasons: tuple
    torus_type: bool
    norm_vanishes: bool

    def as_dict(self):
        return {"type": self.kind, "reasons": list(self.reasons),
                "torus_type": self.torus_type, "norm_vanishes_identically": self.norm_vanishes}


def classify(g: DecoratedGraph) -> TypeReport:
    """COMPOSITE or NOT_COMPOSITE with the failing conditions.

    A connected ring of annuli is a torus bundle; its Thurston norm vanishes
    identically, which is reported as an informational flag.
    """
    rep = validate_structure(g)
    reasons = []
    if not rep.reduced:
        reasons.append("NOT_REDUCED")
    if rep.nonnegative_chi_blocks:
        reasons.append("NONNEGATIVE_CHI")
    if not rep.connected:
        reasons.append("DISCONNECTED")
    torus = rep.connected and all(b.genus == 0 and b.boundary == 2 for b in g.blocks)
    return TypeReport("COMPOSITE" if rep.composite else "NOT_COMPOSITE",
                      tuple(reasons), torus, torus)


# first homology ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class H1:
    """First homology of a decorated graph from its Mayer-Vietoris
    presentation.

    ``labels`` name the presentation generators, ``relations`` has one row
    per relation, and ``cok`` maps generators into ``group``.
    """

    graph: DecoratedGraph
    labels: tuple
    relations: IntMatrix
    cok: object
    tree: tuple

    def __repr__(self):
        return "H1(%s)" % (self.group,)

    @property
    def group(self):
        return self.cok.group

    @property
    def b1(self):
        return self.group.free_rank

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def theta_index(self, bid):
        return self.index(_label(bid, "theta"))

    def generator(self, label):
        return self.cok.images[self.index(label)]

    def theta(self, bid):
        return self.cok.images[self.theta_index(bid)]

    def element(self, vector):
        return self.cok.element(vector)

    def boundary_vector(self, bid, idx):
        """Presentation vector of boundary circle ``idx`` of block ``bid``."""
        b = self.graph.block(bid)
        v = [0] * len(self.labels)
        if idx < b.boundary - 1:
            v[self.index(_label(bid, "d%d" % idx))] = 1
        else:
            for i in range(b.boundary - 1):
                v[self.index(_label(bid, "d%d" % i))] = -1
        return v

    def fibre_vector(self, bid):
        v = [0] * len(self.labels)
        v[self.theta_index(bid)] = 1
        return v

    def block_vectors(self, bid):
        """Presentation vectors of all generators belonging to one block."""
        prefix = "%s." % (bid,)
        out = []
        for i, lab in enumerate(self.labels):
            if lab.startswith(prefix) and not lab.endswith(".x"):
                v = [0] * len(self.labels)
                v[i] = 1
                out.append(v)
        return out

    def crossing_index(self, tid):
        return self.index(_label(tid, "x"))


def _label(owner, name):
    return "%s.%s" % (owner, name)


def relation_rows(g, labels, index):
    rows = []

    def bvec(bid, idx):
        b = g.block(bid)
        v = [0] * len(labels)
        if idx < b.boundary - 1:
            v[index[_label(bid, "d%d" % idx)]] += 1
        else:
            for i in range(b.boundary - 1):
                v[index[_label(bid, "d%d" % i)]] -= 1
        return v

    for t in g.tori:
        (g11, g12), (g21, g22) = t.gluing
        bp, bm = t.plus[0], t.minus[0]
        sp, sm = bvec(*t.plus), bvec(*t.minus)
        fp, fm = index[_label(bp, "theta")], index[_label(bm, "theta")]
        # minus fibre = g11 fibre_+ + g21 section_+
        r1 = [-g21 * x for x in sp]
        r1[fm] += 1
        r1[fp] -= g11
        # minus section = g12 fibre_+ + g22 section_+
        r2 = [a - g22 * b for a, b in zip(sm, sp)]
        r2[fp] -= g12
        rows += [r1, r2]
    return rows


@lru_cache(maxsize=256)
def homology_h1(g: DecoratedGraph) -> H1:
    """Generators: per block 2g surface classes, b-1 boundary classes and
    the fibre; then one crossing loop per torus outside the spanning tree.
    Relations: two per torus, identifying the minus side's torus basis with
    its image under the gluing."""
    labels = []
    for b in g.blocks:
        labels += [_label(b.id, "a%d" % i) for i in range(2 * b.genus)]
        labels += [_label(b.id, "d%d" % i) for i in range(b.boundary - 1)]
        labels.append(_label(b.id, "theta"))
    tree = spanning_tree(g)
    for t in g.tori:
        if t.id not in tree:
            labels.append(_label(t.id, "x"))
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise MalformedGraph("block and torus ids produce clashing generator names")
    rows = relation_rows(g, labels, index)
    M = IntMatrix.of(rows, len(labels))
    return H1(g, tuple(labels), M, cokernel(M), tuple(tree))


# classes -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CohClass:
    """Integer cohomology class given by its values on the presentation
    generators; must vanish on every relation."""

    h1: H1
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != len(self.h1.labels):
            raise ValidationError("expected %d values" % len(self.h1.labels))
        bad = [i for i, row in enumerate(self.h1.relations.entries)
               if sum(a * v for a, v in zip(row, vals))]
        if bad:
            raise ValidationError("class does not vanish on relations", relations=bad)

    @classmethod
    def from_fibres(cls, h1, fibres):
        """The class with prescribed fibre values, zero on any free choice.

        ``fibres`` maps block id to an integer. Raises ValidationError when no
        cohomology class has these fibre values."""
        n = len(h1.labels)
        rows = [list(r) for r in h1.relations.entries]
        rhs = [0] * len(rows)
        for bid, s in fibres.items():
            row = [0] * n
            row[h1.theta_index(bid)] = 1
            rows.append(row)
            rhs.append(int(s))
        sol = solve_int(IntMatrix.of(rows, n), rhs)
        if sol is None:
            raise ValidationError("no integral class has these fibre values")
        return cls(h1, sol)

    @classmethod
    def random(cls, h1, rng=None, bound=3):
        rng = rng or _random.Random()
        basis = integer_kernel(h1.relations)
        vals = [0] * len(h1.labels)
        for v in basis:
            c = rng.randint(-bound, bound)
            vals = [a + c * b for a, b in zip(vals, v)]
        return cls(h1, vals)

    def __repr__(self):
        return "CohClass(%r)" % (self.values,)

    def fibre(self, bid):
        return self.values[self.h1.theta_index(bid)]

    def on_vector(self, vector):
        return sum(a * b for a, b in zip(self.values, vector))

    def __add__(self, other):
        return CohClass(self.h1, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, n):
        return CohClass(self.h1, [n * a for a in self.values])

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class CharacterModD:
    """Homomorphism H_1 -> Z/d given by residues on the presentation
    generators."""

    h1: H1
    d: int
    residues: tuple

    def __post_init__(self):
        if self.d < 2:
            raise ValidationError("modulus must be >= 2")
        vals = tuple(int(v) % self.d for v in self.residues)
        object.__setattr__(self, "residues", vals)
        if len(vals) != len(self.h1.labels):
            raise ValidationError("expected %d residues" % len(self.h1.labels))
        bad = [i for i, row in enumerate(self.h1.relations.entries)
               if sum(a * v for a, v in zip(row, vals)) % self.d]
        if bad:
            raise ValidationError("character does not vanish on relations mod %d" % self.d,
                                  relations=bad)

    def __repr__(self):
        return "CharacterModD(d=%d, %r)" % (self.d, self.residues)

    def fibre(self, bid):
        return self.residues[self.h1.theta_index(bid)]

    def on_vector(self, vector):
        return sum(a * b for a, b in zip(self.residues, vector)) % self.d


def eval_class(cls, x):
    """Evaluate a class or character on a group element of its H_1."""
    if x.group is not cls.h1.group:
        raise GroupMismatch("element does not belong to this first homology group")
    total = 0
    for coord, lift in zip(x.coordinates(), cls.h1.cok.lifts):
        if coord:
            total += coord * sum(a * b for a, b in zip(cls.values if isinstance(cls, CohClass)
                                                       else cls.residues, lift))
    if isinstance(cls, CharacterModD):
        return total % cls.d
    return total


# document form -----------------------------------------------------------


def to_document(g: DecoratedGraph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "blocks": [{"id": b.id, "genus": b.genus, "boundary": b.boundary} for b in g.blocks],
        "tori": [{"id": t.id,
                  "plus": {"block": t.plus[0], "index": t.plus[1]},
                  "minus": {"block": t.minus[0], "index": t.minus[1]},
                  "gluing": [list(r) for r in t.gluing]} for t in g.tori],
    }


def _need(obj, key, where, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError("missing field %s.%s" % (where, key), field="%s.%s" % (where, key))
    val = obj[key]
    if kind is not None and (not isinstance(val, kind) or isinstance(val, bool)):
        raise SchemaError("field %s.%s has the wrong type" % (where, key),
                          field="%s.%s" % (where, key))
    return val


def from_document(doc) -> DecoratedGraph:
    """Build a graph from its JSON document, raising SchemaError on any
    missing or malformed field."""
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object", field="$")
    version = _need(doc, "format_version", "$")
    if str(version) != FORMAT_VERSION:
        raise SchemaError("unsupported format_version %r" % (version,), field="$.format_version")
    blocks = []
    for i, b in enumerate(_need(doc, "blocks", "$", list)):
        where = "$.blocks[%d]" % i
        try:
            blocks.append(Block(_need(b, "id", where), _need(b, "genus", where, int),
                                _need(b, "boundary", where, int)))
        except MalformedGraph as exc:
            raise SchemaError(str(exc), field=where) from None
    tori = []
    for i, t in enumerate(_need(doc, "tori", "$", list)):
        where = "$.tori[%d]" % i
        plus = _need(t, "plus", where, dict)
        minus = _need(t, "minus", where, dict)
        ends = []
        for name, e in (("plus", plus), ("minus", minus)):
            ends.append((_need(e, "block", where + "." + name),
                         _need(e, "index", where + "." + name, int)))
        gl = _need(t, "gluing", where, list)
        try:
            tori.append(TorusGluing(_need(t, "id", where), ends[0], ends[1], gl))
        except MalformedGraph as exc:
            raise SchemaError(str(exc), field=where + ".gluing") from None
    try:
        return DecoratedGraph(tuple(blocks), tuple(tori))
    except MalformedGraph as exc:
        raise SchemaError(str(exc), field="$.tori") from None


def family_p(*cs, genus=0):
    """Two blocks, each with len(cs) boundary circles, joined by len(cs) tori
    with gluing [[1, 0], [c_i, 1]]."""
    n = len(cs)
    blocks = (Block("B1", genus, n), Block("B2", genus, n))
    tori = tuple(TorusGluing("T%d" % (i + 1), ("B1", i), ("B2", i), ((1, 0), (c, 1)))
                 for i, c in enumerate(cs))
    return DecoratedGraph(blocks, tori)
