"""Mod-d characters that are 1 on every fibre, and finite covers of
decorated graphs.

A cover is described by its sheets Z/d. Moving across a torus outside the
spanning tree shifts the sheet by the character's value on that torus's
crossing loop; inside a block the sheet may shift by any value the
character takes on the block.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .abelian import IntMatrix, solve_mod
from .errors import (NotComposite, NotCoprime, NotDivisible, NotRealizable,
                     ValidationError, ZeroIntersection)
from .graph import (Block, CharacterModD, DecoratedGraph, TorusGluing, classify,
                    homology_h1, validate_structure)


@dataclass(frozen=True)
class TorusCharacter:
    """Residues of the torus character on the plus basis (fibre, section)."""

    torus: object
    d: int
    fibre: int
    section: int
    gluing: tuple

    def value(self, vector):
        """Value on ``a * fibre_+ + b * section_+``."""
        a, b = vector
        return (a * self.fibre + b * self.section) % self.d

    def on_minus_fibre(self):
        (g11, _), (g21, _) = self.gluing
        return self.value((g11, g21))

    def on_minus_section(self):
        (_, g12), (_, g22) = self.gluing
        return self.value((g12, g22))


def alpha_on_torus(t: TorusGluing, d: int) -> TorusCharacter:
    """The character c^-1 (gamma_+ . beta - gamma_- . beta) mod d, which takes
    the value 1 on both fibres."""
    c = t.c
    if c == 0:
        raise ZeroIntersection("torus %r has matched fibres" % (t.id,), torus=t.id)
    if gcd(c, d) != 1:
        raise NotCoprime("c(%s) = %d is not coprime to %d" % (t.id, c, d), torus=t.id)
    inv = pow(c, -1, d)
    (g11, _), _ = t.gluing
    # gamma_+ = (1, 0), gamma_- = (g11, g21); x . y = x1 y2 - x2 y1
    fibre = inv * (0 - (-c)) % d
    section = inv * (1 - g11) % d
    out = TorusCharacter(t.id, d, fibre, section, t.gluing)
    assert out.value((1, 0)) == 1 % d and out.on_minus_fibre() == 1 % d
    return out


def extension_obstruction(block: Block, residues, d: int) -> int:
    """Sum of the boundary residues mod d; zero iff a class with these
    boundary values extends over the block surface."""
    residues = list(residues)
    if len(residues) != block.boundary:
        raise ValidationError("block %r has %d boundary circles" % (block.id, block.boundary))
    return sum(residues) % d


@dataclass(frozen=True)
class ObstructionReport:
    """Blocks whose boundary residues do not sum to zero, with the order
    |H_1(surface, boundary; Z/d)| of the cover that kills the obstruction."""

    d: int
    obstructed: tuple
    cover_orders: dict = field(default_factory=dict)

    def as_dict(self):
        return {"d": self.d,
                "obstructed": [{"block": b, "residue": r} for b, r in self.obstructed],
                "cover_orders": {str(k): v for k, v in self.cover_orders.items()}}


def boundary_residues(g, d):
    """Per block, the section residue of the torus character at each
    boundary circle."""
    chars = {t.id: alpha_on_torus(t, d) for t in g.tori}
    out = {b.id: [None] * b.boundary for b in g.blocks}
    for t in g.tori:
        ch = chars[t.id]
        out[t.plus[0]][t.plus[1]] = ch.section
        out[t.minus[0]][t.minus[1]] = ch.on_minus_section()
    return chars, out


def glue_character(g: DecoratedGraph, d: int):
    """A character mod d that is 1 on every fibre, or an ObstructionReport
    when some block's boundary data does not extend."""
    rep = classify(g)
    if rep.kind != "COMPOSITE":
        raise NotComposite("graph is not composite: %s" % ", ".join(rep.reasons),
                           reasons=rep.reasons)
    _, res = boundary_residues(g, d)
    obstructed = []
    for b in g.blocks:
        r = extension_obstruction(b, res[b.id], d)
        if r:
            obstructed.append((b.id, r))
    if obstructed:
        orders = {bid: d ** (2 * g.block(bid).genus + g.block(bid).boundary - 1)
                  for bid, _ in obstructed}
        return ObstructionReport(d, tuple(obstructed), orders)
    h1 = homology_h1(g)
    n = len(h1.labels)
    rows = [list(r) for r in h1.relations.entries]
    rhs = [0] * len(rows)
    for b in g.blocks:
        row = [0] * n
        row[h1.theta_index(b.id)] = 1
        rows.append(row)
        rhs.append(1)
        for i in range(b.boundary - 1):
            row = [0] * n
            row[h1.index("%s.d%d" % (b.id, i))] = 1
            rows.append(row)
            rhs.append(res[b.id][i])
    sol = solve_mod(IntMatrix.of(rows, n), rhs, d)
    if sol is None:  # cannot happen once the obstructions vanish
        raise ValidationError("character system is inconsistent")
    alpha = CharacterModD(h1, d, sol.x)
    assert all(alpha.fibre(b.id) == 1 % d for b in g.blocks)
    return alpha


def cover_genus(g: int, b0: int, n: int, d: int) -> int:
    """Genus of a degree-n cover of a genus-g surface with b0 boundary
    circles, each boundary circle covered with degree d:
    2 - 2 g~ = n (2 - 2g - b0) + (n / d) b0."""
    if d < 1 or n < 1:
        raise NotDivisible("degrees must be positive")
    if n % d:
        raise NotDivisible("boundary degree %d does not divide %d" % (d, n))
    chi = n * (2 - 2 * g - b0) + (n // d) * b0
    if (2 - chi) % 2 or 2 - chi < 0:
        raise NotRealizable("no surface with Euler characteristic %d and %d boundary circles"
                            % (chi, (n // d) * b0))
    return (2 - chi) // 2


@dataclass(frozen=True)
class CoverPattern:
    """How a cover sits over the base graph.

    ``blocks`` maps each cover block to (base block, sheet coset, fibre
    degree, surface degree); ``tori`` maps each cover torus to (base torus,
    sheet coset, plus boundary degree, minus boundary degree); ``deck`` is
    the permutation of cover blocks and tori induced by moving one sheet.
    """

    degree: int
    blocks: dict
    tori: dict
    deck: dict
    intersections: dict

    def as_dict(self):
        return {"degree": self.degree,
                "blocks": {str(k): list(v) for k, v in self.blocks.items()},
                "tori": {str(k): list(v) for k, v in self.tori.items()},
                "deck": {str(k): str(v) for k, v in self.deck.items()},
                "intersections": {str(k): list(v) for k, v in self.intersections.items()}}

    def preserves_intersections(self):
        return all(new == old for old, new in self.intersections.values())


def identity_pattern(g):
    return CoverPattern(
        1,
        {b.id: (b.id, 0, 1, 1) for b in g.blocks},
        {t.id: (t.id, 0, 1, 1) for t in g.tori},
        {**{b.id: b.id for b in g.blocks}, **{t.id: t.id for t in g.tori}},
        {t.id: (t.c, t.c) for t in g.tori},
    )


def _order(x, d):
    return d // gcd(x % d, d)


def _section_offset(a, r, e, o, d):
    """Smallest x in [0, o) with x*a + e*r = 0 mod d."""
    for x in range(o):
        if (x * a + e * r) % d == 0:
            return x
    raise NotRealizable("no lifted section exists")  # pragma: no cover


def cyclic_cover(g: DecoratedGraph, alpha: CharacterModD):
    """The d-sheeted cover determined by a character mod d.

    Each block lifts to d/|H_B| products (surface cover) x (circle), H_B the
    character's image on the block. Each torus lifts to d/|H_T| tori whose
    gluing is rewritten in the lifted bases (multiple of the fibre, lifted
    section). Lifted sections of one cover block are shifted along the
    fibre so they bound a horizontal surface.
    """
    if alpha.h1.graph != g:
        raise ValidationError("character belongs to a different graph")
    h1, d = alpha.h1, alpha.d
    # image subgroups are <gen> with gen | d
    block_gen, fibre_deg = {}, {}
    for b in g.blocks:
        vals = [alpha.on_vector(v) for v in h1.block_vectors(b.id)]
        block_gen[b.id] = gcd(d, *vals) if vals else d
        fibre_deg[b.id] = _order(alpha.fibre(b.id), d)
    ends = {}
    torus_gen, shift = {}, {}
    for t in g.tori:
        a_p = alpha.fibre(t.plus[0])
        r_p = alpha.on_vector(h1.boundary_vector(*t.plus))
        a_m = alpha.fibre(t.minus[0])
        r_m = alpha.on_vector(h1.boundary_vector(*t.minus))
        gt = gcd(d, a_p, r_p)
        if gcd(d, a_m, r_m) != gt:
            raise ValidationError("character is inconsistent on torus %r" % (t.id,))
        torus_gen[t.id] = gt
        m = d // gt
        for side, end, a, r in (("plus", t.plus, a_p, r_p), ("minus", t.minus, a_m, r_m)):
            o = fibre_deg[end[0]]
            e = m // o
            ends[(t.id, side)] = (o, e, _section_offset(a, r, e, o, d))
        shift[t.id] = 0 if t.id in h1.tree else alpha.residues[h1.crossing_index(t.id)]

    def bname(bid, v):
        return "%s~%d" % (bid, v)

    def tname(tid, u):
        return "%s~%d" % (tid, u)

    # lifted boundary circles of each cover block, ordered by (circle, torus sheet)
    circles = {}
    for t in g.tori:
        for u in range(torus_gen[t.id]):
            for side, end, s in (("plus", t.plus, 0), ("minus", t.minus, shift[t.id])):
                bid, idx = end
                v = (u + s) % block_gen[bid]
                circles.setdefault((bid, v), []).append((idx, u, t.id, side))
    new_blocks, pattern_blocks, sections = [], {}, {}
    for b in g.blocks:
        gb = block_gen[b.id]
        size = d // gb
        o = fibre_deg[b.id]
        s = size // o
        for v in range(gb):
            lst = sorted(circles[(b.id, v)], key=lambda c: (c[0], c[1], c[3]))
            nb = len(lst)
            chi = s * b.chi
            if (2 - chi - nb) % 2 or 2 - chi - nb < 0:
                raise NotRealizable("block %r has no lift with %d boundary circles" % (b.id, nb))
            genus = (2 - chi - nb) // 2
            degrees = {ends[(tid, side)][1] for _, _, tid, side in lst}
            if len(degrees) == 1:
                assert cover_genus(b.genus, b.boundary, s, degrees.pop()) == genus
            if b.genus >= 1:
                assert genus >= b.genus
            name = bname(b.id, v)
            new_blocks.append(Block(name, genus, nb))
            pattern_blocks[name] = (b.id, v, o, s)
            total = 0
            for k, (idx, u, tid, side) in enumerate(lst):
                _, _, x = ends[(tid, side)]
                sections[(tid, u, side)] = [name, k, x]
                total += x
            assert total % o == 0
            if lst:
                first = lst[0]
                sections[(first[2], first[1], first[3])][2] -= total
    new_tori, pattern_tori, inter = [], {}, {}
    for t in g.tori:
        G = [[Fraction(x) for x in row] for row in t.gluing]
        for u in range(torus_gen[t.id]):
            bp, kp, xp = sections[(t.id, u, "plus")]
            bm, km, xm = sections[(t.id, u, "minus")]
            op, ep, _ = ends[(t.id, "plus")]
            om, em, _ = ends[(t.id, "minus")]
            Pp_inv = [[Fraction(1, op), Fraction(-xp, op * ep)], [Fraction(0), Fraction(1, ep)]]
            Pm = [[om, xm], [0, em]]
            Gt = _mul2(_mul2(Pp_inv, G), Pm)
            if any(x.denominator != 1 for row in Gt for x in row):
                raise NotRealizable("lifted gluing of %r is not integral" % (t.id,))
            Gt = tuple(tuple(int(x) for x in row) for row in Gt)
            name = tname(t.id, u)
            nt = TorusGluing(name, (bp, kp), (bm, km), Gt)
            new_tori.append(nt)
            pattern_tori[name] = (t.id, u, ep, em)
            inter[name] = (t.c, nt.c)
            assert nt.c * (d // torus_gen[t.id]) == op * om * t.c
    cover = DecoratedGraph(tuple(new_blocks), tuple(new_tori))
    deck = {}
    for name, (bid, v, _, _) in pattern_blocks.items():
        deck[name] = bname(bid, (v + 1) % block_gen[bid])
    for name, (tid, u, _, _) in pattern_tori.items():
        deck[name] = tname(tid, (u + 1) % torus_gen[tid])
    # surface Euler characteristic weighted by fibre degree is multiplicative
    weighted = sum(pattern_blocks[b.id][2] * b.chi for b in cover.blocks)
    assert weighted == d * g.euler_characteristic()
    return cover, CoverPattern(d, pattern_blocks, pattern_tori, deck, inter)


def _mul2(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def self_pasting_character(g):
    """The mod-2 character that is 1 on the crossing loop of every
    self-pasted torus and 0 on everything else."""
    h1 = homology_h1(g)
    vals = [0] * len(h1.labels)
    for t in g.tori:
        if t.is_self_pasting:
            vals[h1.crossing_index(t.id)] = 1
    return CharacterModD(h1, 2, vals)


def eliminate_self_pastings(g: DecoratedGraph):
    """Double cover in which every self-pasted torus crosses between the two
    copies; returns the graph unchanged with an identity pattern when
    there is nothing to do."""
    if not validate_structure(g).self_pastings:
        return g, identity_pattern(g)
    cover, pattern = cyclic_cover(g, self_pasting_character(g))
    assert not validate_structure(cover).self_pastings
    return cover, pattern
