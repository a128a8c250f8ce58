"""Finite covers: removing a self-pasting, and what a character that is 1 on
every fibre does to the gluing data.

Run: python3 demos/covers.py
"""

from graphnorm.covers import cover_genus, cyclic_cover, eliminate_self_pastings, glue_character
from graphnorm.graph import Block, DecoratedGraph, TorusGluing, family_p, validate_structure

# A genus-one surface with two boundary circles, glued to itself.
g = DecoratedGraph((Block("A", 1, 2),),
                   (TorusGluing("T", ("A", 0), ("A", 1), ((1, 0), (1, 1))),))
print("self-pastings before:", validate_structure(g).self_pastings)
cover, pattern = eliminate_self_pastings(g)
print("double cover blocks:", [(b.id, b.genus, b.boundary) for b in cover.blocks])
print("double cover tori:", [(t.id, t.plus, t.minus, t.c) for t in cover.tori])
print("self-pastings after:", validate_structure(cover).self_pastings)
print("chi:", g.euler_characteristic(), "->", cover.euler_characteristic())

# The cover defined by the glued character unwraps every fibre instead.
# The surfaces lift homeomorphically and the lifted fibres meet twice as often.
p = family_p(1, 1, 1)
cover, pattern = cyclic_cover(p, glue_character(p, 2))
print("fibre and surface degrees:", {k: v[2:] for k, v in pattern.blocks.items()})
print("intersection numbers (old, new):", pattern.intersections)

# Genus of a surface cover with prescribed boundary degree.
print("genus of a 9-fold cover of the pants, boundary degree 3:", cover_genus(0, 3, 9, 3))
