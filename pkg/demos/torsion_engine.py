"""Torsion of small based chain complexes.

Run: python3 demos/torsion_engine.py
"""

import random

from graphnorm.field import RatFunc, zeta
from graphnorm.torsion import (BasedChainComplex, apply_base_change, base_change_factor,
                               circle_product, raw_torsion, torsion, wedge_complex)

t = RatFunc.t()
z3 = zeta(3)

# A two-term complex 0 -> K -(a)-> K -> 0 has torsion 1/a.
a = 2 + t
print("two-term complex with boundary", a, "->", raw_torsion(BasedChainComplex([1, 1], [[[a]]])))

# A torus is a circle times a circle; its torsion is trivial.
T = circle_product(wedge_complex(1, [t]), z3)
print("torus:", torsion(T))

# A pair of pants times a circle: the wedge of two circles, twisted.
fibre = z3 * t
P = circle_product(wedge_complex(2, [t, z3]), fibre)
print("pants x circle:", torsion(P), " expected 1 - zeta3 t")

# The answer does not depend on the choice of lifts, only on the bases.
print("ten random lift choices agree:",
      len({raw_torsion(P, rng=random.Random(s)) for s in range(10)}) == 1)

# Changing bases multiplies the torsion by prod det(B_i)^((-1)^i). Here the
# degree-0 basis vector is scaled by 3 and a shear mixes in t in degree 1.
changes = [[[3]],
           [[1, 0, 0], [0, 1, 0], [0, t, 1]],
           [[1, 0], [2, 1]]]
new = apply_base_change(P, changes)
print("base change factor:", base_change_factor(changes))
print("new torsion / old torsion:", raw_torsion(new) / raw_torsion(P))
