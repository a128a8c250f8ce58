"""Two pairs of pants glued along three tori by the shear [[1, 0], [1, 1]].

Walks through first homology, the Thurston norm, the glued character and
the one-variable torsion, and checks that the two norms agree.

Run: python3 demos/p111_invariants.py
"""

from graphnorm.covers import glue_character
from graphnorm.graph import CohClass, family_p, homology_h1, validate_structure
from graphnorm.norms import thurston_norm, torsion_product, torsion_via_engine, verify_norm_equality

g = family_p(1, 1, 1)
print("composite:", validate_structure(g).composite)

h1 = homology_h1(g)
print("H_1 =", h1.group)
print("generators:", ", ".join(h1.labels))

# The two fibre classes differ by 3-torsion, so any integral class takes the
# same value on both.
for s in (1, 2, -3):
    sigma = CohClass.from_fibres(h1, {"B1": s, "B2": s})
    print("sigma(fibre) = %2d  Thurston norm = %d" % (s, thurston_norm(g, sigma)))

try:
    CohClass.from_fibres(h1, {"B1": 1, "B2": 2})
except Exception as exc:
    print("unequal fibre values rejected:", exc)

# A character mod 2 taking the value 1 on every fibre.
alpha = glue_character(g, 2)
print("glued character residues:", alpha.residues)

sigma = CohClass.from_fibres(h1, {"B1": 2, "B2": 2})
print("torsion (closed form):", torsion_product(g, sigma, alpha))
print("torsion (chain complexes):", torsion_via_engine(g, sigma, alpha))
print(verify_norm_equality(g, sigma, alpha).as_dict())
