"""Circle bundles over P(1,1,1): the genus bound, a cancelling model SW
function, and how twisting the Euler class separates its support.

Run: python3 demos/bundle_bound.py
"""

from graphnorm.abelian import FgAbelianGroup
from graphnorm.bundle import (BundleClass, SWFunction, baldridge_sum, bound_rhs,
                              limit_certificate, separating_k, twist_euler)
from graphnorm.graph import CohClass, family_p, homology_h1

g = family_p(1, 1, 1)
sigma = CohClass.from_fibres(homology_h1(g), {"B1": 1, "B2": 1})
rhs = bound_rhs(g, BundleClass(-4, sigma))
print("|sigma.sigma| + Thurston norm =", rhs)

Z2 = FgAbelianGroup(2, ())
e, gamma = Z2.from_coordinates([1, 0]), Z2.from_coordinates([0, 1])
sw = SWFunction(Z2, {(0, 0): 1, (1, 0): -1})
print("orbit sum through 0 before twisting:", baldridge_sum(sw, e, Z2.zero()))

k = separating_k(sw, e, gamma)
f = twist_euler(e, gamma, k)
print("twist k =", k, "gives Euler class", f)
for x in sw.points():
    print("  orbit sum through", x, "=", baldridge_sum(sw, f, x))

for chi in (rhs - 1, rhs):
    cert = limit_certificate(chi, 3, rhs)
    print("candidate", chi, "->", cert.verdict, "witness", cert.witness)
