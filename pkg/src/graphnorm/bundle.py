"""Bookkeeping for circle bundles over a graph manifold: sums of model
Seiberg-Witten values along Euler-class orbits, Euler-class twisting, and
the genus lower bound with its limit certificate.

Spin^c structures are identified with elements of H_1 after fixing a base
structure at 0; only differences and the action of the Euler class matter.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .abelian import FgAbelianGroup, GroupElement
from .errors import (CapExceeded, NonzeroAlgebraic, TorsionEuler, TorsionLoop,
                     ValidationError)
from .graph import CohClass, homology_h1
from .norms import thurston_norm, torsion_norm


class SWFunction:
    """Finitely supported integer function on an abelian group."""

    def __init__(self, group: FgAbelianGroup, support=None):
        self.group = group
        self.support = {}
        for x, v in (support or {}).items():
            if not isinstance(x, GroupElement):
                x = group.from_coordinates(x)
            if x.group != group:
                raise ValidationError("support point outside the group")
            if int(v):
                self.support[x] = self.support.get(x, 0) + int(v)
        self.support = {x: v for x, v in self.support.items() if v}

    def __call__(self, x):
        return self.support.get(x, 0)

    def points(self):
        return list(self.support)

    def to_json(self):
        return {"group": {"free_rank": self.group.free_rank,
                          "torsion": list(self.group.torsion_factors)},
                "support": [[list(x.coordinates()), v] for x, v in self.support.items()]}

    @classmethod
    def from_json(cls, doc):
        try:
            grp = doc["group"]
            group = FgAbelianGroup(int(grp["free_rank"]), tuple(grp.get("torsion", ())))
            support = {}
            for coords, value in doc["support"]:
                x = group.from_coordinates([int(c) for c in coords])
                support[x] = support.get(x, 0) + int(value)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError("bad SW function document: %s" % exc) from None
        return cls(group, support)


def baldridge_sum(sw: SWFunction, e: GroupElement, xi: GroupElement) -> int:
    """Sum of sw over the orbit xi + Z e; e must have infinite order."""
    if e.is_torsion():
        raise TorsionEuler("the Euler class is torsion")
    total = 0
    for p, v in sw.support.items():
        if (p - xi).multiple_of(e) is not None:
            total += v
    return total


def twist_euler(e: GroupElement, gamma: GroupElement, k: int) -> GroupElement:
    """Euler class after twisting the bundle k times along a loop."""
    return e + k * gamma


def _collisions(points, f):
    out = []
    for i, x in enumerate(points):
        for y in points[i + 1:]:
            l = (x - y).multiple_of(f)
            if l is not None:
                out.append((x, y, l))
    return out


def separating_k(sw: SWFunction, e: GroupElement, gamma: GroupElement, cap: int = 10 ** 4) -> int:
    """Smallest k in [1, cap] such that no two support points differ by a
    multiple of e + k gamma; twists with torsion Euler class are skipped."""
    if gamma.is_torsion():
        raise TorsionLoop("the loop class is torsion")
    if cap < 1:
        raise ValidationError("cap must be >= 1")
    pts = sw.points()
    worst = None
    for k in range(1, cap + 1):
        f = twist_euler(e, gamma, k)
        if f.is_torsion():
            continue
        hits = _collisions(pts, f)
        if not hits:
            return k
        big = max(hits, key=lambda h: abs(h[2]))
        if worst is None or abs(big[2]) > abs(worst[3]):
            worst = (k,) + big
    raise CapExceeded("no separating twist up to %d" % cap,
                      k=worst[0], multiple=worst[3], pair=(str(worst[1]), str(worst[2])))


@dataclass(frozen=True)
class BundleClass:
    """A second homology class of the bundle, recorded by its
    self-intersection and the class its pushforward defines on the base."""

    self_intersection: int
    pushforward: object


def bound_rhs(g, cls: BundleClass) -> int:
    """|sigma . sigma| + Thurston norm of the pushforward."""
    return abs(int(cls.self_intersection)) + thurston_norm(g, cls.pushforward)


def piping_bound(chi_minus: int, m: int, algebraic_intersection: int,
                 transverse_unit: bool = True) -> int:
    """Complexity after tubing away m intersection points with a fibred torus.

    With algebraic intersection 0 and all points transverse of sign +-1 the
    points pair off, so m must be even.
    """
    if algebraic_intersection:
        raise NonzeroAlgebraic("algebraic intersection is %d" % algebraic_intersection)
    if m < 0:
        raise ValidationError("m must be >= 0")
    if transverse_unit and m % 2:
        raise ValidationError("an odd number of +-1 points cannot have algebraic count 0")
    return chi_minus + m


@dataclass(frozen=True)
class Certificate:
    verdict: str
    witness: Optional[int]
    trace: tuple

    def as_dict(self):
        return {"verdict": self.verdict, "witness": self.witness,
                "trace": [{"k": k, "lhs": str(lhs), "rhs": rhs, "holds": ok}
                          for k, lhs, rhs, ok in self.trace]}


def limit_certificate(chi_candidate: int, m: int, rhs: int) -> Certificate:
    """Decide whether chi + m/k >= rhs for every k >= 1.

    For integers this is the same as chi >= rhs: once k > m the fraction
    m/k is below 1. A failure is witnessed at k = m + 1.
    """
    if m < 0 or rhs < 0:
        raise ValidationError("m and rhs must be >= 0")
    trace = []
    for k in range(1, min(m + 1, 50) + 1):
        lhs = chi_candidate + Fraction(m, k)
        trace.append((k, lhs, rhs, lhs >= rhs))
    if chi_candidate >= rhs:
        return Certificate("CERTIFIED", None, tuple(trace))
    k = m + 1
    assert chi_candidate + Fraction(m, k) < rhs
    return Certificate("REFUTED", k, tuple(trace))


def basic_pairing_max(g, sigma, alpha, d=None) -> int:
    """Largest pairing of sigma with a basic class, read off as the width of
    the twisted torsion."""
    return torsion_norm(g, sigma, alpha, d)


def sw_gate(g) -> dict:
    """The b_1 >= 3 hypothesis as a warning flag."""
    b1 = homology_h1(g).b1
    return {"b1": b1, "ok": b1 >= 3}
