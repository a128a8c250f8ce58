"""Acceptance criteria, one test per criterion, all exact.

Each test prints a single ``CRITERION <n>: PASS`` or ``FAIL`` line.
"""

import os
import random
from contextlib import contextmanager
from fractions import Fraction
from itertools import product
from math import gcd

import pytest

from graphnorm.abelian import FgAbelianGroup, IntMatrix, invariant_factors
from graphnorm.bundle import (SWFunction, baldridge_sum, limit_certificate, separating_k,
                              twist_euler)
from graphnorm.corpus import corpus, random_gluing
from graphnorm.covers import (ObstructionReport, alpha_on_torus, cover_genus, cyclic_cover,
                              eliminate_self_pastings, glue_character)
from graphnorm.field import RatFunc, TorsionValue, w_equal, width, zeta
from graphnorm.graph import (CharacterModD, CohClass, TorusGluing, eval_class, family_p,
                             homology_h1, validate_structure)
from graphnorm.norms import (default_modulus, thurston_norm, torsion_norm, torsion_product,
                             torsion_via_engine)
from graphnorm.torsion import (apply_base_change, base_change_factor, circle_product,
                               raw_torsion, torsion, wedge_complex)
from conftest import P111_PRESENTATION
from factories import (admissible_pair, random_acyclic, random_change,
                       random_scalar)
from oracles import invariant_factors_by_minors

t = RatFunc.t()


@contextmanager
def criterion(capsys, label):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print("\nCRITERION %s: FAIL" % label)
        raise
    with capsys.disabled():
        print("\nCRITERION %s: PASS" % label)


def shared_corpus():
    graphs = []
    for n in (2, 3, 4, 5):
        graphs += corpus(n, seed=100 + n, count=30, p_unipotent=0.5)
    return graphs


def test_criterion_1_torsion_engine(capsys):
    with criterion(capsys, "1"):
        rng = random.Random(2024)
        for _ in range(100):
            r, dims, scalars, C = random_acyclic(rng, max_top=3, max_dim=6)
            B = [random_change(d, rng) for d in dims]
            new = apply_base_change(C, B)
            ref = raw_torsion(new)
            for seed in range(10):
                assert w_equal(raw_torsion(new, rng=random.Random(seed)), ref)
            # switching bases multiplies by [c/c'] exactly
            assert ref == base_change_factor(B) * raw_torsion(C)


def test_criterion_2_block_formula(capsys):
    with criterion(capsys, "2"):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 5)
            d = rng.choice([2, 3, 4, 5, 6])
            a = rng.randrange(1, d)
            s = rng.randint(-3, 3)
            u = zeta(d, a) * t ** s
            C = circle_product(wedge_complex(n, [random_scalar(rng) for _ in range(n)]), u)
            assert torsion(C, d) == TorsionValue((1 - u) ** (n - 1), d)
            if n == 1:
                assert torsion(C, d) == TorsionValue(1, d)


def test_criterion_3_product_formula(capsys):
    with criterion(capsys, "3"):
        rng = random.Random(3)
        checked = 0
        for g in shared_corpus():
            pair = admissible_pair(g, rng)
            if pair is None:
                continue
            sigma, alpha, d = pair
            assert w_equal(torsion_via_engine(g, sigma, alpha).rep,
                           torsion_product(g, sigma, alpha), d)
            checked += 1
            if checked == 60:
                break
        assert checked >= 50


def test_criterion_4_norm_equality(capsys):
    with criterion(capsys, "4"):
        rng = random.Random(3)
        checked = 0
        for g in shared_corpus():
            pair = admissible_pair(g, rng)
            if pair is None:
                continue
            sigma, alpha, d = pair
            th = thurston_norm(g, sigma)
            tn = torsion_norm(g, sigma, alpha)
            assert tn <= th
            assert th == tn == width(torsion_product(g, sigma, alpha))
            checked += 1
            if checked == 60:
                break
        assert checked >= 50


def _independent_obstructions(g, d):
    """Boundary residues recomputed from the gluing entries."""
    res = {b.id: [0] * b.boundary for b in g.blocks}
    for tor in g.tori:
        (g11, g12), (g21, g22) = tor.gluing
        r = pow(g21, -1, d) * (1 - g11) % d
        res[tor.plus[0]][tor.plus[1]] = r
        res[tor.minus[0]][tor.minus[1]] = (g12 + g22 * r) % d
    return {bid: sum(v) % d for bid, v in res.items()}


def test_criterion_5_character_theorem(capsys):
    with criterion(capsys, "5"):
        unobstructed = 0
        graphs = shared_corpus() + corpus(3, seed=55, count=60, p_unipotent=0.7)
        for g in graphs:
            moduli = {default_modulus(g)} | {x for x in (7, 11)
                                             if all(gcd(tt.c, x) == 1 for tt in g.tori)}
            for d in sorted(moduli):
                for tor in g.tori:
                    ch = alpha_on_torus(tor, d)
                    assert ch.value((1, 0)) == 1 and ch.on_minus_fibre() == 1
                obs = _independent_obstructions(g, d)
                alpha = glue_character(g, d)
                if any(obs.values()):
                    assert isinstance(alpha, ObstructionReport)
                    assert {b for b, _ in alpha.obstructed} == {b for b, v in obs.items() if v}
                    continue
                unobstructed += 1
                assert isinstance(alpha, CharacterModD)
                h1 = homology_h1(g)
                for b in g.blocks:
                    assert eval_class(alpha, h1.theta(b.id)) == 1
        rng = random.Random(1)
        for _ in range(300):
            G = random_gluing(rng, max_c=9)
            tor = TorusGluing("T", ("A", 0), ("B", 0), G)
            for d in (2, 3, 5, 7, 10, 11, 12):
                if gcd(tor.c, d) == 1:
                    ch = alpha_on_torus(tor, d)
                    assert ch.value((1, 0)) == 1 and ch.on_minus_fibre() == 1
        assert unobstructed >= 20


def _check_cover(g, cover, pat, degree):
    assert pat.preserves_intersections()
    assert cover.euler_characteristic() == degree * g.euler_characteristic()
    rep = validate_structure(cover)
    assert rep.reduced and not rep.nonnegative_chi_blocks


def test_criterion_6a_self_pastings_and_fibre_trivial_covers(capsys):
    with criterion(capsys, "6a"):
        rng = random.Random(6)
        done = covers = 0
        for g in shared_corpus() + corpus(2, seed=66, count=30, p_unipotent=0.5):
            if validate_structure(g).self_pastings:
                cover, pat = eliminate_self_pastings(g)
                _check_cover(g, cover, pat, 2)
                rep = validate_structure(cover)
                assert rep.composite and not rep.self_pastings
                done += 1
            # characters living on genus and crossing loops vanish on every
            # torus, so each torus lifts to d disjoint copies
            h1 = homology_h1(g)
            for d in (2, 3):
                vals = [rng.randrange(d) if lab.endswith(".x") or ".a" in lab else 0
                        for lab in h1.labels]
                alpha = CharacterModD(h1, d, vals)
                cover, pat = cyclic_cover(g, alpha)
                _check_cover(g, cover, pat, d)
                covers += 1
        assert done >= 10 and covers >= 100
        assert cover_genus(0, 3, 9, 3) == 1
        for gg in range(1, 4):
            for b0 in range(1, 4):
                for dd in range(1, 5):
                    for n in range(dd, 13, dd):
                        try:
                            assert cover_genus(gg, b0, n, dd) >= gg
                        except Exception as exc:
                            assert exc.__class__.__name__ == "NotRealizable"


def test_criterion_6b_glued_character_covers(capsys):
    """cyclic_cover of the glued character on P(1,1,1), d = 2, expected to
    keep every c(T) and to double the total Euler characteristic."""
    with criterion(capsys, "6b"):
        g = family_p(1, 1, 1)
        cover, pat = cyclic_cover(g, glue_character(g, 2))
        assert validate_structure(cover).composite
        assert pat.preserves_intersections(), \
            "intersections (old, new): %r" % sorted(set(pat.intersections.values()))
        assert cover.euler_characteristic() == 2 * g.euler_characteristic()


def _check_snf(rows):
    ours = [f for f in invariant_factors(IntMatrix.of(rows, len(rows[0]))) if f]
    assert ours == invariant_factors_by_minors(rows), rows


def test_criterion_7a_snf(capsys):
    with criterion(capsys, "7a"):
        R = range(-4, 5)
        for a, b, c, d in product(R, repeat=4):
            _check_snf([[a, b], [c, d]])
        for e in product(range(-1, 2), repeat=9):
            _check_snf([list(e[0:3]), list(e[3:6]), list(e[6:9])])
        rng = random.Random(77)
        for _ in range(20000):
            _check_snf([[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)])


def test_criterion_7b_snf_full_3x3_sweep(capsys):
    """All 9^9 = 387,420,489 3x3 matrices with entries in [-4, 4]. This takes
    hours, so it only runs with GRAPHNORM_FULL_SWEEP=1."""
    with criterion(capsys, "7b"):
        if os.environ.get("GRAPHNORM_FULL_SWEEP") != "1":
            pytest.fail("full 3x3 sweep over [-4, 4] not run: 387,420,489 matrices do not fit "
                        "the time budget; set GRAPHNORM_FULL_SWEEP=1 to run it")
        for e in product(range(-4, 5), repeat=9):
            _check_snf([list(e[0:3]), list(e[3:6]), list(e[6:9])])


def test_criterion_8_cancellation_pipeline(capsys):
    with criterion(capsys, "8"):
        Z2 = FgAbelianGroup(2, ())
        el = Z2.from_coordinates
        e, gamma = el([1, 0]), el([0, 1])
        cases = [SWFunction(Z2, {(0, 0): 1, (1, 0): -1})]
        rng = random.Random(8)
        for _ in range(20):
            cases.append(SWFunction(Z2, {(rng.randint(-3, 3), rng.randint(-3, 3)):
                                         rng.choice([-2, -1, 1, 2]) for _ in range(4)}))
        assert baldridge_sum(cases[0], e, el([0, 0])) == 0
        for sw in cases:
            k = separating_k(sw, e, gamma)
            f = twist_euler(e, gamma, k)
            for x, y in product(range(-6, 7), repeat=2):
                xi = el([x, y])
                hits = [p for p in sw.points() if (p - xi).multiple_of(f) is not None]
                assert len(hits) <= 1
                assert baldridge_sum(sw, f, xi) == (sw(hits[0]) if hits else 0)
        for chi in range(21):
            for rhs in range(21):
                for m in range(31):
                    cert = limit_certificate(chi, m, rhs)
                    assert (cert.verdict == "CERTIFIED") == (chi >= rhs)
                    if cert.verdict == "REFUTED":
                        k = cert.witness
                        assert chi + Fraction(m, k) < rhs


def test_criterion_9_p111_golden(capsys):
    with criterion(capsys, "9"):
        g = family_p(1, 1, 1)
        h1 = homology_h1(g)
        assert (h1.group.free_rank, tuple(h1.group.torsion_factors)) == (3, (3,))
        facs = invariant_factors_by_minors(P111_PRESENTATION)
        assert [f for f in facs if f != 1] == [3] and 8 - len(facs) == 3
        rng = random.Random(9)
        for _ in range(50):
            sigma = CohClass.random(h1, rng, bound=5)
            assert sigma.fibre("B1") == sigma.fibre("B2")
        for s in range(-6, 7):
            with pytest.raises(Exception):
                CohClass.from_fibres(h1, {"B1": s, "B2": s + 1})
            sigma = CohClass.from_fibres(h1, {"B1": s, "B2": s})
            assert thurston_norm(g, sigma) == 2 * abs(s)
            if s:
                assert torsion_norm(g, sigma, glue_character(g, 2)) == 2 * abs(s)
