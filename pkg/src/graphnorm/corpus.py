"""Deterministic random composite decorated graphs for testing."""

import random as _random
from math import gcd

from .graph import Block, DecoratedGraph, TorusGluing


def random_gluing(rng, max_c=3, p_unipotent=0.0):
    """Random 2x2 integer matrix of determinant +-1 with nonzero lower-left
    entry. With probability ``p_unipotent`` the result is a shear
    [[1, 0], [c, +-1]], on whose sections the torus character vanishes."""
    c = rng.choice([k for k in range(-max_c, max_c + 1) if k])
    if rng.random() < p_unipotent:
        return ((1, 0), (c, rng.choice((1, -1))))
    while True:
        a = rng.randint(-2, 2)
        if gcd(a, c) == 1:
            break
    # a*d - b*c = 1
    _, x, y = _egcd(a, c)
    d, b = x, -y
    t = rng.randint(-1, 1)
    b, d = b + t * a, d + t * c
    if rng.random() < 0.5:
        b, d = -b, -d
    return ((a, b), (c, d))


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def random_graph(n_blocks, rng=None, extra_edges=None, max_genus_bump=1, max_c=3,
                 p_unipotent=0.0):
    """A connected, reduced decorated graph whose blocks all have negative
    Euler characteristic."""
    if n_blocks < 1:
        raise ValueError("need at least one block")
    rng = rng if isinstance(rng, _random.Random) else _random.Random(rng)
    edges = [(rng.randrange(i), i) for i in range(1, n_blocks)]
    if extra_edges is None:
        extra_edges = rng.randint(0 if n_blocks > 1 else 1, 2)
    for _ in range(extra_edges):
        edges.append((rng.randrange(n_blocks), rng.randrange(n_blocks)))
    slots = [[] for _ in range(n_blocks)]
    for k, (u, v) in enumerate(edges):
        slots[u].append((k, 0))
        slots[v].append((k, 1))
    blocks = []
    for i, s in enumerate(slots):
        rng.shuffle(s)
        b = len(s)
        if b == 0:
            raise AssertionError("tree edges reach every block")
        genus = (1 if b <= 2 else 0) + rng.randint(0, max_genus_bump)
        blocks.append(Block("B%d" % i, genus, b))
    ends = {}
    for i, s in enumerate(slots):
        for idx, (k, side) in enumerate(s):
            ends[(k, side)] = ("B%d" % i, idx)
    tori = []
    for k in range(len(edges)):
        plus, minus = ends[(k, 0)], ends[(k, 1)]
        if rng.random() < 0.5:
            plus, minus = minus, plus
        tori.append(TorusGluing("T%d" % k, plus, minus, random_gluing(rng, max_c, p_unipotent)))
    return DecoratedGraph(tuple(blocks), tuple(tori))


def corpus(n_blocks, seed, count=1, **kwargs):
    rng = _random.Random(seed)
    return [random_graph(n_blocks, rng, **kwargs) for _ in range(count)]
