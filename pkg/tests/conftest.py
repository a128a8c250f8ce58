import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from graphnorm.graph import Block, DecoratedGraph, TorusGluing, family_p  # noqa: E402

# Hand-written presentation of H_1 for two pairs of pants glued by three
# shears [[1, 0], [1, 1]]. Columns: B1.d0, B1.d1, B1.theta, B2.d0, B2.d1,
# B2.theta, and two crossing loops. The third boundary circle of each block
# is minus the sum of the other two.
P111_PRESENTATION = [
    [-1, 0, -1, 0, 0, 1, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0, 0],
    [0, -1, -1, 0, 0, 1, 0, 0],
    [0, -1, 0, 0, 1, 0, 0, 0],
    [1, 1, -1, 0, 0, 1, 0, 0],
    [1, 1, 0, -1, -1, 0, 0, 0],
]


@pytest.fixture
def p111():
    return family_p(1, 1, 1)


@pytest.fixture
def self_pasted():
    """One genus-1 block with two boundary circles glued to each other."""
    return DecoratedGraph((Block("A", 1, 2),),
                          (TorusGluing("T", ("A", 0), ("A", 1), ((1, 0), (1, 1))),))
