import random
from pathlib import Path

import pytest

from gogmagog.triangles import GtTriangle

FIXTURES = Path(__file__).parent / "fixtures"


def tri(*rows_top_down):
    """Shorthand: tri((1,2,3),(1,3),(2,)) builds the triangle top-down."""
    return GtTriangle(tuple(tuple(r) for r in rows_top_down))


def gt_triangles(n, bound):
    """Every Gelfand-Tsetlin triangle of the given size and entry bound."""
    from gogmagog.enumeration import _generate_gt

    yield from _generate_gt(n, bound)


def random_gt(rng: random.Random, n: int, bound: int) -> GtTriangle:
    """One uniform-ish triangle: random top row, then random interlacing."""
    top = sorted(rng.randint(1, bound) for _ in range(n))
    rows = [tuple(top)]
    for i in range(n - 1, 0, -1):
        above = rows[-1]
        rows.append(tuple(rng.randint(above[j], above[j + 1]) for j in range(i)))
    return GtTriangle(tuple(rows))


@pytest.fixture
def rng():
    return random.Random(0xA5317)
