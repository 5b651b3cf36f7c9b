import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from monopair.graphs import Edge, MonoidVector, TropicalCurve


def loop_curve(m=1, genus=0):
    """One vertex, one self-loop of rank-1 length (m)."""
    return TropicalCurve(
        base_rank=1,
        vertices=(("v0", genus),),
        edges=(Edge("e0", "v0", "v0", MonoidVector((m,))),),
    )


def theta_curve():
    """Two vertices joined by three parallel edges with independent generator
    lengths a, b, c (base rank 3)."""
    def unit(i):
        return MonoidVector(tuple(1 if j == i else 0 for j in range(3)))

    return TropicalCurve(
        base_rank=3,
        vertices=(("u", 0), ("v", 0)),
        edges=tuple(Edge("e%d" % i, "u", "v", unit(i)) for i in range(3)),
    )


def theta_unit_curve():
    """Theta graph with all lengths equal to the single generator."""
    one = MonoidVector((1,))
    return TropicalCurve(
        base_rank=1,
        vertices=(("u", 0), ("v", 0)),
        edges=tuple(Edge("e%d" % i, "u", "v", one) for i in range(3)),
    )


def dumbbell_curve(p=1, q=1, m=1):
    """Two self-loops of lengths p, q joined by a bridge of length m
    (independent generators, base rank 3)."""
    return TropicalCurve(
        base_rank=3,
        vertices=(("u", 0), ("v", 0)),
        edges=(
            Edge("e0", "u", "u", MonoidVector((p, 0, 0))),
            Edge("e1", "v", "v", MonoidVector((0, q, 0))),
            Edge("e2", "u", "v", MonoidVector((0, 0, m))),
        ),
    )


def path_curve():
    """Two vertices, one edge: a tree, so no cycles."""
    return TropicalCurve(
        base_rank=1,
        vertices=(("u", 0), ("v", 0)),
        edges=(Edge("e0", "u", "v", MonoidVector((1,))),),
    )
