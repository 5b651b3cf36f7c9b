"""Seeded random instances for the property suites.

Everything takes an explicit ``random.Random`` so runs are reproducible; ids
are zero-padded to make lexicographic and creation order agree.
"""

from .graphs import Edge, MonoidVector, TropicalCurve
from .intlinalg import identity


def random_curve(
    rng,
    max_vertices=8,
    max_edges=16,
    length_range=(1, 5),
    base_rank=1,
    max_genus=0,
):
    """Random connected multigraph curve (self-loops and parallels allowed)."""
    nv = rng.randint(1, max_vertices)
    vertices = [("v%02d" % i, rng.randint(0, max_genus) if max_genus else 0) for i in range(nv)]
    edges = []

    def random_length():
        coords = [rng.randint(*length_range) for _ in range(base_rank)]
        return MonoidVector(tuple(coords))

    # Spanning tree first, then extra edges anywhere.
    for i in range(1, nv):
        j = rng.randrange(i)
        edges.append(("v%02d" % j, "v%02d" % i))
    extra = rng.randint(0, max_edges - (nv - 1))
    for _ in range(extra):
        a = rng.randrange(nv)
        b = rng.randrange(nv)
        edges.append(("v%02d" % a, "v%02d" % b))
    built = tuple(
        Edge(id="e%02d" % k, src=src, dst=dst, length=random_length())
        for k, (src, dst) in enumerate(edges)
    )
    return TropicalCurve(base_rank=base_rank, vertices=tuple(vertices), edges=built)


def random_unimodular(rng, h, steps=None):
    """Product of random elementary row operations; determinant is +-1."""
    mat = identity(h)
    if h == 0:
        return mat
    if steps is None:
        steps = 3 * h + 2
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(h)
        j = rng.randrange(h)
        if kind == 0 and i != j:
            k = rng.choice([-2, -1, 1, 2])
            mat[i] = [x + k * y for x, y in zip(mat[i], mat[j])]
        elif kind == 1 and i != j:
            mat[i], mat[j] = mat[j], mat[i]
        elif kind == 2:
            mat[i] = [-x for x in mat[i]]
    return mat
