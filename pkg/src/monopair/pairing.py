"""The monodromy pairing of a metrized dual graph, exactly.

On the free abelian group of oriented edges, the pairing sends a pair of
coinciding oriented edges to the edge length and everything else to zero,
extended bilinearly; restricted to the cycle space it is the tropical
intersection pairing.  Values are monoid-group vectors (signs allowed);
specializing the base generators at positive integer weights produces the
integer Gram matrices whose Smith normal form gives the component group.
"""

from dataclasses import dataclass

from .errors import DegeneratePairingError
from .graphs import MonoidVector, check_valid
from .intlinalg import (
    det,
    is_symmetric,
    leading_minors_all_positive,
    smith_divisors,
)


def edge_pairing(c1, c2, curve):
    """Bilinear pairing of two oriented-edge chains: sum of c1[e]*c2[e]*length(e)."""
    check_valid(curve)
    ne = len(curve.edges)
    if len(c1) != ne or len(c2) != ne:
        raise ValueError(
            "chain length mismatch: got %d and %d, curve has %d edges"
            % (len(c1), len(c2), ne)
        )
    total = MonoidVector.zero(curve.base_rank)
    for a, b, edge in zip(c1, c2, curve.edges):
        k = a * b
        if k:
            total = total + edge.length.scale(k)
    return total


@dataclass(frozen=True)
class PairingMatrix:
    """Symmetric Gram matrix of the pairing in a chosen cycle basis.

    Entries are monoid-group vectors; for each base generator the integer
    matrix of that coordinate is symmetric positive semidefinite.
    """

    base_rank: int
    entries: tuple  # h x h of MonoidVector
    basis: object = None  # the CycleBasis it is expressed in, when graph-derived

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        h = len(entries)
        for row in entries:
            if len(row) != h:
                raise ValueError("pairing matrix must be square")
        for i in range(h):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise ValueError("pairing matrix must be symmetric")

    @property
    def h(self):
        return len(self.entries)

    def coordinate_matrix(self, k):
        """Integer matrix of the k-th generator coordinate of every entry."""
        return [[v.coords[k] for v in row] for row in self.entries]


def pairing_matrix(curve, basis):
    """Gram matrix of the basis rows under the edge pairing."""
    check_valid(curve)
    if basis.curve != curve:
        raise ValueError("cycle basis belongs to a different curve")
    rows = basis.matrix
    h = len(rows)
    entries = [[None] * h for _ in range(h)]
    for i in range(h):
        for j in range(i + 1):
            value = edge_pairing(rows[i], rows[j], curve)
            entries[i][j] = value
            entries[j][i] = value
    return PairingMatrix(
        base_rank=curve.base_rank,
        entries=tuple(tuple(row) for row in entries),
        basis=basis,
    )


@dataclass(frozen=True)
class IntSymMatrix:
    """Symmetric integer matrix (a specialized pairing)."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if not is_symmetric([list(r) for r in entries]):
            raise ValueError("matrix is not symmetric")

    @property
    def h(self):
        return len(self.entries)

    def rows(self):
        return [list(r) for r in self.entries]

    def mod(self, n):
        return IntSymMatrix(tuple(tuple(x % n for x in row) for row in self.entries))


def specialize(pm, weights):
    """Evaluate every entry at positive integer weights, one per generator."""
    weights = [int(w) for w in weights]
    if len(weights) != pm.base_rank:
        raise ValueError(
            "expected %d weights (one per base generator), got %d"
            % (pm.base_rank, len(weights))
        )
    if any(w < 1 for w in weights):
        raise ValueError("weights must all be >= 1")
    return IntSymMatrix(
        tuple(tuple(v.evaluate(weights) for v in row) for row in pm.entries)
    )


def is_positive_definite(mat):
    """Sylvester test with exact integer minors; the empty matrix passes."""
    if not isinstance(mat, IntSymMatrix):
        mat = IntSymMatrix(tuple(tuple(row) for row in mat))
    return leading_minors_all_positive(mat.rows())


def component_group(mat):
    """Elementary divisors > 1 of a nondegenerate symmetric integer matrix.

    This is the cokernel of the induced map from the cycle lattice to its
    dual, written as a list of cyclic orders d1 | d2 | ...
    """
    if not isinstance(mat, IntSymMatrix):
        mat = IntSymMatrix(tuple(tuple(row) for row in mat))
    rows = mat.rows()
    if det(rows) == 0:
        raise DegeneratePairingError("degenerate pairing: determinant is zero")
    return [d for d in smith_divisors(rows) if d > 1]


def pairing_matrix_to_dict(pm):
    return {
        "h": pm.h,
        "base_rank": pm.base_rank,
        "entries": [[list(v.coords) for v in row] for row in pm.entries],
    }


def int_matrix_to_dict(mat):
    return {"h": mat.h, "entries": [list(row) for row in mat.entries]}
