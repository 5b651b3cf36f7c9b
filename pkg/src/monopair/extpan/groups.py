"""Finite abelian groups as explicit element arithmetic.

Two concrete kinds are used: direct sums of cyclic groups presented by a
factor list (elements are integer tuples reduced componentwise), and twisted
groups built on pairs (r, p) whose addition is corrected by a symmetric
2-cocycle table; the latter realize the middle groups of extensions without
ever choosing a splitting.

For the brute-force machinery every group exposes a cached index view
(``ops()``) encoding elements as 0-based indices with dense addition and
negation tables; index 0 is always the zero element and the element order is
deterministic, so everything downstream is reproducible.
"""

from itertools import product

from ..errors import InputFormatError


class GroupOps:
    """Index-encoded view of a finite abelian group."""

    def __init__(self, elems, add_fn, neg_fn):
        self.elems = tuple(elems)
        self.n = len(self.elems)
        self.index = {e: i for i, e in enumerate(self.elems)}
        self.add = [
            [self.index[add_fn(a, b)] for b in self.elems] for a in self.elems
        ]
        self.neg = [self.index[neg_fn(a)] for a in self.elems]
        self._coset_reps = {}
        self._multiples = {}

    def sub(self, i, j):
        return self.add[i][self.neg[j]]

    def scalar(self, k, i):
        out = 0
        if k < 0:
            k, i = -k, self.neg[i]
        row = i
        for _ in range(k):
            out = self.add[out][row]
        return out

    def multiples_subgroup(self, m):
        """Sorted indices of the subgroup of m-th multiples."""
        if m not in self._multiples:
            self._multiples[m] = tuple(
                sorted({self.scalar(m, i) for i in range(self.n)})
            )
        return self._multiples[m]

    def coset_table(self, m):
        """Canonical representative (least index) of i + m*G for every i."""
        if m not in self._coset_reps:
            sub = self.multiples_subgroup(m)
            self._coset_reps[m] = tuple(
                min(self.add[i][s] for s in sub) for i in range(self.n)
            )
        return self._coset_reps[m]

    def coset_transversal(self, m):
        """Canonical representatives of G / m*G, in increasing index order."""
        reps = sorted(set(self.coset_table(m)))
        return tuple(reps)

    def elements_killed_by(self, m):
        """Indices of all x with m*x = 0, in increasing order."""
        return tuple(i for i in range(self.n) if self.scalar(m, i) == 0)

    def solve_scalar(self, m, target):
        """Least index x with m*x == target, or None."""
        for i in range(self.n):
            if self.scalar(m, i) == target:
                return i
        return None


class FinAbGroup:
    """Direct sum of cyclic groups Z/m_i, elements as reduced integer tuples."""

    def __init__(self, factors):
        factors = tuple(int(m) for m in factors)
        if any(m < 2 for m in factors):
            raise InputFormatError("group factors must all be >= 2, got %r" % (factors,))
        self.factors = factors
        self._ops = None

    @property
    def order(self):
        n = 1
        for m in self.factors:
            n *= m
        return n

    @property
    def is_trivial(self):
        return not self.factors

    def elements(self):
        return tuple(product(*(range(m) for m in self.factors)))

    def zero(self):
        return (0,) * len(self.factors)

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % m for x, m in zip(a, self.factors))

    def generators(self):
        """Unit tuple generating each cyclic factor."""
        gens = []
        for i in range(len(self.factors)):
            gens.append(tuple(1 if j == i else 0 for j in range(len(self.factors))))
        return tuple(gens)

    def ops(self):
        if self._ops is None:
            self._ops = GroupOps(self.elements(), self.add, self.neg)
        return self._ops

    def key(self):
        return ("fin", self.factors)

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if not self.factors:
            return "FinAbGroup(trivial)"
        return "FinAbGroup(%s)" % ",".join(str(m) for m in self.factors)


class TwistedGroup:
    """Pairs (r, p) with addition twisted by a symmetric cocycle on r.

    This is the middle group of the extension of ``base`` (the quotient R) by
    ``fiber`` (the subgroup P) classified by the given table: projection drops
    the p component, inclusion plants p over r = 0.
    """

    def __init__(self, base, fiber, table_matrix):
        self.base = base
        self.fiber = fiber
        # table_matrix: |R| x |R| matrix of fiber element indices.
        self.table = tuple(tuple(row) for row in table_matrix)
        self._ops = None

    @property
    def order(self):
        return self.base.order * self.fiber.order

    def elements(self):
        relems = self.base.elements()
        pelems = self.fiber.elements()
        return tuple((r, p) for r in relems for p in pelems)

    def zero(self):
        return (self.base.zero(), self.fiber.zero())

    def _twist(self, r1, r2):
        rops = self.base.ops()
        pelems = self.fiber.elements()
        return pelems[self.table[rops.index[r1]][rops.index[r2]]]

    def add(self, a, b):
        r = self.base.add(a[0], b[0])
        p = self.fiber.add(self.fiber.add(a[1], b[1]), self._twist(a[0], b[0]))
        return (r, p)

    def neg(self, a):
        nr = self.base.neg(a[0])
        # (r,p) + (-r, x) = (0, p + x + f(r,-r)); solve x.
        p = self.fiber.neg(self.fiber.add(a[1], self._twist(a[0], nr)))
        return (nr, p)

    def ops(self):
        if self._ops is None:
            self._ops = GroupOps(self.elements(), self.add, self.neg)
        return self._ops

    def project_table(self):
        """Element index -> base element index."""
        rops = self.base.ops()
        return tuple(rops.index[e[0]] for e in self.elements())

    def include_table(self):
        """Fiber element index -> element index."""
        ops = self.ops()
        return tuple(
            ops.index[(self.base.zero(), p)] for p in self.fiber.elements()
        )

    def key(self):
        return ("twisted", self.base.key(), self.fiber.key(), self.table)

    def __eq__(self, other):
        return isinstance(other, TwistedGroup) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "TwistedGroup(base=%r, fiber=%r)" % (self.base, self.fiber)


def homomorphisms(source, target_ops, target_killed=None):
    """All homomorphisms from a factor-presented group into an indexed group.

    Each is returned as a tuple mapping source element index -> target element
    index.  A homomorphism is determined by generator images of compatible
    order, assembled through the normal form of each source element.
    """
    factors = source.factors
    elems = source.elements()
    if not factors:
        return ((0,),)
    ops = target_ops
    candidate_images = []
    for m in factors:
        if target_killed is not None and m in target_killed:
            candidate_images.append(target_killed[m])
        else:
            candidate_images.append(ops.elements_killed_by(m))
    homs = []
    for images in product(*candidate_images):
        table = []
        for e in elems:
            acc = 0
            for a, img in zip(e, images):
                acc = ops.add[acc][ops.scalar(a, img)]
            table.append(acc)
        homs.append(tuple(table))
    return tuple(homs)


def parse_group_spec(spec):
    """Group from a comma-separated factor list, e.g. ``2,4`` = Z/2 + Z/4.

    Factors equal to 1 are dropped (so ``1`` denotes the trivial group);
    factors <= 0 are rejected.
    """
    text = spec.strip()
    if not text:
        raise InputFormatError("empty group spec")
    factors = []
    for part in text.split(","):
        part = part.strip()
        try:
            m = int(part)
        except ValueError:
            raise InputFormatError("group spec %r: %r is not an integer" % (spec, part))
        if m <= 0:
            raise InputFormatError(
                "group spec %r: factor %d must be positive (use 1 for the trivial group)"
                % (spec, m)
            )
        if m > 1:
            factors.append(m)
    return FinAbGroup(tuple(factors))
