"""Shared problem encodings for the search kernels.

Both backends (compiled and pure) consume the same flat integer arrays, so
the expensive combinatorial precomputation lives here and is done once per
problem shape.

Encodings
---------
Coboundary search: find ``h`` with ``h[0] = 0`` and, for all nonzero a, b,
``h[a] + h[b] - h[a+b] == diff(a, b)`` in an index-encoded target group.
The constraint list stores triples ``(a, b, ab)`` grouped by the level
``max(a, b, ab)``, so depth-first search over ``h[1..]`` can check every
constraint the moment its last slot is assigned.

Cocycle counting: the unknowns are the strict upper-triangle-with-diagonal
entries f(a, b), 1 <= a <= b, of a normalized symmetric table with values in
Z/n.  The cocycle identity over all element triples yields homogeneous linear
constraints; each is attached to its largest unknown.  Where a constraint has
a unit coefficient on its largest unknown the value is forced, so branching
happens only on genuinely free entries.
"""

from math import gcd


def coboundary_constraints(q_add, q_size):
    """Constraint triples (a, b, ab) for delta-h equations, grouped by level.

    Returns (cons, offsets): cons is a flat list of triples; constraints for
    level L occupy cons[3*offsets[L] : 3*offsets[L+1]].
    """
    by_level = [[] for _ in range(q_size)]
    for a in range(1, q_size):
        for b in range(a, q_size):
            ab = q_add[a * q_size + b]
            level = max(a, b, ab)
            by_level[level].append((a, b, ab))
    cons = []
    offsets = [0]
    for level in range(q_size):
        for triple in by_level[level]:
            cons.extend(triple)
        offsets.append(len(cons) // 3)
    return cons, offsets


def _pair_index(q_size):
    """Map (a, b) with 1 <= a <= b < q_size to a dense unknown index."""
    index = {}
    for a in range(1, q_size):
        for b in range(a, q_size):
            index[(a, b)] = len(index)
    return index


def cocycle_system(q_add, q_size, n):
    """Leveled constraint system for normalized symmetric Z/n cocycle tables.

    Returns a dict of flat integer lists:
      nunk            number of unknowns
      kinds[L]        1 if unknown L is forced by a solver constraint
      sol_inv[L]      modular inverse used by the solver at level L
      sol_toff, sol_terms   solver right-hand-side terms (idx, coeff pairs)
      chk_coff, chk_toff, chk_terms   leveled check constraints
    """
    pidx = _pair_index(q_size)
    nunk = len(pidx)

    def term(x, y):
        if x == 0 or y == 0:
            return None
        return pidx[(x, y) if x <= y else (y, x)]

    seen = set()
    constraints = []  # (level, ((idx, coeff), ...))
    for a in range(1, q_size):
        for b in range(1, q_size):
            ab = q_add[a * q_size + b]
            for c in range(1, q_size):
                bc = q_add[b * q_size + c]
                coeffs = {}
                for idx, sign in (
                    (term(a, b), 1),
                    (term(ab, c), 1),
                    (term(b, c), -1),
                    (term(a, bc), -1),
                ):
                    if idx is not None:
                        coeffs[idx] = coeffs.get(idx, 0) + sign
                items = tuple(
                    (idx, coeff % n) for idx, coeff in sorted(coeffs.items()) if coeff % n
                )
                if not items:
                    continue
                negated = tuple((idx, (-coeff) % n) for idx, coeff in items)
                key = min(items, negated)
                if key in seen:
                    continue
                seen.add(key)
                constraints.append((max(idx for idx, _ in items), items))

    by_level = [[] for _ in range(nunk)]
    for level, items in constraints:
        by_level[level].append(items)

    kinds = [0] * nunk
    sol_inv = [0] * nunk
    sol_toff = [0]
    sol_terms = []
    chk_coff = [0]
    chk_toff = [0]
    chk_terms = []
    for level in range(nunk):
        solver = None
        for items in by_level[level]:
            lead = [c for idx, c in items if idx == level]
            if len(lead) == 1 and gcd(lead[0], n) == 1:
                solver = items
                break
        if solver is not None:
            kinds[level] = 1
            lead = next(c for idx, c in solver if idx == level)
            sol_inv[level] = (-pow(lead, -1, n)) % n
            for idx, coeff in solver:
                if idx != level:
                    sol_terms.extend((idx, coeff))
        sol_toff.append(len(sol_terms) // 2)
        for items in by_level[level]:
            if items is solver:
                continue
            for idx, coeff in items:
                chk_terms.extend((idx, coeff))
            chk_toff.append(len(chk_terms) // 2)
        chk_coff.append(len(chk_toff) - 1)

    return {
        "nunk": nunk,
        "kinds": kinds,
        "sol_inv": sol_inv,
        "sol_toff": sol_toff,
        "sol_terms": sol_terms,
        "chk_coff": chk_coff,
        "chk_toff": chk_toff,
        "chk_terms": chk_terms,
    }
