"""Curve validation, Betti numbers, and the deterministic cycle basis."""

import random

import pytest

from conftest import dumbbell_curve, loop_curve, path_curve, theta_curve
from monopair.errors import InputFormatError, InvalidCurveError
from monopair.graphs import (
    CycleBasis,
    Edge,
    MonoidVector,
    TropicalCurve,
    betti_number,
    boundary_matrix,
    curve_from_dict,
    curve_to_dict,
    cycle_basis,
    validate,
)
from monopair.intlinalg import hermite_normal_form, smith_divisors
from monopair.randomgen import random_curve


def kernel_member_oracle(curve, row):
    """Brute-force boundary check: the chain must cancel at every vertex."""
    totals = {vid: 0 for vid, _ in curve.vertices}
    for coeff, edge in zip(row, curve.edges):
        totals[edge.dst] += coeff
        totals[edge.src] -= coeff
    return all(v == 0 for v in totals.values())


def test_validate_examples():
    empty = TropicalCurve(base_rank=1, vertices=(("v0", 0),), edges=())
    assert validate(empty) == []

    bad_ref = TropicalCurve(
        base_rank=1,
        vertices=(("v0", 0),),
        edges=(Edge("e0", "v0", "v9", MonoidVector((1,))),),
    )
    violations = validate(bad_ref)
    assert len(violations) == 1 and "v9" in violations[0]

    zero_len = TropicalCurve(
        base_rank=2,
        vertices=(("v0", 0),),
        edges=(Edge("e0", "v0", "v0", MonoidVector((0, 0))),),
    )
    violations = validate(zero_len)
    assert len(violations) == 1 and "e0" in violations[0]


def test_validate_more_violations():
    curve = TropicalCurve(
        base_rank=1,
        vertices=(("v0", -1), ("v0", 0)),
        edges=(
            Edge("e0", "v0", "v0", MonoidVector((1, 2))),
            Edge("e0", "v0", "v1", MonoidVector((-1,))),
        ),
    )
    violations = validate(curve)
    assert any("duplicate" in v and "v0" in v for v in violations)
    assert any("genus" in v for v in violations)
    assert any("coordinates" in v for v in violations)
    assert any("v1" in v for v in violations)
    assert any("monoid" in v for v in violations)


def test_betti_examples():
    assert betti_number(loop_curve()) == 1
    assert betti_number(theta_curve()) == 2
    assert betti_number(path_curve()) == 0
    with pytest.raises(InvalidCurveError):
        betti_number(
            TropicalCurve(
                base_rank=1,
                vertices=(),
                edges=(Edge("e0", "a", "b", MonoidVector((1,))),),
            )
        )


def test_betti_disconnected():
    two_loops = TropicalCurve(
        base_rank=1,
        vertices=(("u", 0), ("v", 0)),
        edges=(
            Edge("e0", "u", "u", MonoidVector((1,))),
            Edge("e1", "v", "v", MonoidVector((1,))),
        ),
    )
    assert betti_number(two_loops) == 2


def test_cycle_basis_loop():
    assert cycle_basis(loop_curve()).matrix == ((1,),)


def test_cycle_basis_theta():
    basis = cycle_basis(theta_curve())
    assert basis.matrix == ((-1, 1, 0), (-1, 0, 1))
    # Oracle: rows kill the boundary map and span its kernel primitively.
    curve = theta_curve()
    for row in basis.matrix:
        assert kernel_member_oracle(curve, row)
    assert smith_divisors([list(r) for r in basis.matrix]) == [1, 1]


def test_cycle_basis_path_empty():
    basis = cycle_basis(path_curve())
    assert basis.matrix == ()
    assert basis.h == 0


def test_cycle_basis_dumbbell_skips_bridge():
    basis = cycle_basis(dumbbell_curve())
    # Fundamental cycles are the two self-loops; bridge column stays zero.
    assert basis.matrix == ((1, 0, 0), (0, 1, 0))


def test_cycle_basis_random_sweep():
    rng = random.Random(0)
    for _ in range(200):
        curve = random_curve(rng)
        basis = cycle_basis(curve)
        h = betti_number(curve)
        assert len(basis.matrix) == h
        for row in basis.matrix:
            assert kernel_member_oracle(curve, row)
        if h:
            assert smith_divisors([list(r) for r in basis.matrix]) == [1] * h
        assert cycle_basis(curve).matrix == basis.matrix


def test_cycle_basis_orientation_reversal_same_lattice():
    rng = random.Random(5)
    for _ in range(25):
        curve = random_curve(rng)
        basis = cycle_basis(curve)
        if not basis.matrix:
            continue
        j = rng.randrange(len(curve.edges))
        flipped_edges = list(curve.edges)
        e = flipped_edges[j]
        flipped_edges[j] = Edge(e.id, e.dst, e.src, e.length)
        flipped = TropicalCurve(curve.base_rank, curve.vertices, tuple(flipped_edges))
        flipped_basis = cycle_basis(flipped)
        negated = [
            [(-v if k == j else v) for k, v in enumerate(row)] for row in basis.matrix
        ]
        assert hermite_normal_form(negated) == hermite_normal_form(
            [list(r) for r in flipped_basis.matrix]
        )


def test_cycle_basis_type_rejects_bad_rows():
    curve = theta_curve()
    with pytest.raises(ValueError):
        CycleBasis(curve=curve, matrix=((1, 0, 0), (0, 1, 0)))  # not in kernel
    with pytest.raises(ValueError):
        CycleBasis(curve=curve, matrix=((-1, 1, 0),))  # wrong row count
    with pytest.raises(ValueError):
        # Spans only an index-2 sublattice.
        CycleBasis(curve=curve, matrix=((-2, 2, 0), (-1, 0, 1)))


def test_boundary_matrix_shape():
    curve = theta_curve()
    boundary = boundary_matrix(curve)
    assert boundary == [[-1, -1, -1], [1, 1, 1]]


def test_curve_json_round_trip():
    curve = dumbbell_curve(2, 5, 7)
    again = curve_from_dict(curve_to_dict(curve))
    assert again == curve


def test_curve_json_rejects_unknown_and_missing_keys():
    good = curve_to_dict(loop_curve())
    bad = dict(good)
    bad["extra"] = 1
    with pytest.raises(InputFormatError, match="extra"):
        curve_from_dict(bad)
    bad = dict(good)
    del bad["edges"]
    with pytest.raises(InputFormatError, match="edges"):
        curve_from_dict(bad)
    bad = dict(good)
    bad["vertices"] = [{"id": "v0", "genus": 0, "color": "red"}]
    with pytest.raises(InputFormatError, match="color"):
        curve_from_dict(bad)
    bad = dict(good)
    bad["edges"] = [{"id": "e0", "src": "v0", "dst": "v0", "length": [1], "weight": 2}]
    with pytest.raises(InputFormatError, match="weight"):
        curve_from_dict(bad)
    bad = dict(good)
    bad["edges"] = [{"id": "e0", "src": "v0", "dst": "v0", "length": [True]}]
    with pytest.raises(InputFormatError, match="length"):
        curve_from_dict(bad)


def test_monoid_vector_arithmetic():
    a = MonoidVector((1, -2))
    b = MonoidVector((3, 5))
    assert (a + b).coords == (4, 3)
    assert (a - b).coords == (-2, -7)
    assert (-a).coords == (-1, 2)
    assert a.scale(3).coords == (3, -6)
    assert b.evaluate([2, 1]) == 11
    assert not a.is_length()
    assert b.is_length()
    assert not MonoidVector((0, 0)).is_length()
    with pytest.raises(ValueError):
        a.evaluate([1])
