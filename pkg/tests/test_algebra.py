"""Connective laws checked pointwise on degree grids."""

import pytest

from fuzzytl.algebra import (
    drastic_product,
    drastic_sum,
    ops_for,
    scale,
    weak_and,
    weak_or,
)
from fuzzytl.core import Interpretation

TOL = 1e-12

ALL = (
    Interpretation.ZADEH,
    Interpretation.GODEL,
    Interpretation.LUKASIEWICZ,
    Interpretation.PRODUCT,
)

GRID = [i * 0.05 for i in range(21)]
COARSE = [i * 0.1 for i in range(11)]


def test_point_values():
    assert ops_for(Interpretation.LUKASIEWICZ).tnorm(0.6, 0.3) == 0.0
    assert ops_for(Interpretation.PRODUCT).implies(0.8, 0.4) == 0.5
    assert ops_for(Interpretation.GODEL).neg(0.3) == 0.0
    assert ops_for(Interpretation.ZADEH).implies(0.2, 0.0) == 0.8


def test_scale_is_multiplication():
    assert scale(0.8, 0.5) == 0.4
    for x in GRID:
        assert scale(x, 1.0) == x
        assert scale(x, 0.0) == 0.0


def test_drastic_bounds_pointwise():
    assert drastic_sum(0.5, 0.0) == 1.0
    assert drastic_sum(0.0, 0.0) == 0.0
    assert drastic_product(1.0, 1.0) == 1.0
    assert drastic_product(0.99, 1.0) == 0.0


@pytest.mark.parametrize("interp", ALL, ids=lambda i: i.value)
def test_boundary_values(interp):
    ops = ops_for(interp)
    assert ops.neg(0.0) == 1.0
    assert ops.neg(1.0) == 0.0
    for a in GRID:
        assert abs(ops.tnorm(a, 1.0) - a) <= TOL
        assert ops.tnorm(a, 0.0) == 0.0
        assert abs(ops.tconorm(a, 0.0) - a) <= TOL
        assert ops.tconorm(a, 1.0) == 1.0
        assert abs(ops.implies(1.0, a) - a) <= TOL
        assert ops.implies(0.0, a) == 1.0
        assert ops.implies(a, 1.0) == 1.0
        assert abs(ops.implies(a, 0.0) - ops.neg(a)) <= TOL


@pytest.mark.parametrize("interp", ALL, ids=lambda i: i.value)
def test_commutativity_on_grid(interp):
    ops = ops_for(interp)
    for a in GRID:
        for b in GRID:
            assert abs(ops.tnorm(a, b) - ops.tnorm(b, a)) <= TOL
            assert abs(ops.tconorm(a, b) - ops.tconorm(b, a)) <= TOL


@pytest.mark.parametrize("interp", ALL, ids=lambda i: i.value)
def test_associativity_on_coarse_grid(interp):
    ops = ops_for(interp)
    for a in COARSE:
        for b in COARSE:
            for c in COARSE:
                assert abs(ops.tnorm(ops.tnorm(a, b), c) - ops.tnorm(a, ops.tnorm(b, c))) <= TOL
                assert (
                    abs(ops.tconorm(ops.tconorm(a, b), c) - ops.tconorm(a, ops.tconorm(b, c)))
                    <= TOL
                )


@pytest.mark.parametrize("interp", ALL, ids=lambda i: i.value)
def test_monotonicity_on_coarse_grid(interp):
    ops = ops_for(interp)
    for a in COARSE:
        for b in COARSE:
            if a <= b:
                assert ops.neg(a) >= ops.neg(b) - TOL
            for c in COARSE:
                if b >= c:
                    assert ops.tnorm(a, b) >= ops.tnorm(a, c) - TOL
                    assert ops.tconorm(a, b) >= ops.tconorm(a, c) - TOL
                    assert ops.implies(a, b) >= ops.implies(a, c) - TOL
            assert ops.tnorm(a, b) <= a + TOL
            assert ops.tconorm(a, b) >= a - TOL
    for a in COARSE:
        for b in COARSE:
            if a <= b:
                for c in COARSE:
                    assert ops.implies(a, c) >= ops.implies(b, c) - TOL


@pytest.mark.parametrize("interp", ALL, ids=lambda i: i.value)
def test_implication_dominates_material_bound(interp):
    ops = ops_for(interp)
    for a in GRID:
        for b in GRID:
            assert ops.implies(a, b) >= max(ops.neg(a), b) - TOL


@pytest.mark.parametrize("interp", ALL, ids=lambda i: i.value)
def test_drastic_sandwich_on_grid(interp):
    ops = ops_for(interp)
    for a in GRID:
        for b in GRID:
            assert max(a, b) <= ops.tconorm(a, b) + TOL
            assert ops.tconorm(a, b) <= drastic_sum(a, b) + TOL
            assert drastic_product(a, b) <= ops.tnorm(a, b) + TOL
            assert ops.tnorm(a, b) <= min(a, b) + TOL


@pytest.mark.parametrize("interp", ALL, ids=lambda i: i.value)
def test_weak_connectives_are_lattice_ops(interp):
    """The defining formulas land exactly on min and max."""
    for a in GRID:
        for b in GRID:
            assert abs(weak_and(interp, a, b) - min(a, b)) <= TOL
            assert abs(weak_or(interp, a, b) - max(a, b)) <= TOL
        assert abs(weak_and(interp, a, a) - a) <= TOL


def test_weak_and_worked_values():
    assert weak_and(Interpretation.GODEL, 0.3, 0.7) == 0.3
    assert abs(weak_and(Interpretation.LUKASIEWICZ, 0.6, 0.2) - 0.2) <= TOL


@pytest.mark.parametrize(
    "interp", [Interpretation.GODEL, Interpretation.PRODUCT], ids=lambda i: i.value
)
def test_residuum_adjunction(interp):
    """tnorm(a, c) <= b exactly when c <= implies(a, b)."""
    ops = ops_for(interp)
    for a in COARSE:
        for b in COARSE:
            r = ops.implies(a, b)
            for c in COARSE:
                left = ops.tnorm(a, c) <= b + TOL
                right = c <= r + TOL
                assert left == right, (interp, a, b, c)
