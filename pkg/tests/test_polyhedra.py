from fractions import Fraction as F

from tropibound._polyhedra import (
    cone_nonzero_point,
    feasible_point,
    polyhedron_dimension,
)


def ineq(coeffs, rhs, strict=False):
    return (tuple(F(c) for c in coeffs), F(rhs), strict)


def eq(coeffs, rhs):
    return (tuple(F(c) for c in coeffs), F(rhs))


def satisfies(point, eqs, ineqs):
    for coeffs, rhs in eqs:
        if sum(c * x for c, x in zip(coeffs, point)) != rhs:
            return False
    for coeffs, rhs, strict in ineqs:
        lhs = sum(c * x for c, x in zip(coeffs, point))
        if lhs > rhs or (strict and lhs == rhs):
            return False
    return True


def test_triangle_feasible_and_full_dimensional():
    ineqs = [ineq([1, 1], 1), ineq([-1, 0], 0), ineq([0, -1], 0)]
    pt = feasible_point(2, [], ineqs)
    assert pt is not None and satisfies(pt, [], ineqs)
    dim, sample = polyhedron_dimension(2, [], ineqs)
    assert dim == 2
    assert satisfies(sample, [], [(c, r, True) for c, r, _ in ineqs])


def test_strict_infeasible():
    assert feasible_point(1, [], [ineq([1], 0, True), ineq([-1], 0, True)]) is None


def test_weak_pinch_is_a_point():
    ineqs = [ineq([1, 0], 0), ineq([-1, 0], 0)]
    dim, sample = polyhedron_dimension(2, [eq([1, 1], 1)], ineqs)
    assert dim == 0
    assert sample == (F(0), F(1))


def test_equalities_with_parameters():
    # x + y + z = 3, x - y = 1, z >= 0 strictly
    eqs = [eq([1, 1, 1], 3), eq([1, -1, 0], 1)]
    pt = feasible_point(3, eqs, [ineq([0, 0, -1], 0, True)])
    assert pt is not None and satisfies(pt, eqs, [])
    assert pt[2] > 0


def test_inconsistent_equalities():
    assert feasible_point(2, [eq([1, 0], 0), eq([1, 0], 1)], []) is None


def test_empty_dimension_is_minus_one():
    dim, sample = polyhedron_dimension(1, [], [ineq([1], -1), ineq([-1], -1)])
    assert dim == -1 and sample is None


def test_unbounded_strip_dimension():
    dim, _ = polyhedron_dimension(2, [], [ineq([1, 0], 1), ineq([-1, 0], 0)])
    assert dim == 2


def test_implicit_equality_detected():
    # x <= 0 and x >= 0 squeeze a line out of the plane
    dim, sample = polyhedron_dimension(2, [], [ineq([1, 0], 0), ineq([-1, 0], 0)])
    assert dim == 1
    assert sample[0] == 0


def test_cone_nonzero_points_found_and_absent():
    assert cone_nonzero_point(2, [(F(1), F(-1))], [(F(1), F(0))]) is not None
    assert cone_nonzero_point(2, [(F(1), F(0)), (F(0), F(1))], []) is None
    # pointed cone with interior: x <= 0, y <= 0
    pt = cone_nonzero_point(2, [], [(F(1), F(0)), (F(0), F(1))])
    assert pt is not None and any(x != 0 for x in pt)


def test_zero_dimensional_space():
    assert feasible_point(0, [], []) == ()
