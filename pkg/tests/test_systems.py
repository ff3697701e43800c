import random
from fractions import Fraction

import pytest

from tropibound.rational import RationalMatrix, kernel_basis, rank, vector
from tropibound.systems import (
    ComparisonViolation,
    CRNModel,
    SystemError_,
    VerticalSystem,
    assemble_crn,
    bound,
)


def test_vertical_system_validates_shapes(running_N):
    with pytest.raises(SystemError_):
        VerticalSystem(running_N, RationalMatrix.identity(4), (0, 0, 0, 0))
    with pytest.raises(SystemError_):
        VerticalSystem(
            running_N,
            RationalMatrix.from_rows([["1/2", 0, 0, 0, 0], [0, 1, 0, 0, 0]]),
            (0,) * 5,
        )


def test_assemble_crn_golden_shapes(hhk_model):
    vs = assemble_crn(hhk_model)
    assert (vs.C.rows, vs.C.cols) == (8, 13)
    assert (vs.A.rows, vs.A.cols) == (6, 13)
    assert rank(vs.C) == 6
    assert rank(vs.A) == 6
    assert vs.h == vector([7, -6, -2, -3, -3, 3, 0, 0, 0, 0, 0, 0, 0])
    # conservation block sits against the totals column
    assert vs.C[6, 12] == -10 and vs.C[7, 12] == -20
    assert vs.C[6, 6] == 1 and vs.C[7, 10] == 1


def test_assemble_crn_kernel_dimension(hhk_model):
    vs = assemble_crn(hhk_model)
    r_s = hhk_model.N_stoich.cols
    n_s = hhk_model.N_stoich.rows
    WT = RationalMatrix.from_rows(
        [list(hhk_model.W.row(i)) + [-hhk_model.T[i]] for i in range(hhk_model.W.rows)]
    )
    expected = (r_s - rank(hhk_model.N_stoich)) + (n_s + 1 - rank(WT))
    assert kernel_basis(vs.C).rows == expected


def test_assemble_crn_rejects_bad_conservation(hhk_model):
    with pytest.raises(SystemError_):
        CRNModel(
            N_stoich=hhk_model.N_stoich,
            B=hhk_model.B,
            W=RationalMatrix.from_rows([[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1]]),
            T=(10, 20),
            h=hhk_model.h,
        )


def test_assemble_crn_zero_totals(hhk_model):
    model = CRNModel(
        N_stoich=hhk_model.N_stoich,
        B=hhk_model.B,
        W=hhk_model.W,
        T=(0, 0),
        h=hhk_model.h,
    )
    vs = assemble_crn(model)
    assert all(vs.C[i, 12] == 0 for i in range(8))
    # the constant column went dead: the rank check must notice
    from tropibound.intersection import validate_inputs

    d = validate_inputs(vs.C, vs.A, vs.h)
    assert d.rank_C == 6  # W rows still independent; rank survives here


def test_single_species_toy_assembly():
    model = CRNModel(
        N_stoich=RationalMatrix.from_rows([[-1]]),
        B=RationalMatrix.from_rows([[1]]),
        W=RationalMatrix.zero(0, 1),
        T=(),
        h=(0,),
    )
    vs = assemble_crn(model)
    assert (vs.C.rows, vs.C.cols) == (1, 3)
    assert vs.C.row(0) == vector([-1, 0, 0])
    assert vs.A.row(0) == vector([1, 1, 0])


def test_bound_running_example(running_system):
    report = bound(running_system, cross_check=True)
    assert report.certified_bound == 2
    assert report.tropical.transverse
    assert report.decorated is not None and report.decorated[0] == 1
    assert report.decorated[0] < report.tropical.count


def test_bound_crn(hhk_model):
    report = bound(assemble_crn(hhk_model))
    assert report.certified_bound == 3
    assert report.tropical.transverse
    assert report.decorated is None
    assert any("repeated columns" in note for note in report.method_notes)


def test_bound_empty_fan(running_A):
    system = VerticalSystem(
        RationalMatrix.from_rows([[1, 1, 1, 1, 1], [1, 2, 3, 4, 5]]),
        running_A,
        (0, 0, 0, 0, -1),
    )
    report = bound(system)
    assert report.certified_bound == 0
    assert report.tropical.count == 0


def test_bound_reduces_stacked_coefficients(hhk_model):
    vs = assemble_crn(hhk_model)
    Ct = vs.reduced_coefficients()
    assert Ct.rows == 6
    # reduction preserved the kernel
    from tropibound.rational import row_space_equal

    assert row_space_equal(kernel_basis(Ct), kernel_basis(vs.C))


def test_bound_document(running_system):
    doc = bound(running_system).to_document()
    assert doc["certified_bound"] == 2
    assert doc["decorated"]["count"] == 1
    assert doc["decorated"]["simplices"][0]["members"] == [1, 3, 5]
    assert doc["decorated"]["simplices"][0]["kernel_vector"] == ["1", "1", "2"]


def test_decorated_le_tropical_on_random_instances():
    rng = random.Random(99)
    checked = 0
    while checked < 25:
        r = rng.randint(3, 6)
        n = rng.randint(1, min(3, r - 1))
        C = RationalMatrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(r)] for _ in range(n)]
        )
        A = RationalMatrix.from_rows(
            [[rng.randint(0, 3) for _ in range(r)] for _ in range(n)]
        )
        cols = [A.column(j) for j in range(r)]
        if C.is_zero() or rank(A) < n or rank(C) != n or len(set(cols)) != r:
            continue
        h = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(r)]
        try:
            report = bound(VerticalSystem(C, A, tuple(h)))
        except ComparisonViolation:
            pytest.fail("comparison inequality violated on a random instance")
        if report.tropical.transverse and report.decorated is not None:
            assert report.decorated[0] <= report.tropical.count
        checked += 1
