import random
from itertools import combinations

import pytest
import sympy

from tropibound.matroid import (
    Flat,
    FlagOfFlats,
    MatroidError,
    OrientedMatroid,
    SignedCircuit,
    all_flats,
    circuits_via_subsets,
    closure,
    initial_circuit,
    maximal_flags,
    realize_from_kernel,
)
from tropibound.rational import RationalMatrix, kernel_basis

RUNNING_CIRCUITS = {
    SignedCircuit((3,), (1, 2)),
    SignedCircuit((5,), (1, 4)),
    SignedCircuit((2, 5), (3, 4)),
    SignedCircuit((1, 2), (3,)),
    SignedCircuit((1, 4), (5,)),
    SignedCircuit((3, 4), (2, 5)),
}


def circuits_by_sympy(G: RationalMatrix) -> set[SignedCircuit]:
    """Independent oracle: scan every column subset for a unique-up-to-scale
    dependency using sympy's nullspace."""
    S = sympy.Matrix([[sympy.Rational(x) for x in G.row(i)] for i in range(G.rows)])
    r = S.rank()
    out: set[SignedCircuit] = set()
    supports: list[set[int]] = []
    for size in range(1, min(G.cols, r + 1) + 1):
        for cols in combinations(range(G.cols), size):
            if any(s < set(cols) for s in supports):
                continue
            null = S[:, list(cols)].nullspace()
            if len(null) != 1:
                continue
            lam = null[0]
            if any(lam[i] == 0 for i in range(size)):
                continue
            pos = tuple(cols[i] + 1 for i in range(size) if lam[i] > 0)
            neg = tuple(cols[i] + 1 for i in range(size) if lam[i] < 0)
            c = SignedCircuit(pos, neg)
            out |= {c, c.negated()}
            supports.append(set(cols))
    return out


def test_signed_circuit_normalizes_and_validates():
    c = SignedCircuit((3, 1), (2,))
    assert c.positive == (1, 3)
    with pytest.raises(MatroidError):
        SignedCircuit((1,), (1, 2))
    with pytest.raises(MatroidError):
        SignedCircuit((), ())


def test_realize_running_example(running_N):
    M = realize_from_kernel(running_N)
    assert set(M.circuits) == RUNNING_CIRCUITS
    assert M.rank == 3


def test_realize_two_element_dependency():
    M = realize_from_kernel(RationalMatrix.from_rows([[1, -1]]))
    assert set(M.circuits) == {SignedCircuit((1,), (2,)), SignedCircuit((2,), (1,))}


def test_realize_rejects_zero_matrix():
    with pytest.raises(MatroidError):
        realize_from_kernel(RationalMatrix.zero(2, 3))


def test_circuits_random_against_sympy_oracle():
    rng = random.Random(11)
    for _ in range(8):
        C = RationalMatrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(4)] for _ in range(2)]
        )
        if C.is_zero():
            continue
        M = realize_from_kernel(C)
        assert set(M.circuits) == circuits_by_sympy(kernel_basis(C))


def test_circuits_via_subsets_supports(running_N):
    G = kernel_basis(running_N)
    circuits = circuits_via_subsets(G)
    supports = {tuple(sorted(c.support)) for c in circuits}
    assert supports == {(1, 2, 3), (1, 4, 5), (2, 3, 4, 5)}


def test_circuits_via_subsets_free_matroid():
    assert circuits_via_subsets(RationalMatrix.identity(3)) == []


def test_four_element_relation_signs(running_N):
    # the unique relation on columns {2,3,4,5} of the kernel span puts
    # {3,4} against {2,5}
    circuits = circuits_via_subsets(kernel_basis(running_N))
    four = [c for c in circuits if c.support == frozenset({2, 3, 4, 5})]
    assert SignedCircuit((3, 4), (2, 5)) in four
    assert SignedCircuit((2, 5), (3, 4)) in four


def test_realize_agrees_with_subset_scan(running_N):
    M = realize_from_kernel(running_N)
    assert set(M.circuits) == set(circuits_via_subsets(kernel_basis(running_N)))


def test_initial_circuit_golden(running_N):
    M = realize_from_kernel(running_N)
    w = (0, 2, 0, 2, 0)
    got = {initial_circuit(w, c) for c in M.circuits}
    expected_half = {
        SignedCircuit((3,), (1,)),
        SignedCircuit((5,), (1,)),
        SignedCircuit((5,), (3,)),
    }
    assert got == expected_half | {c.negated() for c in expected_half}


def test_initial_circuit_uniform_weight(running_N):
    M = realize_from_kernel(running_N)
    for c in M.circuits:
        assert initial_circuit((0, 0, 0, 0, 0), c) == c


def test_initial_circuit_single_example(running_N):
    assert initial_circuit((0, 2, 0, 2, 0), SignedCircuit((2, 5), (3, 4))) == SignedCircuit(
        (5,), (3,)
    )


# --- closure and flats ---------------------------------------------------


def test_closure_free_matroid():
    M = OrientedMatroid(3, [])
    for S in [set(), {1}, {2, 3}, {1, 2, 3}]:
        assert closure(S, M).as_set == frozenset(S)


def test_closure_running_example(running_N):
    M = realize_from_kernel(running_N)
    assert closure({2, 3}, M).as_set == frozenset({1, 2, 3})
    assert closure({1, 4, 5}, M).as_set == frozenset({1, 4, 5})


def test_all_flats_running_example(running_N):
    M = realize_from_kernel(running_N)
    flats = all_flats(M)
    by_rank = {}
    for f in flats:
        by_rank.setdefault(f.rank, set()).add(f.as_set)
    assert by_rank[0] == {frozenset()}
    assert by_rank[1] == {frozenset({i}) for i in range(1, 6)}
    assert by_rank[2] == {
        frozenset({1, 2, 3}),
        frozenset({1, 4, 5}),
        frozenset({2, 4}),
        frozenset({2, 5}),
        frozenset({3, 4}),
        frozenset({3, 5}),
    }
    assert by_rank[3] == {frozenset(range(1, 6))}


def test_all_flats_free_matroid():
    M = OrientedMatroid(3, [])
    assert len(all_flats(M)) == 8


def test_flats_match_exhaustive_closure_oracle():
    rng = random.Random(3)
    for _ in range(5):
        C = RationalMatrix.from_rows(
            [[rng.randint(-2, 2) for _ in range(5)] for _ in range(2)]
        )
        if C.is_zero():
            continue
        M = realize_from_kernel(C)
        expected = set()
        for size in range(6):
            for S in combinations(range(1, 6), size):
                if closure(S, M).as_set == frozenset(S):
                    expected.add(frozenset(S))
        assert {f.as_set for f in all_flats(M)} == expected


def test_closure_idempotent_extensive_monotone(running_N):
    M = realize_from_kernel(running_N)
    rng = random.Random(17)
    for _ in range(25):
        S = {e for e in range(1, 6) if rng.random() < 0.5}
        T = S | {e for e in range(1, 6) if rng.random() < 0.3}
        cS, cT = closure(S, M).as_set, closure(T, M).as_set
        assert S <= cS
        assert closure(cS, M).as_set == cS
        assert cS <= cT


# --- flags ----------------------------------------------------------------


def test_maximal_flags_running_example(running_N):
    M = realize_from_kernel(running_N)
    flags = maximal_flags(M)
    assert len(flags) == 14
    chains = {tuple(f.as_set for f in flag.chain) for flag in flags}
    assert (frozenset({2}), frozenset({1, 2, 3})) in chains
    assert (frozenset({2}), frozenset({2, 4})) in chains
    for flag in flags:
        assert [f.rank for f in flag.chain] == [1, 2]


def test_maximal_flags_free_matroid_two_elements():
    M = OrientedMatroid(2, [])
    flags = maximal_flags(M)
    assert {tuple(f.as_set for f in flag.chain) for flag in flags} == {
        (frozenset({1}),),
        (frozenset({2}),),
    }


def test_maximal_flags_rank_one():
    M = realize_from_kernel(RationalMatrix.from_rows([[1, -1]]))
    assert M.rank == 1
    assert maximal_flags(M) == (FlagOfFlats(()),)


def test_flag_validation_rejects_non_nested():
    a = Flat((1,), 1)
    b = Flat((2, 3), 2)
    with pytest.raises(MatroidError):
        FlagOfFlats((a, b))


# --- structural invariants -------------------------------------------------


def test_negation_closure_and_support_bound(running_N):
    M = realize_from_kernel(running_N)
    circuits = set(M.circuits)
    for c in circuits:
        assert c.negated() in circuits
        assert len(c.support) <= M.rank + 1


def test_circuit_exchange_on_desk_instances(running_N):
    M = realize_from_kernel(running_N)
    supports = [set(s) for s in M.circuit_supports]
    for s1, s2 in combinations(supports, 2):
        common = s1 & s2
        for e in common:
            union = (s1 | s2) - {e}
            assert any(set(s3) <= union for s3 in supports)


def test_escape_hatch_from_circuits():
    M = OrientedMatroid.from_circuits(3, [SignedCircuit((1, 2), (3,))])
    assert SignedCircuit((3,), (1, 2)) in M.circuits
    assert M.realization is None


def test_rejects_nested_supports():
    with pytest.raises(MatroidError):
        OrientedMatroid(4, [SignedCircuit((1,), (2,)), SignedCircuit((1, 3), (2,))])


def test_serialization_document(running_N):
    M = realize_from_kernel(running_N)
    doc = M.to_document()
    assert doc["ground_size"] == 5
    assert {tuple(c["positive"]) for c in doc["circuits"]} == {
        tuple(c.positive) for c in M.circuits
    }
    assert doc["flats_by_rank"]["1"] == [[1], [2], [3], [4], [5]]
