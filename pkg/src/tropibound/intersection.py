"""Exact enumeration of the positive tropical linear space, shifted by -h,
intersected with the row span of an integer exponent matrix.

Two structurally different complete enumerations are provided: the primary
one walks positive cones of the fine fan (componentwise, since circuits
never straddle connected components) and solves each cone's tie system;
the oracle enumerates vertices of the tie-hyperplane arrangement.
Per-point transversality is certified by an exact tangent-direction test,
never by genericity arguments.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from tropibound import _polyhedra
from tropibound.bergman import FlagCone, is_positive_member, positive_chains
from tropibound.matroid import (
    Flat,
    FlagOfFlats,
    OrientedMatroid,
    SignedCircuit,
)
from tropibound.rational import (
    RationalMatrix,
    in_row_span,
    rank,
    solve_affine,
    vector,
)


class InputValidationError(ValueError):
    pass


class OracleMismatchError(AssertionError):
    """The fan walk and the vertex oracle disagreed; one of them is wrong."""


@dataclass(frozen=True)
class Diagnostics:
    r: int
    n: int
    rank_A: int
    rank_C: int
    ranks_ok: bool
    lineality_ok: bool
    messages: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.ranks_ok and self.lineality_ok


def validate_inputs(C: RationalMatrix, A: RationalMatrix, h: Sequence) -> Diagnostics:
    """Check the rank hypotheses and the lineality obstruction.

    Hard error when rank(A) < rows(A): the monomial parametrization is
    not injective and no bound can be stated.  Everything else is
    reported in the diagnostics and degrades certification, not
    computation.
    """
    if not (C.cols == A.cols == len(h)):
        raise InputValidationError(
            f"column/shift mismatch: C has {C.cols} columns, A has {A.cols}, h has {len(h)}"
        )
    if not A.is_integer():
        raise InputValidationError("exponent matrix must have integer entries")
    vector(h)  # shift entries must coerce to exact rationals
    n = A.rows
    rank_A = rank(A)
    if rank_A < n:
        raise InputValidationError(
            f"exponent matrix has rank {rank_A} < {n} rows; parametrization is not injective"
        )
    rank_C = rank(C)
    messages = []
    ranks_ok = rank_C == n
    if not ranks_ok:
        messages.append(
            f"rank(C) = {rank_C} differs from n = {n}; the root-count bound does not apply"
        )
    ones_in = in_row_span(A, [1] * A.cols)
    if ones_in:
        messages.append(
            "the all-ones vector lies in rowspan(A); every solution translates along a line"
        )
    return Diagnostics(
        r=A.cols,
        n=n,
        rank_A=rank_A,
        rank_C=rank_C,
        ranks_ok=ranks_ok,
        lineality_ok=not ones_in,
        messages=tuple(messages),
    )


@dataclass(frozen=True)
class IntersectionPoint:
    """One point of the shifted positive fan meeting rowspan(A).

    w = A^T v exactly, and w + h passes the positive-membership test.
    ``interior`` records whether w + h sits in the relative interior of a
    full-dimensional cell of the coarse structure (the locus where the
    initial circuits stay constant); ``isolated`` records that no nonzero
    tangent direction inside rowspan(A) stays in the fan.
    """

    v: tuple[Fraction, ...]
    w: tuple[Fraction, ...]
    supporting_flag: FlagOfFlats
    isolated: bool
    interior: bool


@dataclass(frozen=True)
class IntersectionReport:
    points: tuple[IntersectionPoint, ...]
    count: int
    transverse: bool
    lineality_ok: bool
    diagnostics: Diagnostics
    method: str
    free_matroid: bool = False
    positive_dimensional: bool = False
    non_transverse_flags: tuple[FlagOfFlats, ...] = ()
    notes: tuple[str, ...] = ()

    def to_document(self) -> dict:
        return {
            "method": self.method,
            "count": self.count,
            "transverse": self.transverse,
            "lineality_ok": self.lineality_ok,
            "free_matroid": self.free_matroid,
            "positive_dimensional": self.positive_dimensional,
            "diagnostics": {
                "r": self.diagnostics.r,
                "n": self.diagnostics.n,
                "rank_A": self.diagnostics.rank_A,
                "rank_C": self.diagnostics.rank_C,
                "ranks_ok": self.diagnostics.ranks_ok,
                "messages": list(self.diagnostics.messages),
            },
            "points": [
                {
                    "v": [str(x) for x in p.v],
                    "w": [str(x) for x in p.w],
                    "flag": [list(f.elements) for f in p.supporting_flag.chain],
                    "isolated": p.isolated,
                    "interior": p.interior,
                }
                for p in self.points
            ],
            "notes": list(self.notes),
        }


def _level_flag(p: Sequence[Fraction], OM: OrientedMatroid) -> FlagOfFlats:
    """The chain of upper level sets of p, which are flats for fan members."""
    r = OM.ground_size
    values = sorted(set(p), reverse=True)
    chain = []
    for cut in values[:-1]:
        members = tuple(e for e in range(1, r + 1) if p[e - 1] >= cut)
        chain.append(Flat(members, OM.rank_of(members)))
    return FlagOfFlats(tuple(chain))


def _is_interior(p: Sequence[Fraction], OM: OrientedMatroid) -> bool:
    """Whether p lies in a full-dimensional cell of the coarse structure.

    The tangent space of the constant-initial-circuits locus at p is cut
    out by tying each circuit's argmin set; merging those sets leaves
    exactly rank(M) parts iff the cell has the fan's full dimension.
    """
    r = OM.ground_size
    parent = list(range(r + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for sup in OM.circuit_supports:
        m = min(p[e - 1] for e in sup)
        arg = [e for e in sup if p[e - 1] == m]
        root = find(arg[0])
        for e in arg[1:]:
            parent[find(e)] = root
    components = len({find(e) for e in range(1, r + 1)})
    return components == OM.rank


def tangent_direction(
    point, OM: OrientedMatroid, A: RationalMatrix, h: Sequence
) -> tuple[Fraction, ...] | None:
    """A nonzero direction u with A^T (v + eps u) + h inside the positive
    fan for all small eps > 0, or None when no such direction exists.

    To first order the fan condition reads: for every circuit, the argmin
    of A^T u over the circuit's current argmin set still meets both
    signs.  That is a finite union of polyhedral cones indexed by
    per-circuit witness pairs; each surviving cone is probed exactly for
    a nonzero point.  Accepts an IntersectionPoint or a bare v vector.
    """
    v = point.v if isinstance(point, IntersectionPoint) else vector(point)
    hh = vector(h)
    At = A.transpose()
    w = At.apply(v)
    p = tuple(a + b for a, b in zip(w, hh))
    n = A.rows

    seen_pairs: set[frozenset] = set()
    tasks: list[tuple[list[tuple[int, int]], tuple[int, ...]]] = []
    for c in OM.circuits:
        key = frozenset({(c.positive, c.negative), (c.negative, c.positive)})
        if key in seen_pairs:
            continue
        seen_pairs.add(key)
        sup = tuple(sorted(c.support))
        m = min(p[e - 1] for e in sup)
        arg = tuple(e for e in sup if p[e - 1] == m)
        pos = [e for e in c.positive if e in arg]
        neg = [e for e in c.negative if e in arg]
        if not pos or not neg:
            raise ValueError("point is not in the positive fan; isolation is undefined")
        witnesses = [(i, j) for i in pos for j in neg]
        tasks.append((witnesses, arg))
    tasks.sort(key=lambda t: (len(t[0]), len(t[1])))
    if not tasks:
        # no circuits: the fan is everything and every direction stays in
        return tuple(Fraction(1 if i == 0 else 0) for i in range(n)) if n else None

    def diff(a: int, b: int) -> tuple[Fraction, ...]:
        return tuple(x - y for x, y in zip(At.row(a - 1), At.row(b - 1)))

    # states: (frozenset of equality rows, frozenset of inequality rows)
    states: set[tuple[frozenset, frozenset]] = {(frozenset(), frozenset())}
    samples: dict[tuple[frozenset, frozenset], tuple[Fraction, ...]] = {}
    for witnesses, arg in tasks:
        new_states: set[tuple[frozenset, frozenset]] = set()
        samples = {}
        for eqs, ineqs in states:
            for i_pos, i_neg in witnesses:
                e2 = eqs | {_polyhedra._normalize(diff(i_pos, i_neg), Fraction(0))[0]}
                extra = {
                    _polyhedra._normalize(diff(i_pos, j), Fraction(0))[0]
                    for j in arg
                    if j != i_pos and j != i_neg
                }
                i2 = ineqs | extra
                if (e2, i2) in new_states:
                    continue
                u = _polyhedra.cone_nonzero_point(n, list(e2), list(i2))
                if u is not None:
                    new_states.add((e2, i2))
                    samples[(e2, i2)] = u
        states = new_states
        if not states:
            return None
    return next(iter(samples.values()))


def is_isolated(point, OM: OrientedMatroid, A: RationalMatrix, h: Sequence) -> bool:
    """Exact certificate: no nonzero tangent direction inside rowspan(A)
    stays in the positive fan."""
    return tangent_direction(point, OM, A, h) is None


# ---------------------------------------------------------------------------
# componentwise cell enumeration


def _components(OM: OrientedMatroid) -> list[list[int]]:
    """Connected components of the circuit hypergraph; singletons are
    elements lying on no circuit."""
    parent = list(range(OM.ground_size + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for sup in OM.circuit_supports:
        root = find(sup[0])
        for e in sup[1:]:
            parent[find(e)] = root
    groups: dict[int, list[int]] = {}
    for e in range(1, OM.ground_size + 1):
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values())


@dataclass(frozen=True)
class _LocalCell:
    """An inclusion-maximal positive chain of one component, with its
    ordered blocks translated back to global element labels."""

    ordered_blocks: tuple[tuple[int, ...], ...]
    chain_global: tuple[tuple[int, ...], ...]

    @property
    def partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(b) for b in self.ordered_blocks)


def _local_cells(OM: OrientedMatroid, comp: list[int]) -> list[_LocalCell] | None:
    """Positive cells of the fan restricted to one component.

    Returns None when the component admits no positive weight at all
    (some circuit is one-signed), which empties the whole fan.
    """
    local_size = len(comp)
    to_local = {g: i + 1 for i, g in enumerate(comp)}
    local_circuits = []
    for c in OM.circuits:
        if c.support <= set(comp):
            local_circuits.append(
                SignedCircuit(
                    tuple(to_local[e] for e in c.positive),
                    tuple(to_local[e] for e in c.negative),
                )
            )
    local = OrientedMatroid(local_size, local_circuits)
    if any(not c.positive or not c.negative for c in local.circuits):
        return None
    cells = []
    for flag in positive_chains(local, append_maximal_only=True):
        cone = FlagCone(flag, local_size)
        blocks = tuple(
            tuple(comp[e - 1] for e in block) for block in cone.blocks() if block
        )
        chain_global = tuple(
            tuple(comp[e - 1] for e in f.elements) for f in flag.chain
        )
        cells.append(_LocalCell(blocks, chain_global))
    return cells if cells else None


def _representative_flag(
    OM: OrientedMatroid, combo: Sequence[_LocalCell]
) -> FlagOfFlats:
    """One valid chain of global flats through a product of local cells:
    concatenate the factors' chains, accumulating earlier factors."""
    chain: list[Flat] = []
    acc: set[int] = set()
    for cell in combo:
        for members in cell.chain_global:
            full = tuple(sorted(acc | set(members)))
            chain.append(Flat(full, OM.rank_of(full)))
        if cell.chain_global:
            acc |= set(cell.chain_global[-1])
    return FlagOfFlats(tuple(chain))


def _solve_rows(
    rows: list[tuple[Fraction, ...]], rhs: list[Fraction], n: int
) -> tuple[str, tuple[Fraction, ...] | None]:
    """Row-echelon solve with early exits.

    Returns ('none', None), ('under', None), or ('unique', v).
    """
    work = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: list[int] = []
    pr = 0
    for pc in range(n):
        pivot_row = None
        for i in range(pr, len(work)):
            if work[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[pr], work[pivot_row] = work[pivot_row], work[pr]
        pv = work[pr][pc]
        for i in range(pr + 1, len(work)):
            if work[i][pc] != 0:
                f = work[i][pc] / pv
                wi, wp = work[i], work[pr]
                for j in range(pc, n + 1):
                    wi[j] -= f * wp[j]
        pivots.append(pc)
        pr += 1
    for i in range(pr, len(work)):
        if work[i][n] != 0:
            return "none", None
    if len(pivots) < n:
        return "under", None
    sol = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        pc = pivots[k]
        s = work[k][n] - sum(work[k][j] * sol[j] for j in range(pc + 1, n))
        sol[pc] = s / work[k][pc]
    return "unique", tuple(sol)


def _build_report(
    candidates: dict[tuple[Fraction, ...], tuple[Fraction, ...]],
    OM: OrientedMatroid,
    A: RationalMatrix,
    hh: tuple[Fraction, ...],
    diagnostics: Diagnostics,
    method: str,
    positive_dimensional: bool,
    non_transverse_flags: tuple[FlagOfFlats, ...],
    notes: list[str],
    free_matroid: bool = False,
) -> IntersectionReport:
    points = []
    for v in sorted(candidates):
        w = candidates[v]
        p = tuple(a + b for a, b in zip(w, hh))
        points.append(
            IntersectionPoint(
                v=v,
                w=w,
                supporting_flag=_level_flag(p, OM),
                isolated=is_isolated(v, OM, A, hh),
                interior=_is_interior(p, OM),
            )
        )
    transverse = (
        diagnostics.ok
        and not free_matroid
        and not positive_dimensional
        and all(pt.isolated and pt.interior for pt in points)
    )
    return IntersectionReport(
        points=tuple(points),
        count=len(points),
        transverse=transverse,
        lineality_ok=diagnostics.lineality_ok,
        diagnostics=diagnostics,
        method=method,
        free_matroid=free_matroid,
        positive_dimensional=positive_dimensional,
        non_transverse_flags=non_transverse_flags,
        notes=tuple(notes),
    )


def _free_matroid_report(
    OM: OrientedMatroid, diagnostics: Diagnostics, method: str
) -> IntersectionReport:
    return _build_report(
        {},
        OM,
        RationalMatrix.zero(diagnostics.n, diagnostics.r),
        (Fraction(0),) * diagnostics.r,
        diagnostics,
        method,
        positive_dimensional=True,
        non_transverse_flags=(),
        notes=[
            "free matroid: no circuits, the positive fan is all of R^r and the"
            " intersection is all of rowspan(A)"
        ],
        free_matroid=True,
    )


def intersect_via_fan(
    OM: OrientedMatroid,
    A: RationalMatrix,
    h: Sequence,
    diagnostics: Diagnostics | None = None,
) -> IntersectionReport:
    """Primary enumeration: one tie system per positive cell.

    Circuits never straddle circuit-connected components, so positive
    cells are products of per-component cells and their tie systems
    depend only on the induced block partition.  Every intersection point
    lies in the closed cone of some cell, hence solves some enumerated
    tie system.  Underdetermined systems are analyzed exactly: empty
    pieces are discarded, zero-dimensional pieces contribute their point,
    and higher-dimensional pieces flag the run as non-transverse.
    """
    hh = vector(h)
    if diagnostics is None:
        diagnostics = _diagnostics_from_matroid(OM, A, hh)
    n = A.rows
    if not OM.circuits:
        return _free_matroid_report(OM, diagnostics, "fan")
    At = A.transpose()
    at_rows = [At.row(i) for i in range(At.rows)]

    notes: list[str] = []
    comps = _components(OM)
    factor_partitions: list[dict[frozenset, list[_LocalCell]]] = []
    for comp in comps:
        cells = _local_cells(OM, comp)
        if cells is None:
            notes.append(
                f"component {comp} admits no positive weight; the positive fan is empty"
            )
            return _build_report(
                {}, OM, A, hh, diagnostics, "fan", False, (), notes
            )
        grouped: dict[frozenset, list[_LocalCell]] = {}
        for cell in cells:
            grouped.setdefault(cell.partition, []).append(cell)
        factor_partitions.append(grouped)

    candidates: dict[tuple[Fraction, ...], tuple[Fraction, ...]] = {}
    positive_dimensional = False
    bad_flags: list[FlagOfFlats] = []
    underdetermined_pinned = 0

    def tie_system(blocks: list[tuple[int, ...]]):
        rows: list[tuple[Fraction, ...]] = []
        rhs: list[Fraction] = []
        for block in blocks:
            if len(block) < 2:
                continue
            e0 = block[0]
            r0 = at_rows[e0 - 1]
            h0 = hh[e0 - 1]
            for e in block[1:]:
                rows.append(tuple(x - y for x, y in zip(r0, at_rows[e - 1])))
                rhs.append(hh[e - 1] - h0)
        return rows, rhs

    def partition_key(item):
        return sorted(sorted(b) for b in item[0])

    for partition_combo in itertools.product(
        *(sorted(g.items(), key=partition_key) for g in factor_partitions)
    ):
        blocks = [b for _, cells in partition_combo for b in cells[0].ordered_blocks]
        rows, rhs = tie_system(blocks)
        status, v = _solve_rows(rows, rhs, n)
        if status == "none":
            continue
        if status == "unique":
            w = At.apply(v)
            p = tuple(a + b for a, b in zip(w, hh))
            if is_positive_member(p, OM):
                candidates[v] = w
            continue
        # Underdetermined ties: examine each product cell of this partition
        # with its ordering facets.
        eqs = list(zip(rows, rhs))
        for combo in itertools.product(*(cells for _, cells in partition_combo)):
            ineqs = []
            for cell in combo:
                for upper, lower in zip(cell.ordered_blocks, cell.ordered_blocks[1:]):
                    eu, el = upper[0], lower[0]
                    row = tuple(
                        x - y for x, y in zip(at_rows[el - 1], at_rows[eu - 1])
                    )
                    ineqs.append((row, hh[eu - 1] - hh[el - 1], False))
            dim, _sample = _polyhedra.polyhedron_dimension(n, eqs, ineqs)
            if dim < 0:
                continue
            if dim == 0:
                vstar = _pinpoint(n, eqs, ineqs)
                wstar = At.apply(vstar)
                pstar = tuple(a + b for a, b in zip(wstar, hh))
                if not is_positive_member(pstar, OM):
                    raise RuntimeError(
                        "pinned cone point escaped the positive fan; cell"
                        " bookkeeping is wrong"
                    )
                candidates[vstar] = wstar
                underdetermined_pinned += 1
            else:
                positive_dimensional = True
                bad_flags.append(_representative_flag(OM, combo))
    if underdetermined_pinned:
        notes.append(
            f"{underdetermined_pinned} underdetermined tie system(s) pinned to a point"
            " by cone facets"
        )
    if bad_flags:
        notes.append(
            f"{len(bad_flags)} positive cell(s) meet rowspan(A) in positive dimension"
        )
    return _build_report(
        candidates,
        OM,
        A,
        hh,
        diagnostics,
        "fan",
        positive_dimensional,
        tuple(bad_flags),
        notes,
    )


def _pinpoint(n: int, eqs, ineqs) -> tuple[Fraction, ...]:
    """The unique point of a zero-dimensional polyhedron: fold implicit
    equalities in and solve."""
    current_eqs = list(eqs)
    current_ineqs = [(c, r, False) for c, r, _ in ineqs]
    while True:
        still = []
        changed = False
        for i, (coeffs, rhs, _) in enumerate(current_ineqs):
            probe = still + current_ineqs[i + 1 :] + [(coeffs, rhs, True)]
            if _polyhedra.feasible_point(n, current_eqs, probe) is None:
                current_eqs.append((coeffs, rhs))
                changed = True
            else:
                still.append((coeffs, rhs, False))
        current_ineqs = still
        if not changed:
            break
    M = RationalMatrix(len(current_eqs), n, [c for row, _ in current_eqs for c in row])
    sol = solve_affine(M, [rhs for _, rhs in current_eqs])
    if sol is None or sol[1].rows != 0:
        raise RuntimeError("zero-dimensional piece did not pin to a unique point")
    return sol[0]


def intersect_via_vertices(
    OM: OrientedMatroid,
    A: RationalMatrix,
    h: Sequence,
    diagnostics: Diagnostics | None = None,
) -> IntersectionReport:
    """Independent oracle: vertices of the tie-hyperplane arrangement.

    Ties between coordinates sharing a circuit support are enough: an
    isolated intersection point is pinned by its argmin ties, all of
    which live inside circuit supports.  Slow but structurally unrelated
    to the fan walk; intended as a desk-scale cross-check.
    """
    hh = vector(h)
    if diagnostics is None:
        diagnostics = _diagnostics_from_matroid(OM, A, hh)
    n = A.rows
    if not OM.circuits:
        return _free_matroid_report(OM, diagnostics, "vertices")
    At = A.transpose()

    # Integer augmented rows (a . v = b scaled to integers per plane) so
    # the elimination below runs on plain ints.
    hyperplanes: dict[tuple[int, ...], None] = {}
    for sup in OM.circuit_supports:
        for a_idx in range(len(sup)):
            for b_idx in range(a_idx + 1, len(sup)):
                i, j = sup[a_idx], sup[b_idx]
                row = tuple(x - y for x, y in zip(At.row(i - 1), At.row(j - 1)))
                rhs = hh[j - 1] - hh[i - 1]
                if all(x == 0 for x in row):
                    continue
                nrow, nrhs = _polyhedra._normalize(row, rhs)
                aug = tuple(int(x) for x in nrow) + (int(nrhs),)
                if tuple(-x for x in aug) in hyperplanes:
                    continue
                hyperplanes[aug] = None
    planes = list(hyperplanes)

    candidates: dict[tuple[Fraction, ...], tuple[Fraction, ...]] = {}
    solved: set[tuple[Fraction, ...]] = set()
    from math import gcd

    def back_substitute(basis: list) -> tuple[Fraction, ...]:
        # integer arithmetic over one running denominator, reduced once
        num = [0] * n
        den = 1
        for pivot_col, brow in sorted(basis, key=lambda e: -e[0]):
            s = brow[n] * den - sum(brow[j] * num[j] for j in range(pivot_col + 1, n))
            pv = brow[pivot_col]
            if pv < 0:
                pv, s = -pv, -s
            num = [x * pv for x in num]
            num[pivot_col] = s
            den *= pv
        return tuple(Fraction(x, den) for x in num)

    def walk(start: int, basis: list):
        depth = len(basis)
        if depth == n:
            v = back_substitute(basis)
            if v in solved:
                return
            solved.add(v)
            w = At.apply(v)
            p = tuple(a + b for a, b in zip(w, hh))
            if is_positive_member(p, OM):
                candidates[v] = w
            return
        limit = len(planes) - (n - depth) + 1
        for k in range(start, limit):
            r = planes[k]
            for pivot_col, brow in basis:
                f = r[pivot_col]
                if f:
                    pv = brow[pivot_col]
                    r = tuple(pv * a - f * b for a, b in zip(r, brow))
            for col in range(n):
                if r[col]:
                    g = 0
                    for x in r:
                        g = gcd(g, x if x >= 0 else -x)
                    if g > 1:
                        r = tuple(x // g for x in r)
                    walk(k + 1, basis + [(col, r)])
                    break

    walk(0, [])
    return _build_report(candidates, OM, A, hh, diagnostics, "vertices", False, (), [])


def _diagnostics_from_matroid(
    OM: OrientedMatroid, A: RationalMatrix, hh: tuple[Fraction, ...]
) -> Diagnostics:
    """Diagnostics when only the matroid (not C) is in hand: the kernel
    realization stands in for rank(C) = r - rank(M)."""
    n = A.rows
    rank_A = rank(A)
    if rank_A < n:
        raise InputValidationError(
            f"exponent matrix has rank {rank_A} < {n} rows; parametrization is not injective"
        )
    rank_C = OM.ground_size - OM.rank
    messages = []
    ranks_ok = rank_C == n
    if not ranks_ok:
        messages.append(
            f"kernel codimension {rank_C} differs from n = {n}; the root-count bound does not apply"
        )
    ones_in = in_row_span(A, [1] * A.cols)
    if ones_in:
        messages.append(
            "the all-ones vector lies in rowspan(A); every solution translates along a line"
        )
    return Diagnostics(
        r=OM.ground_size,
        n=n,
        rank_A=rank_A,
        rank_C=rank_C,
        ranks_ok=ranks_ok,
        lineality_ok=not ones_in,
        messages=tuple(messages),
    )


def lower_bound(
    C: RationalMatrix,
    A: RationalMatrix,
    h: Sequence,
    cross_check: bool = False,
) -> IntersectionReport:
    """Count the shifted positive tropical kernel against rowspan(A).

    The count is certified exactly when the report says transverse;
    otherwise it is still computed and reported honestly.  With
    cross_check=True the vertex oracle must reproduce the same v-set
    or an OracleMismatchError is raised.
    """
    from tropibound.matroid import realize_from_kernel

    diagnostics = validate_inputs(C, A, h)
    OM = realize_from_kernel(C)
    report = intersect_via_fan(OM, A, h, diagnostics)
    if cross_check:
        other = intersect_via_vertices(OM, A, h, diagnostics)
        if {p.v for p in report.points} != {p.v for p in other.points}:
            raise OracleMismatchError(
                f"fan walk found {[p.v for p in report.points]} but vertex oracle found"
                f" {[p.v for p in other.points]}"
            )
    return report
