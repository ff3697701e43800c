"""Vertically parametrized systems, reaction-network assembly, and the
combined bound report.

A vertical system is a coefficient matrix C, an integer exponent matrix A
with as many rows as variables, and a rational shift vector h scaling the
j-th monomial column by the j-th power of the small parameter.  Mass-action
steady states with conservation laws assemble into this shape by stacking
the conservation rows and totals next to the stoichiometric block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from tropibound.intersection import IntersectionReport, lower_bound
from tropibound.matroid import realize_from_kernel
from tropibound.rational import (
    RationalMatrix,
    first_independent_rows,
    vector,
)
from tropibound.subdivision import DecoratedSimplex, decorated_count, decorated_to_tropical


class SystemError_(ValueError):
    pass


@dataclass(frozen=True)
class VerticalSystem:
    """C diag(t^h) x^A = 0 with C rational, A integer, h rational."""

    C: RationalMatrix
    A: RationalMatrix
    h: tuple[Fraction, ...]

    def __post_init__(self):
        if not (self.C.cols == self.A.cols == len(self.h)):
            raise SystemError_(
                f"column mismatch: C has {self.C.cols}, A has {self.A.cols},"
                f" h has {len(self.h)}"
            )
        if not self.A.is_integer():
            raise SystemError_("exponent matrix must be integer")
        object.__setattr__(self, "h", vector(self.h))

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def r(self) -> int:
        return self.A.cols

    def reduced_coefficients(self) -> RationalMatrix:
        """rank(C) independent rows of C, first ones found; same kernel."""
        return self.C.submatrix_rows(first_independent_rows(self.C))


@dataclass(frozen=True)
class CRNModel:
    """Mass-action network data: stoichiometric matrix, reactant matrix,
    conservation matrix with totals, and rate exponents."""

    N_stoich: RationalMatrix
    B: RationalMatrix
    W: RationalMatrix
    T: tuple[Fraction, ...]
    h: tuple[Fraction, ...]

    def __post_init__(self):
        ns, rs = self.N_stoich.rows, self.N_stoich.cols
        if self.B.rows != ns or self.B.cols != rs:
            raise SystemError_("reactant matrix shape must match the stoichiometric matrix")
        if not self.B.is_integer():
            raise SystemError_("reactant matrix must be integer")
        if self.W.cols != ns:
            raise SystemError_("conservation matrix must have one column per species")
        if len(self.T) != self.W.rows:
            raise SystemError_("one total per conservation row required")
        if len(self.h) != rs:
            raise SystemError_("one rate exponent per reaction required")
        if not self.W.matmul(self.N_stoich).is_zero():
            raise SystemError_("conservation rows must annihilate the stoichiometric matrix")
        object.__setattr__(self, "T", vector(self.T))
        object.__setattr__(self, "h", vector(self.h))


def assemble_crn(model: CRNModel) -> VerticalSystem:
    """Stack steady-state and conservation equations into one vertical
    system.

    C = [[N, 0, 0], [0, W, -T]] pairs the reaction monomials x^B with the
    plain concentrations and a constant column; A = [B | Id | 0]; the rate
    exponents extend by zeros (conservation coefficients do not scale with
    the parameter).
    """
    ns, rs = model.N_stoich.rows, model.N_stoich.cols
    k = model.W.rows
    crows = []
    for i in range(ns):
        crows.append(list(model.N_stoich.row(i)) + [0] * ns + [0])
    for i in range(k):
        crows.append([0] * rs + list(model.W.row(i)) + [-model.T[i]])
    arows = []
    for i in range(ns):
        arows.append(
            list(model.B.row(i)) + [1 if j == i else 0 for j in range(ns)] + [0]
        )
    C = RationalMatrix.from_rows(crows)
    A = RationalMatrix.from_rows(arows)
    h_full = tuple(model.h) + (Fraction(0),) * (ns + 1)
    return VerticalSystem(C, A, h_full)


@dataclass(frozen=True)
class BoundReport:
    tropical: IntersectionReport
    decorated: tuple[int, tuple[DecoratedSimplex, ...]] | None
    certified_bound: int
    method_notes: tuple[str, ...]

    def to_document(self) -> dict:
        doc = {
            "certified_bound": self.certified_bound,
            "tropical": self.tropical.to_document(),
            "method_notes": list(self.method_notes),
        }
        if self.decorated is None:
            doc["decorated"] = None
        else:
            count, simplices = self.decorated
            doc["decorated"] = {
                "count": count,
                "simplices": [
                    {
                        "members": list(s.cell.members),
                        "witness": [str(x) for x in s.cell.witness],
                        "kernel_vector": [str(x) for x in s.kernel_vector],
                    }
                    for s in simplices
                ],
            }
        return doc


class ComparisonViolation(AssertionError):
    """The decorated count exceeded the tropical count on a certified run,
    which contradicts the injective comparison map."""


def bound(system: VerticalSystem, cross_check: bool = False) -> BoundReport:
    """Run both bounding methods and reconcile them.

    The tropical count is certified when transverse; the decorated count
    needs no transversality and is the fallback.  Whenever both are
    available, every decorated simplex must map onto a reported tropical
    point and the counts must satisfy decorated <= tropical; a violation
    aborts loudly since it would contradict the comparison map.
    """
    notes: list[str] = []
    tropical = lower_bound(system.C, system.A, system.h, cross_check=cross_check)

    decorated = None
    cols = [system.A.column(j) for j in range(system.A.cols)]
    if len(set(cols)) != len(cols):
        notes.append("exponent matrix has repeated columns; decorated-simplex bound skipped")
    else:
        Ctilde = system.reduced_coefficients()
        if Ctilde.rows != system.n:
            notes.append(
                f"rank(C) = {Ctilde.rows} differs from n = {system.n};"
                " decorated-simplex bound skipped"
            )
        else:
            count, simplices = decorated_count(Ctilde, system.A, system.h)
            decorated = (count, tuple(simplices))
            matroid = realize_from_kernel(system.C)
            images = []
            for s in simplices:
                w = decorated_to_tropical(s, system.A, system.h, matroid=matroid)
                images.append(w)
            if len(set(images)) != len(images):
                raise ComparisonViolation(
                    "two decorated simplices share one tropical image"
                )
            if tropical.transverse:
                reported = {p.w for p in tropical.points}
                for s, w in zip(simplices, images):
                    if w not in reported:
                        raise ComparisonViolation(
                            f"decorated simplex {s.cell.members} maps to"
                            f" {tuple(str(x) for x in w)}, not a reported point"
                        )
                if count > tropical.count:
                    raise ComparisonViolation(
                        f"decorated count {count} exceeds certified tropical count"
                        f" {tropical.count}"
                    )

    if tropical.transverse:
        certified = tropical.count
        notes.append("tropical count certified transverse")
    elif decorated is not None:
        certified = decorated[0]
        notes.append(
            "tropical count not certified; falling back to the decorated-simplex bound"
        )
    else:
        certified = 0
        notes.append("no certified method applies; bound defaults to 0")
    if tropical.free_matroid:
        notes.append("positive fan is the whole space (free matroid)")
    elif tropical.transverse and tropical.count == 0:
        notes.append("the shifted positive fan misses rowspan(A) entirely")
    notes.extend(tropical.diagnostics.messages)
    return BoundReport(
        tropical=tropical,
        decorated=decorated,
        certified_bound=certified,
        method_notes=tuple(notes),
    )
