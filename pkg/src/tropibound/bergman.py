"""Fine Bergman fan of a matroid and its positive subfan.

Min-convention throughout: a weight vector belongs to the fan when the
minimum over every circuit support is attained at least twice, and to the
positive subfan when every circuit's argmin meets both the positive and
the negative part.  Fine cones are spanned by indicator vectors of flats
along a chain, plus the all-ones lineality line; small flats carry the
largest weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from tropibound.matroid import (
    Flat,
    FlagOfFlats,
    OrientedMatroid,
    all_flats,
    maximal_flags,
)
from tropibound.rational import to_rational


def _coerce(w: Sequence) -> tuple:
    if any(isinstance(x, str) for x in w):
        return tuple(to_rational(x) for x in w)
    for x in w:
        if isinstance(x, float):
            raise TypeError("membership predicates are exact; pass int/Fraction, not float")
    return tuple(w)


def _min_attained_twice(w: Sequence, support: tuple[int, ...]) -> bool:
    m = min(w[e - 1] for e in support)
    hits = 0
    for e in support:
        if w[e - 1] == m:
            hits += 1
            if hits == 2:
                return True
    return False


def _argmin_two_signed(w: Sequence, positive: tuple[int, ...], negative: tuple[int, ...]) -> bool:
    m = None
    for e in positive:
        x = w[e - 1]
        if m is None or x < m:
            m = x
    for e in negative:
        x = w[e - 1]
        if m is None or x < m:
            m = x
    return any(w[e - 1] == m for e in positive) and any(w[e - 1] == m for e in negative)


def is_member(w: Sequence, M: OrientedMatroid) -> bool:
    """Whether w lies in the Bergman fan of the underlying matroid."""
    ww = _coerce(w)
    if len(ww) != M.ground_size:
        raise ValueError("weight vector length mismatch")
    return all(_min_attained_twice(ww, sup) for sup in M.circuit_supports)


def is_positive_member(w: Sequence, OM: OrientedMatroid) -> bool:
    """Whether w lies in the positive Bergman fan of the oriented matroid."""
    ww = _coerce(w)
    if len(ww) != OM.ground_size:
        raise ValueError("weight vector length mismatch")
    return all(_argmin_two_signed(ww, c.positive, c.negative) for c in OM.circuits)


@dataclass(frozen=True)
class FlagCone:
    """Cone over a chain of flats: nonnegative spans of the flats'
    indicator vectors plus the all-ones lineality line."""

    flag: FlagOfFlats
    ground_size: int

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(1 if e in f.as_set else 0 for e in range(1, self.ground_size + 1))
            for f in self.flag.chain
        )

    @property
    def lineality(self) -> tuple[int, ...]:
        return (1,) * self.ground_size

    @property
    def dimension(self) -> int:
        return len(self.flag) + 1

    def blocks(self) -> list[tuple[int, ...]]:
        """Partition of {1..r} by the chain: F1, F2-F1, ..., complement."""
        out: list[tuple[int, ...]] = []
        prev: frozenset[int] = frozenset()
        for f in self.flag.chain:
            out.append(tuple(sorted(f.as_set - prev)))
            prev = f.as_set
        out.append(tuple(sorted(set(range(1, self.ground_size + 1)) - prev)))
        return out

    def contains(self, w: Sequence, strict: bool = False) -> bool:
        """Exact membership of w in the closed cone.

        Equivalent to: w constant on each block and block values weakly
        decreasing along the chain.  With strict=True, membership in the
        relative interior (strictly decreasing block values).
        """
        ww = _coerce(w)
        values = []
        for block in self.blocks():
            vals = {ww[e - 1] for e in block}
            if len(vals) != 1:
                return False
            values.append(next(iter(vals)))
        for a, b in zip(values, values[1:]):
            if a < b or (strict and a == b):
                return False
        return True


def sample_relative_interior(cone: FlagCone) -> tuple[Fraction, ...]:
    """Sum of the flag's indicator vectors: a canonical relative-interior
    point with zero lineality part."""
    acc = [0] * cone.ground_size
    for g in cone.generators:
        acc = [a + b for a, b in zip(acc, g)]
    return tuple(Fraction(a) for a in acc)


def fine_fan(M: OrientedMatroid) -> list[FlagCone]:
    """One maximal cone per maximal flag of flats."""
    return [FlagCone(flag, M.ground_size) for flag in maximal_flags(M)]


@dataclass(frozen=True)
class PositiveFan:
    cones: tuple[FlagCone, ...]
    matroid: OrientedMatroid

    @property
    def free_matroid(self) -> bool:
        """No circuits: the fan is all of R^r."""
        return not self.matroid.circuits

    def to_document(self) -> dict:
        return {
            "ground_size": self.matroid.ground_size,
            "free_matroid": self.free_matroid,
            "cones": [
                {
                    "flats": [list(f.elements) for f in c.flag.chain],
                    "sample": [str(x) for x in sample_relative_interior(c)],
                    "dimension": c.dimension,
                }
                for c in self.cones
            ],
        }


def positive_fan(OM: OrientedMatroid) -> PositiveFan:
    """Filter the fine fan's maximal cones by the relative-interior sample.

    Initial circuits are constant on the relative interior of a fine
    cone, so one sample point decides the whole cone.
    """
    kept = []
    for cone in fine_fan(OM):
        w = sample_relative_interior(cone)
        if is_positive_member(w, OM):
            kept.append(cone)
    return PositiveFan(tuple(kept), OM)


def positive_chains(
    OM: OrientedMatroid, append_maximal_only: bool = False
) -> list[FlagOfFlats]:
    """All chains of proper nonempty flats whose cone lies in the
    positive fan, found by depth-first extension with pruning.

    A chain is kept iff the relative-interior sample of its cone passes
    the positive-membership test; failing chains cannot be extended into
    passing ones, so the search prunes on first failure.  The empty chain
    (lineality-only cone) is included when it passes.

    With append_maximal_only=True, only chains with no positive
    upward extension are returned; their closed cones still cover the
    whole positive fan.
    """
    r = OM.ground_size
    proper = [
        f
        for f in all_flats(OM)
        if f.elements and len(f.elements) < r and f.rank >= 1 and f.rank < OM.rank
    ]
    proper.sort(key=lambda f: (f.rank, f.elements))
    indicator = {
        f: tuple(1 if e in f.as_set else 0 for e in range(1, r + 1)) for f in proper
    }

    out: list[FlagOfFlats] = []

    def passes(sample: Sequence[int]) -> bool:
        return all(_argmin_two_signed(sample, c.positive, c.negative) for c in OM.circuits)

    def extend(chain: list[Flat], sample: tuple[int, ...], start: int):
        extended = False
        for idx in range(start, len(proper)):
            f = proper[idx]
            if chain and not (chain[-1].as_set < f.as_set):
                continue
            new_sample = tuple(a + b for a, b in zip(sample, indicator[f]))
            if not passes(new_sample):
                continue
            extended = True
            extend(chain + [f], new_sample, idx + 1)
        if not extended or not append_maximal_only:
            out.append(FlagOfFlats(tuple(chain)))

    zero = (0,) * r
    if passes(zero):
        extend([], zero, 0)
    return out


def compare_with_coarse(
    OM: OrientedMatroid,
    rays: Sequence[Sequence],
    cones: Sequence[Sequence[int]],
) -> dict:
    """Diagnostic for externally supplied coarse fan data.

    ``rays`` are weight vectors; ``cones`` list 1-based ray indices.  Each
    cone is sampled at the sum of its rays and both membership predicates
    are reported, alongside per-ray membership.
    """
    ray_vecs = [tuple(to_rational(x) for x in ray) for ray in rays]
    report = {
        "rays": [
            {
                "index": i + 1,
                "vector": [str(x) for x in ray],
                "member": is_member(ray, OM),
                "positive_member": is_positive_member(ray, OM),
            }
            for i, ray in enumerate(ray_vecs)
        ],
        "cones": [],
    }
    for idxs in cones:
        sample = tuple(
            sum(ray_vecs[i - 1][k] for i in idxs) for k in range(OM.ground_size)
        )
        report["cones"].append(
            {
                "ray_indices": list(idxs),
                "sample": [str(x) for x in sample],
                "member": is_member(sample, OM),
                "positive_member": is_positive_member(sample, OM),
            }
        )
    return report
