"""Oriented matroids realized by kernels of rational matrices.

Ground set elements are the integers 1..r, matching the column numbering
of the defining matrix in every report and serialized document.  Signed
circuits record the sign pattern of the minimal-support linear forms that
vanish on the realized space; both orientations of every circuit are
stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from tropibound.rational import RationalMatrix, kernel_basis, rank, to_rational


class MatroidError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SignedCircuit:
    """A pair of disjoint 1-based index sets (positive part, negative part)."""

    positive: tuple[int, ...]
    negative: tuple[int, ...]

    def __post_init__(self):
        pos = tuple(sorted(set(self.positive)))
        neg = tuple(sorted(set(self.negative)))
        if pos != tuple(self.positive) or neg != tuple(self.negative):
            object.__setattr__(self, "positive", pos)
            object.__setattr__(self, "negative", neg)
        if set(pos) & set(neg):
            raise MatroidError(f"positive and negative parts overlap: {pos} / {neg}")
        if not pos and not neg:
            raise MatroidError("empty signed circuit")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.positive) | frozenset(self.negative)

    def negated(self) -> "SignedCircuit":
        return SignedCircuit(self.negative, self.positive)

    def __repr__(self) -> str:
        return f"({set(self.positive) or '{}'}, {set(self.negative) or '{}'})"


@dataclass(frozen=True, order=True)
class Flat:
    """A closure-closed subset of the ground set, with its matroid rank."""

    elements: tuple[int, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __repr__(self) -> str:
        return f"Flat({set(self.elements) or '{}'}, rank={self.rank})"


@dataclass(frozen=True)
class FlagOfFlats:
    """A strictly increasing chain of proper nonempty flats.

    The empty chain is allowed; it indexes the lineality-only cone.
    """

    chain: tuple[Flat, ...]

    def __post_init__(self):
        for a, b in zip(self.chain, self.chain[1:]):
            if not a.as_set < b.as_set:
                raise MatroidError(f"chain is not strictly increasing: {a} !< {b}")

    def __len__(self) -> int:
        return len(self.chain)

    def __repr__(self) -> str:
        return "Flag(" + " < ".join(str(set(f.elements)) for f in self.chain) + ")"


class OrientedMatroid:
    """Signed-circuit presentation of an oriented matroid on {1..r}.

    Closed under negation: for every stored (C+, C-) the pair (C-, C+)
    is stored too.  ``realization`` is a matrix whose rows span the
    realized linear space, or None for matroids supplied circuit-first.
    """

    __slots__ = ("ground_size", "circuits", "realization", "_supports", "_rank")

    def __init__(
        self,
        ground_size: int,
        circuits: Iterable[SignedCircuit],
        realization: RationalMatrix | None = None,
    ):
        if ground_size < 1:
            raise MatroidError("ground set must be nonempty")
        closed: set[SignedCircuit] = set()
        for c in circuits:
            if not c.support <= set(range(1, ground_size + 1)):
                raise MatroidError(f"circuit {c} leaves the ground set [1..{ground_size}]")
            closed.add(c)
            closed.add(c.negated())
        supports = sorted({c.support for c in closed}, key=lambda s: (len(s), sorted(s)))
        for a, b in combinations(supports, 2):
            if a < b:
                raise MatroidError(f"circuit supports are nested: {set(a)} < {set(b)}")
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "circuits", tuple(sorted(closed)))
        object.__setattr__(self, "realization", realization)
        object.__setattr__(self, "_supports", tuple(tuple(sorted(s)) for s in supports))
        object.__setattr__(self, "_rank", None)

    def __setattr__(self, name, value):
        raise AttributeError("OrientedMatroid is immutable")

    @classmethod
    def from_circuits(
        cls, ground_size: int, circuits: Iterable[SignedCircuit]
    ) -> "OrientedMatroid":
        """Expert escape hatch: build from circuits with no realization."""
        return cls(ground_size, circuits, realization=None)

    @property
    def circuit_supports(self) -> tuple[tuple[int, ...], ...]:
        """Deduplicated circuit supports, sorted by (size, elements)."""
        return self._supports

    @property
    def ground_set(self) -> range:
        return range(1, self.ground_size + 1)

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return not any(set(sup) <= s for sup in self._supports)

    def rank_of(self, subset: Iterable[int]) -> int:
        """Matroid rank of a subset, by greedy extension of independent sets."""
        chosen: set[int] = set()
        for e in sorted(set(subset)):
            if self.is_independent(chosen | {e}):
                chosen.add(e)
        return len(chosen)

    @property
    def rank(self) -> int:
        if self._rank is None:
            object.__setattr__(self, "_rank", self.rank_of(self.ground_set))
        return self._rank

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedMatroid)
            and self.ground_size == other.ground_size
            and self.circuits == other.circuits
        )

    def __hash__(self) -> int:
        return hash((self.ground_size, self.circuits))

    def __repr__(self) -> str:
        return f"OrientedMatroid(r={self.ground_size}, circuits={list(self.circuits)})"

    def to_document(self) -> dict:
        """Serializable listing: ground size, circuits, flats by rank."""
        flats = all_flats(self)
        return {
            "ground_size": self.ground_size,
            "rank": self.rank,
            "circuits": [
                {"positive": list(c.positive), "negative": list(c.negative)}
                for c in self.circuits
            ],
            "flats_by_rank": {
                str(k): [list(f.elements) for f in flats if f.rank == k]
                for k in range(self.rank + 1)
            },
        }


def circuits_via_subsets(G: RationalMatrix) -> list[SignedCircuit]:
    """Signed circuits of the column matroid of G.

    Scans column subsets of size at most rank(G)+1; an inclusion-minimal
    dependent subset carries a unique linear relation up to scale, whose
    sign pattern is the circuit.  Both orientations are returned.
    """
    r = G.cols
    g_rank = rank(G)
    circuits: list[SignedCircuit] = []
    supports: list[set[int]] = []
    for size in range(1, min(r, g_rank + 1) + 1):
        for cols in combinations(range(r), size):
            colset = set(cols)
            if any(s < colset for s in supports):
                continue
            sub = G.submatrix_columns(cols)
            ker = kernel_basis(sub)
            if ker.rows != 1:
                continue
            lam = ker.row(0)
            if any(x == 0 for x in lam):
                continue
            pos = tuple(cols[i] + 1 for i, x in enumerate(lam) if x > 0)
            neg = tuple(cols[i] + 1 for i, x in enumerate(lam) if x < 0)
            c = SignedCircuit(pos, neg)
            circuits.extend([c, c.negated()])
            supports.append(colset)
    return sorted(set(circuits))


def realize_from_kernel(C: RationalMatrix) -> OrientedMatroid:
    """Oriented matroid realized by ker(C), on ground set {1..cols(C)}.

    Circuits are the sign patterns of the minimal-support nonzero vectors
    of rowspan(C), i.e. of the minimal linear dependencies among the
    columns of a kernel basis of C.
    """
    if C.is_zero():
        raise MatroidError("zero matrix realizes no oriented matroid here")
    G = kernel_basis(C)
    return OrientedMatroid(C.cols, circuits_via_subsets(G), realization=G)


def initial_circuit(w: Sequence, c: SignedCircuit) -> SignedCircuit:
    """Restriction of a signed circuit to the argmin of w over its support."""
    vals = {e: to_rational(w[e - 1]) for e in c.support}
    m = min(vals.values())
    arg = {e for e, x in vals.items() if x == m}
    return SignedCircuit(
        tuple(e for e in c.positive if e in arg),
        tuple(e for e in c.negative if e in arg),
    )


def closure(S: Iterable[int], M: OrientedMatroid) -> Flat:
    """Smallest flat containing S.

    Iterates "add e whenever some circuit support C has e in C and
    C minus e inside the current set" to a fixed point.
    """
    current = set(S)
    if not current <= set(M.ground_set):
        raise MatroidError("subset leaves the ground set")
    changed = True
    while changed:
        changed = False
        for sup in M.circuit_supports:
            sup_set = set(sup)
            outside = sup_set - current
            if len(outside) == 1:
                current |= outside
                changed = True
    return Flat(tuple(sorted(current)), M.rank_of(current))


@lru_cache(maxsize=64)
def all_flats(M: OrientedMatroid) -> tuple[Flat, ...]:
    """Every flat of the underlying matroid, graded by rank.

    Walks the lattice upward: the flats covering F are the closures of
    F + {e} over e outside F.
    """
    bottom = closure((), M)
    flats = {bottom.as_set: bottom}
    frontier = [bottom]
    while frontier:
        nxt: dict[frozenset[int], Flat] = {}
        for F in frontier:
            for e in M.ground_set:
                if e in F.as_set:
                    continue
                cover = closure(F.as_set | {e}, M)
                if cover.as_set not in flats:
                    nxt[cover.as_set] = cover
        flats.update(nxt)
        frontier = list(nxt.values())
    return tuple(sorted(flats.values(), key=lambda f: (f.rank, f.elements)))


@lru_cache(maxsize=64)
def maximal_flags(M: OrientedMatroid) -> tuple[FlagOfFlats, ...]:
    """All chains of proper nonempty flats of ranks 1, 2, ..., rank(M)-1."""
    flats = all_flats(M)
    top_rank = M.rank
    by_rank: dict[int, list[Flat]] = {}
    for f in flats:
        if f.elements and f.rank < top_rank and f.rank >= 1:
            by_rank.setdefault(f.rank, []).append(f)
    if top_rank <= 1:
        return (FlagOfFlats(()),)

    out: list[FlagOfFlats] = []

    def extend(prefix: list[Flat]):
        depth = len(prefix) + 1
        if depth > top_rank - 1:
            out.append(FlagOfFlats(tuple(prefix)))
            return
        for f in by_rank.get(depth, []):
            if not prefix or prefix[-1].as_set < f.as_set:
                extend(prefix + [f])

    extend([])
    return tuple(out)
