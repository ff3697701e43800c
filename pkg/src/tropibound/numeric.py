"""Floating-point witness harness: instantiate the system at a concrete
small parameter value and hunt positive roots with damped Newton in log
coordinates.

This is the only module that touches floating point.  Its outputs are
empirical witnesses, never certificates: the underlying guarantee is
asymptotic in the parameter with no effective threshold, so a witness
count below the certified bound at one particular t disproves nothing.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from tropibound._util import parallel_map
from tropibound.intersection import IntersectionReport
from tropibound.systems import VerticalSystem


class InstantiationError(ValueError):
    pass


@dataclass(frozen=True)
class InstantiatedSystem:
    """Square system at a fixed t: shared monomial columns, per-equation
    coefficients C_ij * t^(h_j) in double precision."""

    n: int
    coefficients: np.ndarray  # shape (n, r)
    exponents: np.ndarray  # shape (r, n), column j of A as row j
    t: float

    @property
    def terms(self) -> list[list[tuple[float, tuple[int, ...]]]]:
        return [
            [
                (float(self.coefficients[i, j]), tuple(int(e) for e in self.exponents[j]))
                for j in range(self.exponents.shape[0])
            ]
            for i in range(self.n)
        ]

    def evaluate_log(self, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
        """Values, term magnitudes scale, and scaled residual at x = exp(y).

        The residual is the max-norm of the system value divided per
        equation by the largest term magnitude (floored at 1), i.e. the
        achieved cancellation; an absolute residual would be meaningless
        across the huge coefficient ranges small-t instances produce.
        """
        with np.errstate(over="ignore", invalid="ignore"):
            m = np.exp(self.exponents @ y)
            terms = self.coefficients * m
            values = terms.sum(axis=1)
        scale = np.maximum(np.abs(terms).max(axis=1), 1.0)
        if not np.all(np.isfinite(values)):
            return values, m, math.inf
        residual = float(np.max(np.abs(values) / scale))
        return values, m, residual

    def jacobian_log(self, m: np.ndarray) -> np.ndarray:
        """d/dy of the system at x = exp(y), given monomial values m."""
        return self.coefficients @ (m[:, None] * self.exponents)


@dataclass(frozen=True)
class RootWitness:
    x: tuple[float, ...]
    residual: float
    jacobian_condition_flag: bool
    seed_origin: str


def instantiate(system: VerticalSystem, t: float) -> InstantiatedSystem:
    """Evaluate the coefficients at a concrete parameter value.

    Rejects t outside (0, 1): the bound is a small-parameter statement
    and t >= 1 inverts the meaning of the shifts.  Rows are reduced to a
    rank-selected square system first, exactly.
    """
    if not (0.0 < t < 1.0):
        raise InstantiationError(f"t must lie in (0, 1), got {t}")
    Ct = system.reduced_coefficients()
    n, r = system.n, system.r
    if Ct.rows != n:
        raise InstantiationError(
            f"rank(C) = {Ct.rows} differs from the variable count {n};"
            " no square instantiation exists"
        )
    coeffs = np.empty((n, r), dtype=float)
    for i in range(n):
        for j in range(r):
            coeffs[i, j] = float(Ct[i, j]) * t ** float(system.h[j])
    exps = np.array(
        [[int(system.A[i, j]) for i in range(n)] for j in range(r)], dtype=float
    )
    return InstantiatedSystem(n=n, coefficients=coeffs, exponents=exps, t=t)


def newton(
    F: InstantiatedSystem,
    x0: Sequence[float],
    tol: float = 1e-9,
    max_iter: int = 100,
    seed_origin: str = "manual",
) -> RootWitness | None:
    """Damped Newton on y = log x; positivity holds by construction.

    Success requires the scaled residual to drop below tol within
    max_iter iterations; None means no convergence, not nonexistence.
    """
    x0 = np.asarray(x0, dtype=float)
    if np.any(x0 <= 0) or not np.all(np.isfinite(x0)):
        raise ValueError("seed must be strictly positive and finite")
    y = np.log(x0)
    _, m, residual = F.evaluate_log(y)
    for _ in range(max_iter):
        if residual < tol:
            break
        values, m, _ = F.evaluate_log(y)
        J = F.jacobian_log(m)
        try:
            step = np.linalg.solve(J, -values)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(step)):
            return None
        lam = 1.0
        improved = False
        while lam > 2.0**-30:
            _, _, trial = F.evaluate_log(y + lam * step)
            if trial < residual:
                y = y + lam * step
                residual = trial
                improved = True
                break
            lam *= 0.5
        if not improved:
            break
    if residual >= tol:
        return None
    x = np.exp(y)
    if np.any(x <= 0) or not np.all(np.isfinite(x)):
        return None
    _, m, final_residual = F.evaluate_log(y)
    J = F.jacobian_log(m)
    cond = np.linalg.cond(J)
    return RootWitness(
        x=tuple(float(v) for v in x),
        residual=final_residual,
        jacobian_condition_flag=bool(np.isfinite(cond) and cond < 1e12),
        seed_origin=seed_origin,
    )


def tropical_seed(t: float, v: Sequence) -> list[float]:
    """Componentwise t^v: a root with valuation v behaves like this for
    small t (min convention)."""
    return [t ** float(vi) for vi in v]


def count_roots(
    system: VerticalSystem,
    t: float,
    report: IntersectionReport,
    tol: float = 1e-9,
    max_iter: int = 100,
    multistarts: int = 16,
    seed: int = 0,
    separation: float = 1e-4,
    threads: int = 1,
) -> list[RootWitness]:
    """Verified-distinct positive roots: one Newton run per intersection
    point plus random log-uniform multistarts.

    Roots are deduplicated at the given max-norm log-distance; tropical
    seeds run first so deterministic ties resolve toward them.  The
    result is an empirical witness list, not a certificate.
    """
    F = instantiate(system, t)
    seeds: list[tuple[str, list[float]]] = []
    for p in report.points:
        label = "tropical v=(" + ",".join(str(x) for x in p.v) + ")"
        seeds.append((label, tropical_seed(t, p.v)))
    rng = random.Random(seed)
    span = 1.5 * abs(math.log(t))
    for k in range(multistarts):
        y0 = [rng.uniform(-span, span) for _ in range(system.n)]
        seeds.append((f"random#{k}", [math.exp(c) for c in y0]))

    runs = parallel_map(
        lambda s: newton(F, s[1], tol=tol, max_iter=max_iter, seed_origin=s[0]),
        seeds,
        threads=threads,
    )
    witnesses: list[RootWitness] = []
    for w in runs:
        if w is None:
            continue
        logs = [math.log(v) for v in w.x]
        duplicate = False
        for kept in witnesses:
            kept_logs = [math.log(v) for v in kept.x]
            if max(abs(a - b) for a, b in zip(logs, kept_logs)) <= separation:
                duplicate = True
                break
        if not duplicate:
            witnesses.append(w)
    for w in witnesses:
        assert w.residual <= tol and all(v > 0 for v in w.x)
    return witnesses
