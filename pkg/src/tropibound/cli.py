"""Command-line entry points: parse structured input documents, dispatch
to the pipeline, render human- and machine-readable reports.

Exit codes: 0 success (certified where certification applies), 2 computed
but not certified, 1 error.  Machine output is deterministic: exact
fraction strings, sorted keys, fixed layout.  Human output may show
decimal approximations, always marked as such.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from tropibound import _util
from tropibound.bergman import (
    compare_with_coarse,
    fine_fan,
    positive_fan,
    sample_relative_interior,
)
from tropibound.intersection import InputValidationError, lower_bound
from tropibound.matroid import MatroidError, all_flats, realize_from_kernel
from tropibound.numeric import InstantiationError, count_roots
from tropibound.rational import RationalMatrix
from tropibound.subdivision import SubdivisionError, decorated_count, full_cells
from tropibound.systems import CRNModel, SystemError_, VerticalSystem, assemble_crn, bound


class CliInputError(ValueError):
    pass


def _fraction(value, path: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise CliInputError(f"{path}: expected an integer or fraction string, got {value!r}")
    try:
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliInputError(f"{path}: malformed fraction {value!r} ({exc})") from None
    raise CliInputError(f"{path}: expected an integer or fraction string, got {value!r}")


def _matrix(rows, path: str, integer: bool = False) -> RationalMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise CliInputError(f"{path}: expected a non-empty list of rows")
    width = len(rows[0])
    parsed = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise CliInputError(f"{path}[{i}]: ragged row (expected {width} entries)")
        parsed.append([_fraction(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)])
    M = RationalMatrix.from_rows(parsed)
    if integer and not M.is_integer():
        raise CliInputError(f"{path}: entries must be integers")
    return M


def _vector(values, path: str) -> list[Fraction]:
    if not isinstance(values, list):
        raise CliInputError(f"{path}: expected a list")
    return [_fraction(x, f"{path}[{j}]") for j, x in enumerate(values)]


def parse_input(path: str):
    """Parse a structured input document into the object its kind names.

    Returns a RationalMatrix, VerticalSystem, or CRNModel.
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path}: not valid JSON (line {exc.lineno}: {exc.msg})") from None
    if not isinstance(doc, dict) or "kind" not in doc:
        raise CliInputError(f"{path}: top-level object with a 'kind' field required")
    kind = doc["kind"]
    try:
        if kind == "matrix":
            return _matrix(doc.get("matrix"), "matrix")
        if kind == "vertical_system":
            C = _matrix(doc.get("C"), "C")
            A = _matrix(doc.get("A"), "A", integer=True)
            h = _vector(doc.get("h"), "h")
            return VerticalSystem(C, A, tuple(h))
        if kind == "crn":
            return CRNModel(
                N_stoich=_matrix(doc.get("N"), "N"),
                B=_matrix(doc.get("B"), "B", integer=True),
                W=_matrix(doc.get("W"), "W"),
                T=tuple(_vector(doc.get("T"), "T")),
                h=tuple(_vector(doc.get("h"), "h")),
            )
        if kind == "coarse_fan":
            rays = [_vector(ray, f"rays[{i}]") for i, ray in enumerate(doc.get("rays", []))]
            cones = doc.get("cones", [])
            if not all(isinstance(c, list) and all(isinstance(i, int) for i in c) for c in cones):
                raise CliInputError("cones: expected lists of 1-based ray indices")
            return {"rays": rays, "cones": cones}
    except (SystemError_, MatroidError) as exc:
        raise CliInputError(f"{path}: {exc}") from None
    raise CliInputError(f"{path}: unknown kind {kind!r}")


def _expect(obj, cls, command: str):
    if not isinstance(obj, cls):
        raise CliInputError(
            f"command '{command}' needs a {getattr(cls, '__name__', cls)} document,"
            f" got {type(obj).__name__}"
        )
    return obj


def _emit(doc: dict, args, human_lines: list[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.json == "-":
        sys.stdout.write(text)
        return
    for line in human_lines:
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
        print(f"machine-readable report written to {args.json}")


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _require_system(obj, command):
    if isinstance(obj, CRNModel):
        return assemble_crn(obj)
    return _expect(obj, VerticalSystem, command)


def _require_matrix(obj, command) -> RationalMatrix:
    """Matrix commands also accept system documents, using their C."""
    if isinstance(obj, RationalMatrix):
        return obj
    if isinstance(obj, VerticalSystem):
        return obj.C
    if isinstance(obj, CRNModel):
        return assemble_crn(obj).C
    raise CliInputError(
        f"command '{command}' needs a matrix, vertical_system, or crn document"
    )


def run(args) -> int:
    threads = _util.resolve_threads(args.threads)
    obj = parse_input(args.input)
    cmd = args.command

    if cmd == "circuits":
        M = realize_from_kernel(_require_matrix(obj, cmd))
        doc = M.to_document()
        lines = [f"oriented matroid on {{1..{M.ground_size}}}, rank {M.rank}"]
        lines += [f"  circuit ({set(c.positive) or '{}'}, {set(c.negative) or '{}'})" for c in M.circuits]
        _emit({"kind": "matroid", **doc}, args, lines)
        return 0

    if cmd == "flats":
        M = realize_from_kernel(_require_matrix(obj, cmd))
        flats = all_flats(M)
        doc = {
            "kind": "flats",
            "ground_size": M.ground_size,
            "flats_by_rank": {
                str(k): [list(f.elements) for f in flats if f.rank == k]
                for k in range(M.rank + 1)
            },
        }
        lines = [f"flats of the rank-{M.rank} matroid, by rank:"]
        for k in range(M.rank + 1):
            row = [set(f.elements) or "{}" for f in flats if f.rank == k]
            lines.append(f"  rank {k}: {row}")
        _emit(doc, args, lines)
        return 0

    if cmd in ("bergman", "positive-bergman"):
        M = realize_from_kernel(_require_matrix(obj, cmd))
        if cmd == "bergman":
            cones = fine_fan(M)
            doc = {
                "kind": "fan",
                "ground_size": M.ground_size,
                "cones": [
                    {
                        "flats": [list(f.elements) for f in c.flag.chain],
                        "sample": [str(x) for x in sample_relative_interior(c)],
                    }
                    for c in cones
                ],
            }
            lines = [f"fine fan: {len(cones)} maximal cones"]
        else:
            pf = positive_fan(M)
            doc = {"kind": "positive_fan", **pf.to_document()}
            lines = [
                f"positive fan: {len(pf.cones)} of {len(fine_fan(M))} maximal cones"
                + (" (free matroid: whole space)" if pf.free_matroid else "")
            ]
        if args.coarse_compare:
            coarse = parse_input(args.coarse_compare)
            if not isinstance(coarse, dict):
                raise CliInputError("--coarse-compare needs a coarse_fan document")
            cmp_doc = compare_with_coarse(M, coarse["rays"], coarse["cones"])
            doc["coarse_comparison"] = cmp_doc
            lines.append("coarse comparison:")
            for c in cmp_doc["cones"]:
                lines.append(
                    f"  cone{tuple(c['ray_indices'])}: member={c['member']}"
                    f" positive={c['positive_member']}"
                )
        _emit(doc, args, lines)
        return 0

    if cmd == "intersect":
        system = _require_system(obj, cmd)
        report = lower_bound(system.C, system.A, system.h, cross_check=args.cross_check)
        doc = {"kind": "intersection_report", **report.to_document()}
        lines = [
            f"intersection count: {report.count}"
            + (" (certified transverse)" if report.transverse else " (NOT certified)")
        ]
        for p in report.points:
            lines.append(
                f"  v = {_fmt_vec(p.v)}   w = {_fmt_vec(p.w)}"
                f"   isolated={p.isolated} interior={p.interior}"
            )
        lines += [f"  note: {note}" for note in report.notes]
        _emit(doc, args, lines)
        return 0 if report.transverse else 2

    if cmd == "subdivision":
        system = _require_system(obj, cmd)
        cells = full_cells(system.A, system.h)
        doc = {
            "kind": "subdivision",
            "cells": [
                {"members": list(c.members), "witness": [str(x) for x in c.witness]}
                for c in cells
            ],
            "is_triangulation": all(len(c.members) == system.n + 1 for c in cells),
        }
        lines = [f"regular subdivision: {len(cells)} full-dimensional cells"]
        for c in cells:
            lines.append(f"  cell {set(c.members)}  witness v = {_fmt_vec(c.witness)}")
        _emit(doc, args, lines)
        return 0

    if cmd == "decorated":
        system = _require_system(obj, cmd)
        Ct = system.reduced_coefficients()
        if Ct.rows != system.n:
            raise CliInputError(
                f"rank(C) = {Ct.rows} differs from n = {system.n}; no decorated bound"
            )
        count, simplices = decorated_count(Ct, system.A, system.h)
        doc = {
            "kind": "decorated",
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
        lines = [f"positively decorated simplices: {count}"]
        for s in simplices:
            lines.append(
                f"  cell {set(s.cell.members)}  kernel {_fmt_vec(s.kernel_vector)}"
            )
        _emit(doc, args, lines)
        return 0

    if cmd in ("bound", "crn"):
        if cmd == "crn":
            model = _expect(obj, CRNModel, cmd)
            system = assemble_crn(model)
        else:
            system = _require_system(obj, cmd)
        report = bound(system, cross_check=args.cross_check)
        doc = {"kind": "bound_report", **report.to_document()}
        lines = [f"certified lower bound on positive real roots: {report.certified_bound}"]
        lines.append(
            f"  tropical count: {report.tropical.count}"
            + (" (transverse)" if report.tropical.transverse else " (not certified)")
        )
        if report.decorated is not None:
            lines.append(f"  decorated-simplex count: {report.decorated[0]}")
        lines += [f"  note: {note}" for note in report.method_notes]
        _emit(doc, args, lines)
        return 0 if report.tropical.transverse else 2

    if cmd == "verify":
        system = _require_system(obj, cmd)
        report = lower_bound(system.C, system.A, system.h)
        witnesses = count_roots(
            system,
            args.t,
            report,
            tol=args.tol,
            multistarts=args.multistarts,
            seed=args.seed,
            threads=threads,
        )
        target = report.count if report.transverse else 0
        doc = {
            "kind": "witnesses",
            "t": args.t,
            "empirical": True,
            "certified_bound": target,
            "witnesses": [
                {
                    "x": list(w.x),
                    "residual": w.residual,
                    "jacobian_ok": w.jacobian_condition_flag,
                    "seed_origin": w.seed_origin,
                }
                for w in witnesses
            ],
        }
        lines = [
            f"empirical witnesses at t = {args.t}: {len(witnesses)} distinct positive"
            f" roots (certified bound {target}); heuristic, not a certificate"
        ]
        for w in witnesses:
            approx = ", ".join(f"{v:.6g}" for v in w.x)
            lines.append(
                f"  x ~ ({approx})  residual {w.residual:.2e}  from {w.seed_origin}"
            )
        _emit(doc, args, lines)
        return 0 if len(witnesses) >= target else 2

    raise CliInputError(f"unknown command {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropibound",
        description=(
            "Exact lower bounds on positive real roots of vertically"
            " parametrized polynomial systems"
        ),
    )
    parser.add_argument(
        "command",
        choices=[
            "circuits",
            "flats",
            "bergman",
            "positive-bergman",
            "intersect",
            "subdivision",
            "decorated",
            "bound",
            "crn",
            "verify",
        ],
    )
    parser.add_argument("input", help="path to a JSON input document")
    parser.add_argument("--json", metavar="PATH", help="write machine-readable JSON ('-' for stdout only)")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (or TROPIBOUND_THREADS)")
    parser.add_argument("--cross-check", action="store_true", help="also run the vertex oracle and compare")
    parser.add_argument("--coarse-compare", metavar="PATH", help="coarse fan document to diff against (bergman commands)")
    parser.add_argument("--t", type=float, default=0.01, help="parameter value for verify")
    parser.add_argument("--tol", type=float, default=1e-9, help="residual tolerance for verify")
    parser.add_argument("--multistarts", type=int, default=16, help="random Newton seeds for verify")
    parser.add_argument("--seed", type=int, default=0, help="pseudorandom seed for verify")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (
        CliInputError,
        InputValidationError,
        MatroidError,
        SystemError_,
        SubdivisionError,
        InstantiationError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
