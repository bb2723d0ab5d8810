"""Command-line front end.

Subcommands: invariant, dist, matrix, path, discontinuity, design, rsd,
reduce. Lattices stream in as JSON Lines ({"id": ..., "basis": [[a, b],
[c, d]]}) or CSV (columns id,v1x,v1y,v2x,v2y); numeric output is printed
with 17 significant digits so that parsing it back is lossless.

Exit codes: 0 success, 1 input error, 2 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from contextlib import ExitStack
from typing import IO, Iterator, NamedTuple

from lat2d import design as design_mod
from lat2d import invariants as inv
from lat2d import metrics, neighbors
from lat2d.errors import (
    DegenerateBasis,
    DegeneratePath,
    InvalidParams,
    LatticeError,
    NonTermination,
)
from lat2d.geometry import Basis, Superbase, Vec2, norm, reduce_to_obtuse

MODES = ("isometry", "rigid", "similarity", "similarity-oriented")


class LatticeRecord(NamedTuple):
    id: str
    basis: Basis


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_q(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        q = float(text)
    except ValueError:
        raise InvalidParams(f"cannot parse Minkowski parameter {text!r}")
    if not q >= 1.0:
        raise InvalidParams(f"Minkowski parameter must be >= 1, got {text}")
    return q


def _parse_basis(obj) -> Basis:
    try:
        (a, b), (c, d) = obj
        return Basis(Vec2(float(a), float(b)), Vec2(float(c), float(d)))
    except (TypeError, ValueError) as exc:
        raise InvalidParams(f"cannot parse basis from {obj!r}: {exc}")


def parse_record(line: str) -> LatticeRecord:
    """Parse a single JSONL or CSV lattice record."""
    line = line.strip()
    if line.startswith("{"):
        obj = json.loads(line)
        return LatticeRecord(str(obj["id"]), _parse_basis(obj["basis"]))
    parts = next(csv.reader([line]))
    if len(parts) != 5:
        raise InvalidParams(f"CSV record needs 5 columns, got {len(parts)}")
    return LatticeRecord(
        parts[0],
        Basis(
            Vec2(float(parts[1]), float(parts[2])),
            Vec2(float(parts[3]), float(parts[4])),
        ),
    )


def emit_record(rec: LatticeRecord) -> str:
    """Serialize a record as JSONL; parse_record inverts this losslessly."""
    basis = [[rec.basis.v1.x, rec.basis.v1.y], [rec.basis.v2.x, rec.basis.v2.y]]
    return json.dumps({"id": rec.id, "basis": basis})


def _record_lines(stream: IO[str]) -> Iterator[str]:
    for line in stream:
        line = line.strip()
        if not line:
            continue
        if not line.startswith("{"):
            if line.split(",", 1)[0].strip().lower() == "id":
                continue  # CSV header
        yield line


def read_records(stream: IO[str]) -> Iterator[LatticeRecord]:
    """Iterate lattice records from a JSONL or CSV stream."""
    for line in _record_lines(stream):
        yield parse_record(line)


def _streams(args, stack: ExitStack) -> tuple[IO[str], IO[str]]:
    src = stack.enter_context(open(args.infile)) if args.infile else sys.stdin
    dst = (
        stack.enter_context(open(args.outfile, "w"))
        if args.outfile
        else sys.stdout
    )
    return src, dst


def _superbase_json(s: Superbase) -> list[list[float]]:
    return [[v.x, v.y] for v in s]


def _invariant_payload(rec: LatticeRecord) -> dict:
    s = reduce_to_obtuse(rec.basis)
    ri = inv.root_invariant(s)
    sign = inv.sign_of(s)
    pi = inv.projected_invariant(ri)
    q11, q12, q22 = inv.metric_tensor(ri)
    return {
        "id": rec.id,
        "superbase": _superbase_json(s),
        "ri": list(ri),
        "sign": sign,
        "size": inv.size(ri),
        "pi": list(pi),
        "pi_sign": sign,
        "metric_tensor": [q11, q12, q22],
        "cell_area": design_mod.cell_area(ri),
    }


def cmd_invariant(args) -> int:
    failed = False
    with ExitStack() as stack:
        src, out = _streams(args, stack)
        for line in _record_lines(src):
            rec_id = "?"
            try:
                rec = parse_record(line)
                rec_id = rec.id
                out.write(json.dumps(_invariant_payload(rec)) + "\n")
            except NonTermination:
                raise
            except (LatticeError, ValueError, KeyError) as exc:
                failed = True
                out.write(json.dumps({"id": rec_id, "error": str(exc)}) + "\n")
    return 1 if failed else 0


def _record_invariants(rec: LatticeRecord) -> dict:
    s = reduce_to_obtuse(rec.basis)
    ri = inv.root_invariant(s)
    return {
        "id": rec.id,
        "ri": ri,
        "sign": inv.sign_of(s),
        "pi": inv.projected_invariant(ri),
    }


def _mode_value(a: dict, b: dict, mode: str, q: float) -> float:
    if mode == "isometry":
        return metrics.root_metric(a["ri"], b["ri"], q)
    if mode == "rigid":
        return metrics.oriented_root_metric(
            inv.OrientedRootInvariant(a["ri"], a["sign"]),
            inv.OrientedRootInvariant(b["ri"], b["sign"]),
            q,
        )
    if mode == "similarity":
        return metrics.projected_metric(a["pi"], b["pi"], q)
    if mode == "similarity-oriented":
        return metrics.oriented_projected_metric(
            inv.OrientedProjectedInvariant(a["pi"], a["sign"]),
            inv.OrientedProjectedInvariant(b["pi"], b["sign"]),
            q,
        )
    raise InvalidParams(f"unknown mode {mode!r}")


def cmd_dist(args) -> int:
    q = _parse_q(args.q)
    with ExitStack() as stack:
        if args.basis_a and args.basis_b:
            recs = [
                LatticeRecord("a", _parse_basis(json.loads(args.basis_a))),
                LatticeRecord("b", _parse_basis(json.loads(args.basis_b))),
            ]
            out = (
                stack.enter_context(open(args.outfile, "w"))
                if args.outfile
                else sys.stdout
            )
        else:
            src, out = _streams(args, stack)
            recs = list(read_records(src))
            if len(recs) < 2:
                raise InvalidParams("dist needs two lattice records")
            recs = recs[:2]
        data = [_record_invariants(r) for r in recs]
        out.write(_fmt(_mode_value(data[0], data[1], args.mode, q)) + "\n")
    return 0


def cmd_matrix(args) -> int:
    q = _parse_q(args.q)
    with ExitStack() as stack:
        src, out = _streams(args, stack)
        recs = list(read_records(src))
        if len(recs) < 2:
            raise InvalidParams("matrix needs at least two records")
        data = [_record_invariants(r) for r in recs]
        n = len(data)
        cells = [["0"] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                value = _fmt(_mode_value(data[i], data[j], args.mode, q))
                cells[i][j] = value
                cells[j][i] = value
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id"] + [d["id"] for d in data])
        for i, d in enumerate(data):
            writer.writerow([d["id"]] + cells[i])
    return 0


def _path_bases(args) -> list[tuple[float, Basis]]:
    samples = args.samples
    if samples < 2:
        raise InvalidParams(f"samples must be >= 2, got {samples}")
    if args.preset == "deformation":
        start = Basis(Vec2(1.0, 0.0), Vec2(0.0, 1.0))
        end = Basis(Vec2(1.0, 0.0), Vec2(1.0, 1.0))
    elif args.start and args.end:
        start = _parse_basis(json.loads(args.start))
        end = _parse_basis(json.loads(args.end))
    else:
        raise InvalidParams("path needs --preset deformation or --start/--end")
    out = []
    for i in range(samples):
        t = i / (samples - 1)
        u = 1.0 - t
        basis = Basis(
            Vec2(u * start.v1.x + t * end.v1.x, u * start.v1.y + t * end.v1.y),
            Vec2(u * start.v2.x + t * end.v2.x, u * start.v2.y + t * end.v2.y),
        )
        out.append((t, basis))
    return out


def cmd_path(args) -> int:
    with ExitStack() as stack:
        out = (
            stack.enter_context(open(args.outfile, "w"))
            if args.outfile
            else sys.stdout
        )
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["t", "r12", "r01", "r02", "x", "y", "sign",
             "rb1x", "rb1y", "rb2x", "rb2y"]
        )
        for t, basis in _path_bases(args):
            try:
                s = reduce_to_obtuse(basis)
            except DegenerateBasis as exc:
                raise DegeneratePath(f"degenerate basis at t={t}: {exc}")
            ri = inv.root_invariant(s)
            pi = inv.projected_invariant(ri)
            rb = inv.reduced_basis(s, "rigid-motion")
            writer.writerow(
                [_fmt(t)]
                + [_fmt(v) for v in ri]
                + [_fmt(pi.x), _fmt(pi.y), str(inv.sign_of(s))]
                + [_fmt(rb.v1.x), _fmt(rb.v1.y), _fmt(rb.v2.x), _fmt(rb.v2.y)]
            )
    return 0


def discontinuity_superbases(
    a: float, b: float, delta: float
) -> tuple[Superbase, Superbase]:
    """Mirror pair of near-rectangular superbases for an a x b cell."""
    if not (0.0 <= 3.0 * delta < a < b):
        raise InvalidParams(
            f"need 0 <= 3*delta < a < b, got delta={delta}, a={a}, b={b}"
        )
    plus = Superbase(Vec2(delta - a, -b), Vec2(a, 0.0), Vec2(-delta, b))
    minus = Superbase(Vec2(-delta, -b), Vec2(a, 0.0), Vec2(delta - a, b))
    return plus, minus


def cmd_discontinuity(args) -> int:
    deltas = [float(t) for t in args.deltas.split(",") if t.strip()]
    if not deltas:
        raise InvalidParams("no deltas given")
    with ExitStack() as stack:
        out = (
            stack.enter_context(open(args.outfile, "w"))
            if args.outfile
            else sys.stdout
        )
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["delta", "rm_inf_oriented", "cm_inf", "sim_inf_oriented",
             "lower_bound"]
        )
        for delta in deltas:
            plus, minus = discontinuity_superbases(args.a, args.b, delta)
            rm = metrics.oriented_root_metric(
                inv.oriented_root_invariant(plus),
                inv.oriented_root_invariant(minus),
                math.inf,
            )
            cm = metrics.coform_cyclic_metric(plus, minus)
            sim = metrics.superbase_isometry_metric(plus, minus, oriented=True)
            max_len = max(norm(v) for s in (plus, minus) for v in s)
            writer.writerow(
                [_fmt(delta), _fmt(rm), _fmt(cm), _fmt(sim),
                 _fmt(cm / (2.0 * max_len))]
            )
    return 0


def cmd_design(args) -> int:
    pi = inv.ProjectedInvariant(args.x, args.y)
    ri = design_mod.ri_from_pi(pi, args.sigma)
    s = design_mod.superbase_from_ri(ri, args.sign)
    with ExitStack() as stack:
        out = (
            stack.enter_context(open(args.outfile, "w"))
            if args.outfile
            else sys.stdout
        )
        out.write(
            json.dumps(
                {
                    "ri": list(ri),
                    "sign": args.sign,
                    "size": inv.size(ri),
                    "superbase": _superbase_json(s),
                    "cell_area": design_mod.cell_area(ri),
                }
            )
            + "\n"
        )
    return 0


def cmd_rsd(args) -> int:
    if args.k < 1:
        raise InvalidParams(f"k must be positive, got {args.k}")
    with ExitStack() as stack:
        src, out = _streams(args, stack)
        recs = list(read_records(src))
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id"] + [f"d{i}" for i in range(1, args.k + 1)])
        for rec in recs:
            s = reduce_to_obtuse(rec.basis)
            seq = neighbors.rsd(s, args.k)
            writer.writerow([rec.id] + [_fmt(v) for v in seq.distances])
    return 0


def cmd_reduce(args) -> int:
    failed = False
    with ExitStack() as stack:
        src, out = _streams(args, stack)
        for line in _record_lines(src):
            rec_id = "?"
            try:
                rec = parse_record(line)
                rec_id = rec.id
                s = reduce_to_obtuse(rec.basis)
                out.write(
                    json.dumps({"id": rec.id, "superbase": _superbase_json(s)})
                    + "\n"
                )
            except NonTermination:
                raise
            except (LatticeError, ValueError, KeyError) as exc:
                failed = True
                out.write(json.dumps({"id": rec_id, "error": str(exc)}) + "\n")
    return 1 if failed else 0


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", help="input file (default: stdin)")
    p.add_argument("--out", dest="outfile", help="output file (default: stdout)")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lat2d",
        description="Continuous invariants, metrics and chiralities of 2D lattices",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariant", help="reduce lattices and emit invariants")
    _add_io(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("dist", help="distance between two lattices")
    _add_io(sp)
    sp.add_argument("--basis-a", help="first basis as JSON [[a,b],[c,d]]")
    sp.add_argument("--basis-b", help="second basis as JSON")
    sp.add_argument("--mode", choices=MODES, default="isometry")
    sp.add_argument("--q", default="inf", help="Minkowski parameter (>= 1 or inf)")
    sp.set_defaults(func=cmd_dist)

    sp = sub.add_parser("matrix", help="pairwise distance matrix as CSV")
    _add_io(sp)
    sp.add_argument("--mode", choices=MODES, default="isometry")
    sp.add_argument("--q", default="inf")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("path", help="invariant trace along a basis deformation")
    _add_io(sp)
    sp.add_argument("--preset", choices=["deformation"])
    sp.add_argument("--start", help="start basis as JSON [[a,b],[c,d]]")
    sp.add_argument("--end", help="end basis as JSON")
    sp.add_argument("--samples", type=int, default=101)
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser(
        "discontinuity",
        help="mirror-pair table: invariant distance vs superbase distance",
    )
    _add_io(sp)
    sp.add_argument("--a", type=float, default=1.0)
    sp.add_argument("--b", type=float, default=2.0)
    sp.add_argument("--deltas", default="0.1,0.01,0.001")
    sp.set_defaults(func=cmd_discontinuity)

    sp = sub.add_parser("design", help="build a lattice from (x, y, sigma, sign)")
    _add_io(sp)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--y", type=float, required=True)
    sp.add_argument("--sigma", type=float, required=True)
    sp.add_argument("--sign", type=int, default=0, choices=[-1, 0, 1])
    sp.set_defaults(func=cmd_design)

    sp = sub.add_parser("rsd", help="reduced sequence of neighbour distances")
    _add_io(sp)
    sp.add_argument("--k", type=int, default=16)
    sp.set_defaults(func=cmd_rsd)

    sp = sub.add_parser("reduce", help="reduce bases to obtuse superbases")
    _add_io(sp)
    sp.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except NonTermination as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LatticeError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
