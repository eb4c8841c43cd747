"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 nonzero mean (rerun with
``--recenter``), 4 invariant or verification failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import io
from .decompose import decompose, reconstruct, verify
from .errors import DecompositionError, FactorizationMismatch, InternalInconsistency
from .geometry import Mode, Point, zero
from .invariants import boundary_phi, phi_at, phi_invariant
from .lottery import binomial_band, run
from .measures import FiniteDistribution, is_centered, recenter, translate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MEAN = 3
EXIT_FAILURE = 4


class CommandFailed(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CommandFailed(EXIT_INPUT, f"cannot read {path}: {e.strerror}")


def _load(args) -> FiniteDistribution:
    mode = Mode(args.mode) if args.mode else None
    try:
        return io.distribution_from_document(io.loads_json(_read(args.file)), mode)
    except DecompositionError as e:
        raise CommandFailed(EXIT_INPUT, f"invalid input: {e}")


def _centered(p: FiniteDistribution, args):
    """Return ``(centered distribution, offset)`` or fail with exit 3."""
    if is_centered(p):
        return p, Point(zero(p.mode), zero(p.mode))
    if not args.recenter:
        raise CommandFailed(
            EXIT_MEAN,
            f"mean is {p.mean}, not (0, 0); pass --recenter to shift it",
        )
    return recenter(p)


def _parse_probe(text: str, mode: Mode) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise CommandFailed(EXIT_INPUT, f"--probe expects \"x,y\", got {text!r}")
    try:
        z = io.parse_point(parts, mode, "--probe")
    except io.InputError as e:
        raise CommandFailed(EXIT_INPUT, str(e))
    if z.is_zero():
        raise CommandFailed(EXIT_INPUT, "--probe direction must be nonzero")
    return z


def cmd_phi(args, out) -> int:
    p, _ = _centered(_load(args), args)
    fmt = io.format_scalar
    if args.probe:
        d = _parse_probe(args.probe, p.mode)
        v = phi_at(p, d)
        factored = boundary_phi(p, d)
        if args.output == "json":
            doc = {
                "direction": io.format_point(d),
                "interior": fmt(v.interior),
                "boundary": fmt(v.boundary),
                "boundary_factored": fmt(factored),
                "total": fmt(v.total),
            }
            print(io.dumps(doc), file=out)
        else:
            print(f"direction  {d}", file=out)
            print(f"interior   {fmt(v.interior)}", file=out)
            print(f"boundary   {fmt(v.boundary)}", file=out)
            print(f"total      {fmt(v.total)}", file=out)
        return EXIT_OK

    report = phi_invariant(p)
    if args.output == "json":
        doc = {"phi": fmt(report.phi), **io.report_to_document(report)}
        print(io.dumps(doc), file=out)
    else:
        print(f"phi {fmt(report.phi)}", file=out)
        print(f"{'direction':<24} {'interior':>14} {'boundary':>14} {'total':>14}", file=out)
        for v in report.probes:
            print(
                f"{str(v.direction):<24} {fmt(v.interior):>14} {fmt(v.boundary):>14} {fmt(v.total):>14}",
                file=out,
            )
    if not report.consistent:
        raise CommandFailed(EXIT_FAILURE, "invariant differs between probe directions")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    p, offset = _centered(_load(args), args)
    d = decompose(p, offset)
    report = phi_invariant(p)
    if args.output == "json":
        print(io.dumps(io.decomposition_to_document(d, report)), file=out)
        return EXIT_OK
    fmt = io.format_scalar
    print(f"phi     {fmt(d.phi)}", file=out)
    print(f"offset  {d.offset}", file=out)
    for c, w in d.components:
        pts = " ".join(str(z) for z in c.points)
        masses = " ".join(fmt(m) for m in c.masses)
        print(f"{fmt(w):>12}  {c.kind.value:<11}  {pts}  masses {masses}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    original = _load(args)
    if args.decomposition:
        try:
            d = io.decomposition_from_document(io.loads_json(_read(args.decomposition)))
        except DecompositionError as e:
            raise CommandFailed(EXIT_INPUT, f"invalid decomposition: {e}")
        if d.mode is not original.mode:
            raise CommandFailed(EXIT_INPUT, "decomposition and distribution modes differ")
    else:
        p, offset = _centered(original, args)
        d = decompose(p, offset)
    r = verify(original, d)
    fmt = io.format_scalar
    if args.output == "json":
        doc = {
            "weight_sum": fmt(r.weight_sum),
            "max_atom_discrepancy": fmt(r.max_atom_discrepancy),
            "per_component_mean_ok": r.per_component_mean_ok,
            "exact_match": r.exact_match,
            "passed": r.passed,
        }
        print(io.dumps(doc), file=out)
    else:
        print(f"weight sum            {fmt(r.weight_sum)}", file=out)
        print(f"max atom discrepancy  {fmt(r.max_atom_discrepancy)}", file=out)
        print(f"component means zero  {r.per_component_mean_ok}", file=out)
        print(f"exact match           {r.exact_match}", file=out)
        print("PASS" if r.passed else "FAIL", file=out)
    return EXIT_OK if r.passed else EXIT_FAILURE


def cmd_sample(args, out) -> int:
    if args.n < 1:
        raise CommandFailed(EXIT_INPUT, "--n must be at least 1")
    p, offset = _centered(_load(args), args)
    d = decompose(p, offset)
    summary = run(d, args.n, args.seed)
    expected = translate(reconstruct(d), d.offset).as_dict()
    rows = []
    for z in sorted(set(expected) | set(summary.frequencies)):
        q = float(expected.get(z, 0))
        f = summary.frequencies.get(z, 0.0)
        band = binomial_band(q, args.n)
        rows.append((z, f, q, band, abs(f - q) <= band))
    if args.output == "json":
        doc = {
            "draws": summary.draws,
            "seed": summary.seed,
            "empirical_mean": [summary.empirical_mean.x, summary.empirical_mean.y],
            "points": [
                {"point": io.format_point(z), "frequency": f, "expected": q, "band": b, "within_band": ok}
                for z, f, q, b, ok in rows
            ],
        }
        print(io.dumps(doc), file=out)
    else:
        print(f"draws {summary.draws}  seed {summary.seed}", file=out)
        print(f"empirical mean ({summary.empirical_mean.x:.6g}, {summary.empirical_mean.y:.6g})", file=out)
        print(f"{'point':<24} {'frequency':>10} {'expected':>10} {'3-sigma':>10}", file=out)
        for z, f, q, b, ok in rows:
            flag = "" if ok else "  outside band"
            print(f"{str(z):<24} {f:>10.6f} {q:>10.6f} {b:>10.6f}{flag}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planedecomp",
        description="Decompose finite planar distributions into one-, two- and three-point "
        "mean-preserving extreme distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("file", help="input JSON document, or - for stdin")
        sp.add_argument("--mode", choices=["exact", "float"], help="override the document's mode")
        sp.add_argument("--recenter", action="store_true", help="shift a nonzero-mean input to mean zero")
        sp.add_argument("--output", choices=["table", "json"], default="table")

    sp = sub.add_parser("phi", help="compute the invariant on every probe direction")
    common(sp)
    sp.add_argument("--probe", metavar="X,Y", help="evaluate at one direction only")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("decompose", help="print the symmetric decomposition")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("verify", help="decompose, mix back, compare with the input")
    common(sp)
    sp.add_argument("--decomposition", metavar="FILE", help="check this decomposition document instead")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sample", help="run the two-step lottery")
    common(sp)
    sp.add_argument("--n", type=int, required=True, help="number of draws")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_sample)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except CommandFailed as e:
        print(f"planedecomp: {e}", file=sys.stderr)
        return e.code
    except (InternalInconsistency, FactorizationMismatch) as e:
        print(f"planedecomp: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except DecompositionError as e:
        print(f"planedecomp: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
