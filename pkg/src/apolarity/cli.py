"""Command-line interface binding the library modules.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Every subcommand accepts --json for machine output and --out to write the
report to a file; outputs are deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bounds as bounds_mod
from .apolar import annihilator_generators, annihilator_stabilized, diff_space, local_scheme
from .enumeration import admissible_decompositions
from .hilbert import embedding_dims, hilbert_function, symmetric_decomposition
from .poly import DUAL, PRIMAL, ParseError, Polynomial, parse, poly_str
from .selftest import run_selftest
from .witness import LENGTH_NOTE, cusp_witness, exotic_extend, random_general_cubic


class SystemExit2(Exception):
    """Usage error detected after argparse; exits with status 2."""


def _add_common(sub, base_default: int):
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub.add_argument("--out", metavar="PATH", help="write the report to PATH")
    sub.add_argument(
        "--base",
        type=int,
        choices=(0, 1),
        default=base_default,
        help=f"variable index base (default {base_default})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apolarity",
        description=(
            "Exact apolarity computations: spaces of partials, Hilbert-function "
            "decompositions, admissible-decomposition enumeration, and cactus-rank "
            "bound verification for cubic forms."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("diff", help="dimension and Hilbert function of Diff(f)")
    p.add_argument("--f", required=True, help="polynomial, e.g. 'x1^2*x2 + x2^2'")
    p.add_argument("--nvars", type=int, required=True)
    _add_common(p, 1)

    p = commands.add_parser("hilbert", help="Hilbert function and symmetric decomposition")
    p.add_argument("--f", required=True)
    p.add_argument("--nvars", type=int, required=True)
    _add_common(p, 1)

    p = commands.add_parser("annihilator", help="dual polynomials killing f, up to a degree")
    p.add_argument("--f", required=True)
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None,
                   help="degree bound (default deg f + 1)")
    _add_common(p, 1)

    p = commands.add_parser(
        "local-length", help="natural apolar scheme of a form at a linear support"
    )
    p.add_argument("--f", required=True, help="homogeneous form (variables from x0)")
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--at", required=True, metavar="LINEAR", help="support linear form")
    _add_common(p, 0)

    p = commands.add_parser("enumerate", help="admissible (H, Delta) candidates for a length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nonsmoothable-only", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    _add_common(p, 1)

    p = commands.add_parser("bounds", help="dimension bound v(3, Delta, n) per candidate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int, help="evaluate all candidates of this length")
    p.add_argument("--f", help="or: evaluate the decomposition of this polynomial")
    p.add_argument("--nvars", type=int, help="variable count for --f")
    p.add_argument("--nonsmoothable-only", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    _add_common(p, 1)

    p = commands.add_parser("verify-theorem", help="generic-cubic cactus rank verification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-filter", action="store_true",
                   help="include smoothable candidates (informational)")
    p.add_argument("--threads", type=int, default=1)
    _add_common(p, 1)

    p = commands.add_parser("exotic-extend", help="hidden-variable extension of f")
    p.add_argument("--f", required=True)
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--phi", action="append", default=[], required=False,
                   help="dual operator of order >= 2 (repeatable)")
    _add_common(p, 1)

    p = commands.add_parser("cusp-witness", help="length <= 7 apolar witness for a cubic surface")
    p.add_argument("--f", help="cubic in x0, x1, x2 with nonzero x2^3 coefficient")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=0, help="additional random general cubics")
    _add_common(p, 0)

    p = commands.add_parser("selftest", help="re-run the built-in worked examples")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH")

    return parser


def _emit(args, text_lines, payload) -> None:
    if getattr(args, "json", False):
        output = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    else:
        output = "\n".join(text_lines) + "\n"
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)


def _parse_poly(text: str, nvars: int, side: str, base: int) -> Polynomial:
    return parse(text, nvars, side=side, base=base)


def _cmd_diff(args) -> int:
    f = _parse_poly(args.f, args.nvars, PRIMAL, args.base)
    space = diff_space(f)
    lines = [
        f"dim_Diff = {space.dim}",
        "hilbert = (" + ",".join(map(str, space.hilbert_values())) + ")",
        "partials (degree, order):",
    ]
    for row, degree, order in zip(space.rows, space.degrees, space.orders):
        lines.append(f"  ({degree}, {order})  {poly_str(row, base=args.base)}")
    payload = {
        "dim": space.dim,
        "hilbert": list(space.hilbert_values()),
        "partials": [
            {"degree": d, "order": o, "partial": poly_str(r, base=args.base)}
            for r, d, o in zip(space.rows, space.degrees, space.orders)
        ],
    }
    _emit(args, lines, payload)
    return 0


def _cmd_hilbert(args) -> int:
    f = _parse_poly(args.f, args.nvars, PRIMAL, args.base)
    decomposition = symmetric_decomposition(f)
    dims = embedding_dims(decomposition)
    lines = [
        decomposition.arrow_str(),
        "embedding_dims = (" + ",".join(map(str, dims)) + ")",
    ]
    payload = {
        "H": list(decomposition.hilbert()),
        "d": decomposition.d,
        "deltas": [list(r) for r in decomposition.trimmed_rows()],
        "embedding_dims": list(dims),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_annihilator(args) -> int:
    f = _parse_poly(args.f, args.nvars, PRIMAL, args.base)
    max_degree = args.max_degree if args.max_degree is not None else int(f.degree()) + 1
    generators = annihilator_generators(f, max_degree)
    stabilized = annihilator_stabilized(f, max_degree, generators)
    lines = [f"kernel dimension (degree <= {max_degree}) = {len(generators)}",
             f"stabilized = {stabilized}"]
    lines += ["  " + poly_str(g, base=args.base) for g in generators]
    payload = {
        "max_degree": max_degree,
        "generators": [poly_str(g, base=args.base) for g in generators],
        "stabilized": stabilized,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_local_length(args) -> int:
    F = _parse_poly(args.f, args.nvars, PRIMAL, args.base)
    support = _parse_poly(args.at, args.nvars, PRIMAL, args.base)
    scheme = local_scheme(F, support)
    lines = [
        f"length = {scheme.length}",
        "hilbert = (" + ",".join(map(str, scheme.hilbert)) + ")",
        f"apolarity_checked = {scheme.apolarity_checked}",
        f"stabilized = {scheme.stabilized}",
        f"annihilator ({len(scheme.annihilator)} generators):",
    ]
    lines += ["  " + poly_str(g, base=1) for g in scheme.annihilator]
    _emit(args, lines, scheme.as_dict(base=1))
    return 0


def _cmd_enumerate(args) -> int:
    candidates = admissible_decompositions(
        args.length, args.n,
        nonsmoothable_only=args.nonsmoothable_only,
        threads=args.threads,
    )
    lines = [c.decomposition.arrow_str() for c in candidates]
    lines.append(f"total = {len(candidates)}")
    if args.json:
        output = "".join(json.dumps(c.as_dict()) + "\n" for c in candidates)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(output)
        else:
            sys.stdout.write(output)
        return 0
    _emit(args, lines, None)
    return 0


def _cmd_bounds(args) -> int:
    reports = []
    if args.f:
        if args.nvars is None:
            raise SystemExit2("--nvars is required with --f")
        f = _parse_poly(args.f, args.nvars, PRIMAL, args.base)
        reports.append(bounds_mod.v_bound(symmetric_decomposition(f), args.n))
    elif args.length is not None:
        for candidate in admissible_decompositions(
            args.length, args.n,
            nonsmoothable_only=args.nonsmoothable_only,
            threads=args.threads,
        ):
            reports.append(bounds_mod.v_bound(candidate.decomposition, args.n))
    else:
        raise SystemExit2("one of --length or --f is required")
    lines = []
    for r in reports:
        h = "(" + ",".join(map(str, r.hilbert)) + ")"
        w = "-" if r.w is None else str(r.w)
        margin = "-" if r.margin is None else str(r.margin)
        lines.append(
            f"H={h} v={r.v} (v_theta={r.v_theta} d_flag={r.d_flag} "
            f"d_infty={r.d_infty}) w={w} margin={margin}"
        )
    lines.append(bounds_mod.BINOMIAL_GROUPING_NOTE)
    _emit(args, lines, [r.as_dict() for r in reports])
    return 0


def _cmd_verify_theorem(args) -> int:
    report = bounds_mod.verify_theorem(
        args.n, nonsmoothable_only=not args.no_filter, threads=args.threads
    )
    lines = []
    if not report.in_scope:
        lines.append(f"note: n={args.n} is outside the verified range 7..8; informational only")
    lines.append(f"{'l':>3} {'r':>3} {'v':>5} {'thr':>5} {'margin':>6}  H -> decomposition")
    for row in report.rows:
        h = "(" + ",".join(map(str, row.hilbert)) + ")"
        deltas = ",".join("(" + ",".join(map(str, d)) + ")" for d in row.deltas if any(d))
        lines.append(
            f"{row.l:>3} {row.r:>3} {row.v:>5} {row.threshold:>5} {row.margin:>6}  {h} -> {deltas}"
        )
    for r, (h, v) in sorted(report.max_v_by_length.items()):
        match = report.conjectured_extremal[r][1]
        lines.append(
            f"max v at length {r}: H=({','.join(map(str, h))}) v={v}"
            f" (matches conjectured extremal: {match})"
        )
    lines.append(f"worst margin = {report.worst_margin}")
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(f"{verdict} n={report.n} cactus_rank={report.cactus_rank}")
    _emit(args, lines, report.as_dict())
    return 0 if report.passed else 1


def _cmd_exotic_extend(args) -> int:
    f = _parse_poly(args.f, args.nvars, PRIMAL, args.base)
    phis = [_parse_poly(text, args.nvars, DUAL, args.base) for text in args.phi]
    extended = exotic_extend(f, phis)
    h_before = hilbert_function(f).values
    h_after = hilbert_function(extended).values
    lines = [
        f"f~ = {poly_str(extended, base=args.base)}",
        f"hilbert preserved = {h_before == h_after} "
        f"({','.join(map(str, h_after))})",
    ]
    payload = {
        "extended": poly_str(extended, base=args.base),
        "nvars": extended.nvars,
        "hilbert": list(h_after),
        "hilbert_preserved": h_before == h_after,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_cusp_witness(args) -> int:
    reports = []
    failures = 0
    if args.f:
        reports.append(("input", cusp_witness(_parse_poly(args.f, 3, PRIMAL, args.base))))
    rng = random.Random(args.seed)
    for index in range(args.trials):
        report = cusp_witness(random_general_cubic(rng))
        reports.append((f"trial {index}", report))
    if not reports:
        raise SystemExit2("provide --f and/or --trials N")
    lines = []
    for label, report in reports:
        ok = report.length_g <= 7 and report.apolar_ok
        if report.general_signature and report.length_f != 8:
            ok = False
        if not ok:
            failures += 1
        lines.append(
            f"{label}: f = {poly_str(report.cubic, base=0)}\n"
            f"  length_G_scheme = {report.length_g} (<= 7: {report.length_g <= 7}), "
            f"local H = ({','.join(map(str, report.local_hilbert_g))}), "
            f"apolar = {report.apolar_ok}, "
            f"general = {report.general_signature}, length_F_scheme = {report.length_f}"
        )
    lines.append(LENGTH_NOTE)
    lines.append(f"failures = {failures} / {len(reports)}")
    payload = {
        "reports": [dict(r.as_dict(), label=label) for label, r in reports],
        "failures": failures,
    }
    _emit(args, lines, payload)
    return 0 if failures == 0 else 1


_HANDLERS = {
    "diff": _cmd_diff,
    "hilbert": _cmd_hilbert,
    "annihilator": _cmd_annihilator,
    "local-length": _cmd_local_length,
    "enumerate": _cmd_enumerate,
    "bounds": _cmd_bounds,
    "verify-theorem": _cmd_verify_theorem,
    "exotic-extend": _cmd_exotic_extend,
    "cusp-witness": _cmd_cusp_witness,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "selftest":
        return run_selftest(json_output=args.json, out_path=args.out)
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except SystemExit2 as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ParseError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
