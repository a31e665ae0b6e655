"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 capacity exceeded, 4 verification
failure, 5 internal-consistency fault.
"""

import argparse
import json
import os
import sys

from . import analysis, serialize as ser
from .contingency import count_tables
from .exceptions import ConsistencyError, RSKError
from .linalg import (
    char_poly,
    det,
    is_diagonalizable,
    min_poly,
    squarefree_decomposition,
    squarefree_part,
    strip_pm1_factors,
    sturm_real_root_count,
    trace,
)
from .operators import build_inverse, build_matrix
from .tableaux import inverse_rsk, rsk
from .weights import block_multiplicities, normalize, reduce, weight_str

# rows of the determinant / trace grids, with the largest d computed per m
DEFAULT_D_LIMITS = {1: 9, 2: 9, 3: 7, 4: 5, 5: 4}


class Output:
    """Collects one command's payload and renders it in the chosen format."""

    def __init__(self, command, fmt, args):
        self.command = command
        self.fmt = fmt
        self.args = args
        self.payload = {}
        self.text = []
        self.csv_rows = []

    def emit(self):
        if self.fmt == "json":
            env = {"command": self.command, "format": "json", "args": self.args, "result": self.payload}
            sys.stdout.write(ser.dumps(env) + "\n")
        elif self.fmt == "csv":
            sys.stdout.write(ser.to_csv(self.csv_rows))
        else:
            sys.stdout.write("\n".join(self.text) + "\n")


def _read_literal(s):
    return sys.stdin.read() if s == "-" else s


def _poly_text(p):
    return p.to_str()


def _pm1_text(a, b, rest):
    """Factored form: (t - 1)^a (t + 1)^b times the squarefree pieces of rest."""
    parts = []
    if a:
        parts.append("(t - 1)" + (f"^{a}" if a > 1 else ""))
    if b:
        parts.append("(t + 1)" + (f"^{b}" if b > 1 else ""))
    if rest.degree > 0:
        for f, e in squarefree_decomposition(rest):
            parts.append(f"({f.to_str()})" + (f"^{e}" if e > 1 else ""))
    return " ".join(parts) or "1"


# ---- commands ------------------------------------------------------------

def cmd_apply(args, out):
    if args.inverse:
        if len(args.literal) != 2:
            raise ser.InvalidInputError("--inverse needs two tableaux: P and Q")
        p = ser.parse_tableau(_read_literal(args.literal[0]))
        q = ser.parse_tableau(_read_literal(args.literal[1]))
        alpha = inverse_rsk((p, q), args.rows, args.cols)
        out.payload = {"matrix": ser.matrix_to_json(alpha)}
        out.text.append(ser.format_matrix(alpha))
        out.csv_rows = [list(r) for r in alpha]
        return 0
    if len(args.literal) != 1:
        raise ser.InvalidInputError("apply takes one matrix literal")
    alpha = ser.parse_matrix(_read_literal(args.literal[0]))
    pq = rsk(alpha)
    out.payload = {"P": ser.tableau_to_json(pq.p), "Q": ser.tableau_to_json(pq.q),
                   "shape": list(pq.shape)}
    out.text += [f"P: {ser.format_tableau(pq.p)}", f"Q: {ser.format_tableau(pq.q)}",
                 f"shape: {list(pq.shape)}"]
    out.csv_rows = [["P"] + [";".join(",".join(map(str, r)) for r in pq.p)],
                    ["Q"] + [";".join(",".join(map(str, r)) for r in pq.q)]]
    return 0


def cmd_matrix(args, out):
    s, p = ser.parse_weight(args.sigma), ser.parse_weight(args.pi)
    mat = build_matrix(s, p)
    shown = build_inverse(s, p, matrix=mat) if args.inverse else mat
    label = "RSK^-1" if args.inverse else "RSK"
    out.payload = {
        "sigma": list(s), "pi": list(p), "inverse": bool(args.inverse),
        "basis": [ser.table_to_json(t) for t in mat.basis],
        "matrix": ser.matrix_to_json(shown.entries),
    }
    out.text.append(f"{label}_{{{weight_str(s)},{weight_str(p)}}}  dim {mat.dim}")
    out.text.append("basis: " + " ".join(ser.format_table(t) for t in mat.basis))
    out.text.append(ser.format_matrix(shown.entries))
    out.csv_rows = [list(r) for r in shown.entries]
    need_cp = args.charpoly or args.minpoly or args.diag or args.spectrum
    cp = char_poly(shown.entries) if need_cp else None
    if args.charpoly:
        out.payload["charpoly"] = ser.poly_to_json(cp)
        out.text.append(f"charpoly: {_poly_text(cp)}")
    if args.minpoly:
        mu = min_poly(shown.entries, cp)
        out.payload["minpoly"] = ser.poly_to_json(mu)
        out.text.append(f"minpoly: {_poly_text(mu)}")
    if args.diag:
        ok = is_diagonalizable(shown.entries, cp)
        out.payload["diagonalizable"] = ok
        out.text.append(f"diagonalizable: {'yes' if ok else 'no'}")
    if args.spectrum:
        sf = squarefree_part(cp)
        a, b, rest = strip_pm1_factors(cp)
        spec = {
            "distinct_real_roots": sturm_real_root_count(sf),
            "squarefree_degree": sf.degree,
            "mult_plus1": a, "mult_minus1": b,
            "remainder": ser.poly_to_json(rest),
        }
        out.payload["spectrum"] = spec
        out.text.append(f"distinct real roots: {spec['distinct_real_roots']} of {sf.degree} distinct roots")
        out.text.append(f"charpoly = {_pm1_text(a, b, rest)}")
    if args.det:
        out.payload["det"] = str(det(shown.entries))
        out.text.append(f"det: {out.payload['det']}")
    if args.trace:
        out.payload["trace"] = str(trace(shown.entries))
        out.text.append(f"trace: {out.payload['trace']}")
    return 0


def cmd_blocks(args, out):
    n0, blocks = block_multiplicities(args.m, args.n, args.d)
    rows = [{"sigma": list(b.pair.sigma), "pi": list(b.pair.pi),
             "multiplicity": str(b.multiplicity), "dim": count_tables(*b.pair)} for b in blocks]
    total = n0 + sum(b.multiplicity * count_tables(*b.pair) for b in blocks)
    out.payload = {"m": args.m, "n": args.n, "d": args.d, "n0": str(n0), "blocks": rows,
                   "total_dim": str(total)}
    out.text.append(f"RSK_{{{args.m},{args.n},{args.d}}}: Id_1 x {n0}")
    for r in rows:
        out.text.append(f"  RSK_{{{weight_str(r['sigma'])},{weight_str(r['pi'])}}}  dim {r['dim']}  x {r['multiplicity']}")
    out.text.append(f"total dimension {total}")
    out.csv_rows = [["sigma", "pi", "dim", "multiplicity"], ["0", "0", 1, n0]]
    out.csv_rows += [[weight_str(r["sigma"]), weight_str(r["pi"]), r["dim"], r["multiplicity"]] for r in rows]
    return 0


def cmd_det(args, out):
    v = analysis.det_rsk_direct(args.m, args.n, args.d) if args.direct else analysis.det_rsk(args.m, args.n, args.d)
    out.payload = {"m": args.m, "n": args.n, "d": args.d, "det": str(v), "direct": bool(args.direct)}
    out.text.append(str(v))
    out.csv_rows = [["m", "n", "d", "det"], [args.m, args.n, args.d, v]]
    return 0


def cmd_trace(args, out):
    f = analysis.trace_rsk_direct if args.direct else analysis.trace_rsk
    v = f(args.m, args.n, args.d, inverse=args.inverse)
    out.payload = {"m": args.m, "n": args.n, "d": args.d, "trace": str(v),
                   "inverse": bool(args.inverse), "direct": bool(args.direct)}
    out.text.append(str(v))
    out.csv_rows = [["m", "n", "d", "trace"], [args.m, args.n, args.d, v]]
    return 0


def cmd_trace_perm(args, out):
    v = analysis.trace_perm(args.d, workers=args.workers, chunks=args.chunks)
    out.payload = {"d": args.d, "trace": str(v)}
    out.text.append(str(v))
    out.csv_rows = [["d", "trace"], [args.d, v]]
    return 0


def cmd_cd(args, out):
    if args.ratios:
        rows = analysis.cd_ratio_report(args.d, workers=args.workers)
        out.payload = {"ratios": [{"d": d, "count": str(c), "ratio": r} for d, c, r in rows]}
        out.text += [f"d={d}  |C_d|={c}  |C_d|/d!={r:.6f}" for d, c, r in rows]
        out.csv_rows = [["d", "count", "ratio"]] + [[d, c, f"{r:.6f}"] for d, c, r in rows]
        return 0
    v = analysis.count_Cd(args.d, workers=args.workers)
    out.payload = {"d": args.d, "count": str(v)}
    out.text.append(str(v))
    out.csv_rows = [["d", "count"], [args.d, v]]
    return 0


def cmd_classify(args, out):
    r = analysis.classify_diagonalizable(args.m, args.n, args.d, cross_check=args.cross_check)
    verdict = "diagonalizable" if r.diagonalizable else "not diagonalizable"
    out.payload = {"m": r.m, "n": r.n, "d": r.d, "diagonalizable": r.diagonalizable,
                   "dynkin_label": r.dynkin_label, "rule": r.rule_fired,
                   "blocker": str(r.blocker) if r.blocker else None}
    line = f"{verdict}, {r.dynkin_label}"
    if r.blocker:
        line += f" (blocker RSK_{{{weight_str(r.blocker.sigma)},{weight_str(r.blocker.pi)}}})"
    out.text.append(line)
    out.text.append(f"rule: {r.rule_fired}")
    out.csv_rows = [["m", "n", "d", "diagonalizable", "label"], [r.m, r.n, r.d, r.diagonalizable, r.dynkin_label]]
    return 0


def _divisor_text(div):
    parts = []
    for i, row in enumerate(div):
        for j, e in enumerate(row):
            if e:
                parts.append(f"z{i + 1}{j + 1}" + (f"^{e}" if e > 1 else ""))
    return " ".join(parts) or "1"


def cmd_reduce(args, out):
    s, p = ser.parse_weight(args.sigma), ser.parse_weight(args.pi)
    rec = reduce(s, p)
    norm, flipped = normalize(rec.reduced)
    red = rec.reduced
    out.payload = {"sigma": list(s), "pi": list(p),
                   "reduced": {"sigma": list(red.sigma), "pi": list(red.pi)},
                   "normalized": {"sigma": list(norm.sigma), "pi": list(norm.pi), "transposed": flipped},
                   "divisor": ser.matrix_to_json(rec.divisor_exponents) if rec.divisor_exponents else None}
    out.text.append(f"({weight_str(red.sigma)},{weight_str(red.pi)}) with divisor {_divisor_text(rec.divisor_exponents)}")
    out.csv_rows = [["sigma", "pi", "divisor"], [weight_str(red.sigma), weight_str(red.pi),
                                                 _divisor_text(rec.divisor_exponents)]]
    return 0


def _grid(args, fn):
    header = ["m\\d"] + [str(d) for d in range(1, args.max_d + 1)]
    rows = []
    for m in range(1, args.max_m + 1):
        limit = args.max_d if args.full else min(args.max_d, DEFAULT_D_LIMITS.get(m, args.max_d))
        rows.append([str(m)] + [str(fn(m, d)) if d <= limit else "" for d in range(1, args.max_d + 1)])
    return header, rows


def _reduced_rows(d):
    from .weights import enumerate_reduced_pairs

    rows = []
    for pair in enumerate_reduced_pairs(d, 3, 3, d_min=d):
        if len(pair.pi) != 3:
            continue
        cp = analysis.block_char_poly(pair)
        a, b, rest = strip_pm1_factors(cp)
        rows.append([weight_str(pair.sigma), weight_str(pair.pi), str(analysis.block_det(pair)),
                     str(analysis.block_trace(pair)), _pm1_text(a, b, rest)])
    return ["sigma", "pi", "det", "trace", "charpoly"], rows


def cmd_tables(args, out):
    which = args.which
    if which == "det":
        header, rows = _grid(args, lambda m, d: analysis.det_rsk(m, m, d))
    elif which == "trace":
        header, rows = _grid(args, lambda m, d: analysis.trace_rsk(m, m, d))
    elif which == "trace-inv":
        header, rows = _grid(args, lambda m, d: analysis.trace_rsk(m, m, d, inverse=True))
    else:
        header, rows = _reduced_rows(int(which[-1]))
    out.payload = {"which": which, "header": header, "rows": rows}
    out.csv_rows = [header] + rows
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    for r in [header] + rows:
        out.text.append("  ".join(str(x).rjust(w) for x, w in zip(r, widths)).rstrip())
    return 0


def cmd_verify(args, out):
    from .verify import run_suite

    results = run_suite(args.suite)
    failed = [r for r in results if not r.ok]
    out.payload = {"suite": args.suite, "checks": [r._asdict() for r in results], "failed": len(failed)}
    for r in results:
        out.text.append(f"{'PASS' if r.ok else 'FAIL'}  {r.suite}: {r.name}" + (f"  {r.detail}" if r.detail else ""))
    out.text.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    out.csv_rows = [["suite", "check", "ok"]] + [[r.suite, r.name, r.ok] for r in results]
    return 4 if failed else 0


# ---- parser --------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--max-basis", type=int, default=None,
                        help="cap on weight-space dimension (default: $RSKOP_MAX_BASIS or 2000000)")

    parser = argparse.ArgumentParser(prog="rskop", description="RSK as a linear operator on weight spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", parents=[common], help="run RSK on a matrix literal, or invert with --inverse")
    p.add_argument("literal", nargs="+", help='matrix like "0,3,2;1,2,0;2,0,2" ("-" reads stdin)')
    p.add_argument("--inverse", action="store_true", help="read tableaux P and Q and print the matrix")
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("matrix", parents=[common], help="build RSK_{sigma,pi}")
    p.add_argument("sigma")
    p.add_argument("pi")
    for flag in ("inverse", "charpoly", "minpoly", "diag", "spectrum", "det", "trace"):
        p.add_argument(f"--{flag}", action="store_true")
    p.set_defaults(func=cmd_matrix)

    def mnd(p):
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("d", type=int)

    p = sub.add_parser("blocks", parents=[common], help="block decomposition of RSK_{m,n,d}")
    mnd(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("det", parents=[common], help="determinant of RSK_{m,n,d}")
    mnd(p)
    p.add_argument("--direct", action="store_true", help="build every weight space instead")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("trace", parents=[common], help="trace of RSK_{m,n,d}")
    mnd(p)
    p.add_argument("--direct", action="store_true")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("trace-perm", parents=[common], help="trace of RSK_{1^d,1^d} by sweeping d! permutations")
    p.add_argument("d", type=int)
    p.add_argument("--workers", type=int, default=None, help="default: $RSKOP_WORKERS or 1")
    p.add_argument("--chunks", type=int, default=None)
    p.set_defaults(func=cmd_trace_perm)

    p = sub.add_parser("cd", parents=[common], help="count permutation tables with zero diagonal entry")
    p.add_argument("d", type=int)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--ratios", action="store_true", help="report |C_k|/k! for k = 1..d")
    p.set_defaults(func=cmd_cd)

    p = sub.add_parser("classify", parents=[common], help="diagonalizability of RSK_{m,n,d}")
    mnd(p)
    p.add_argument("--cross-check", action="store_true", help="also test every block directly")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", parents=[common], help="reduce a weight pair")
    p.add_argument("sigma")
    p.add_argument("pi")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("tables", parents=[common], help="regenerate data tables")
    p.add_argument("--which", required=True,
                   choices=["det", "trace", "trace-inv", "reduced-d3", "reduced-d4", "reduced-d5"])
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--max-d", type=int, default=9)
    p.add_argument("--full", action="store_true", help="fill every cell instead of the usual staircase")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("--suite", default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def _error(fmt, exc, code):
    if fmt == "json":
        err = {"error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}
        sys.stderr.write(json.dumps(err) + "\n")
    else:
        sys.stderr.write(f"rskop: error: {exc}\n")
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("RSKOP_MAX_BASIS")
    if args.max_basis is not None:
        os.environ["RSKOP_MAX_BASIS"] = str(args.max_basis)
    try:
        return _run(args)
    finally:
        # keep the override local to this invocation
        if saved is None:
            os.environ.pop("RSKOP_MAX_BASIS", None)
        else:
            os.environ["RSKOP_MAX_BASIS"] = saved


def _run(args):
    recorded = {k: v for k, v in vars(args).items() if k not in ("func", "format")}
    out = Output(args.command, args.format, recorded)
    try:
        code = args.func(args, out)
    except RSKError as e:
        return _error(args.format, e, e.exit_code)
    except (ValueError, ZeroDivisionError) as e:
        # bad literals that slipped past the parsers
        return _error(args.format, e, 2)
    except Exception as e:  # anything else is a bug
        return _error(args.format, ConsistencyError(f"{type(e).__name__}: {e}"), ConsistencyError.exit_code)
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
