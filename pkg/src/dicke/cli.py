"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import analysis, oracle, witness
from .verify import run_suite

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_IO = 0, 1, 2, 3
MAX_CAP = 20


class ArgError(Exception):
    pass


@dataclass
class SweepConfig:
    n_values: list[int]
    k_list: list[int] | None  # None means all 0..n
    j_list: list[int] | None
    a_steps: int = 1000
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self) -> None:
        if not self.n_values:
            raise ArgError("empty n range")
        if self.a_steps < 2:
            raise ArgError(f"--a-steps must be >= 2, got {self.a_steps}")


def _int_list(text: str) -> list[int] | None:
    if text == "all":
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'all' or a comma list of ints, got {text!r}")


def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, float):
        return f"{x:.15g}"
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def emit(rows: list[dict], fmt: str, out: str | None, footer: dict | None = None) -> None:
    """Write rows as CSV (header, 15 significant digits, '#' footer lines) or JSON."""
    buf = io.StringIO()
    if fmt == "json":
        doc = {"rows": [{k: _jsonable(v) for k, v in r.items()} for r in rows]}
        if footer:
            doc["footer"] = {k: _jsonable(v) for k, v in footer.items()}
        json.dump(doc, buf, indent=1)
        buf.write("\n")
    else:
        if rows:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(list(rows[0]))
            for r in rows:
                writer.writerow([_fmt(v) for v in r.values()])
        if footer:
            buf.write("# " + ",".join(f"{k}={_fmt(v)}" for k, v in footer.items()) + "\n")
    text = buf.getvalue()
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise IOError(f"cannot write {out}: {exc}") from exc


def cmd_spectrum(args) -> int:
    spec = analysis.schmidt_spectrum(args.n, args.k, args.j)
    print("q\tlambda_exact\tlambda" if args.exact else "q\tlambda")
    for q, p in zip(range(spec.q_min, spec.q_max + 1), spec.probs):
        if args.exact:
            print(f"{q}\t{p}\t{float(p):.15g}")
        else:
            print(f"{q}\t{float(p):.15g}")
    s = analysis.entropy(args.n, args.k, args.j)
    pi = analysis.purity(args.n, args.k, args.j)
    print(f"S = {s.bits:.6f} bits (error bound {s.abs_error_bound:.1e})")
    print(f"purity = {pi} ({float(pi):.15g})")
    return EXIT_OK


def entropy_rows(cfg: SweepConfig) -> list[dict]:
    rows = []
    for n in cfg.n_values:
        ks = range(n + 1) if cfg.k_list is None else [k for k in cfg.k_list if 0 <= k <= n]
        for k in ks:
            js = range(n + 1) if cfg.j_list is None else [j for j in cfg.j_list if 0 <= j <= n]
            for j in js:
                rows.append({"n": n, "k": k, "j": j, "entropy_bits": analysis.entropy(n, k, j).bits})
    return rows


def _n_values(args) -> list[int]:
    lo, hi, stride = args.n_from, args.n_to, args.stride
    if stride < 1:
        raise ArgError(f"--stride must be >= 1, got {stride}")
    if lo < 1 or hi < lo:
        raise ArgError(f"empty n range [{lo}, {hi}]")
    return list(range(lo, hi + 1, stride))


def cmd_entropy_table(args) -> int:
    cfg = SweepConfig(_n_values(args), args.k, args.j, output_format=args.format, output_path=args.out)
    emit(entropy_rows(cfg), cfg.output_format, cfg.output_path)
    return EXIT_OK


def cmd_smax(args) -> int:
    if args.n_from % 2 or args.n_to % 2:
        raise ArgError(f"smax needs even bounds, got --from {args.n_from} --to {args.n_to}")
    if args.stride % 2:
        raise ArgError(f"smax needs an even stride, got {args.stride}")
    ns = _n_values(args)
    rows = [{"n": n, "s_max_bits": analysis.s_max(n).bits} for n in ns]
    footer = None
    if args.fit:
        if len(ns) < 5:
            raise ArgError(f"--fit needs at least 5 points, got {len(ns)}")
        slope, intercept = analysis.fit_against_log(ns, [r["s_max_bits"] for r in rows])
        footer = {"fit_slope": slope, "fit_intercept": intercept}
    emit(rows, args.format, args.out, footer)
    return EXIT_OK


def cmd_purity(args) -> int:
    pi = analysis.potential_me(args.n, args.k)
    print(f"potential_me = {pi}")
    print(f"float = {float(pi):.15g}")
    if args.n % 2 == 0:
        print(f"asymptote (2/sqrt(pi)) n^-1/2 = {analysis.potential_me_asymptote(args.n):.15g}")
    return EXIT_OK


def cmd_witness(args) -> int:
    scenario = witness.WitnessScenario(analysis.DickeIndex(args.n, args.k), args.a, args.p)
    value = witness.expectation_combined(scenario)
    verdict = "entanglement detected" if value < 0 else "not detected"
    point = witness.separatrix_p(args.n, args.k, args.a)
    print(f"<W> = {value:.15g}")
    print(verdict)
    print(f"p_max(a={args.a:g}) = {point.p:.15g}")
    return EXIT_OK


def cmd_separatrix(args) -> int:
    SweepConfig([args.n], None, None, a_steps=args.a_steps)
    steps = args.a_steps
    grid = [i / (steps - 1) for i in range(steps)]
    rows = [
        {"a": pt.a, "p_separatrix": pt.p, "clamped": pt.clamped, "no_root": pt.no_root}
        for pt in witness.separatrix(args.n, args.k, grid)
    ]
    a_star, p_star = witness.separatrix_peak(args.n, args.k)
    emit(rows, args.format, args.out, {"a_star": a_star, "p_star": p_star})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.cap > MAX_CAP:
        raise ArgError(f"--cap {args.cap} exceeds the hard limit {MAX_CAP}")
    if args.n_max > args.cap:
        raise ArgError(f"--n-max {args.n_max} exceeds the oracle cap {args.cap}")
    results = run_suite(args.n_max, args.seed, args.cap)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "INFO" if r.informational else ("PASS" if r.passed else "FAIL")
        line = f"{status}  {r.name:<{width}}  cases={r.cases}"
        if r.failures:
            line += f"  first failing (n,k,j)={r.failures[0]}"
        if r.note:
            line += f"  {r.note}"
        print(line)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dicke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("spectrum", help="Schmidt spectrum of one cut")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="also print exact fractions")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("entropy-table", help="entropy over an (n, k, j) grid")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--k", type=_int_list, default=None, help="'all' or comma list")
    p.add_argument("--j", type=_int_list, default=[1], help="'all' or comma list (default 1)")
    output_flags(p)
    p.set_defaults(func=cmd_entropy_table)

    p = sub.add_parser("smax", help="maximal entropy over even n")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--stride", type=int, default=2)
    p.add_argument("--fit", action="store_true", help="append a least-squares fit against log2(n/2)")
    output_flags(p)
    p.set_defaults(func=cmd_smax)

    p = sub.add_parser("purity", help="potential of multipartite entanglement")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_purity)

    p = sub.add_parser("witness", help="witness expectation under asymmetry and white noise")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--p", type=float, default=0.0)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("separatrix", help="<W> = 0 curve over a uniform a grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a-steps", type=int, default=1000)
    output_flags(p)
    p.set_defaults(func=cmd_separatrix)

    p = sub.add_parser("verify", help="run the brute-force oracle suite")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ArgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
