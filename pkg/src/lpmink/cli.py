"""Command-line front end.

Subcommands: ``constants`` (reproduce the closed-form operator values),
``eval`` (evaluate an operator on a body file), ``verify`` (run check
suites), ``fit`` (recover basis coefficients), ``demo-discontinuity``.

Exit codes: 0 success, 1 check failure, 2 usage or parse error.  Output is
deterministic for a fixed configuration; CSV uses '.' decimals, ','
separators, LF line endings and 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import geometry as geo
from . import lab
from .geometry import Body, load_body
from .moments import pochhammer_reciprocal
from .operators import OperatorKind, valuation_function


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _usage_error(message: str) -> SystemExit:
    print(f"error: {message}", file=sys.stderr)
    return SystemExit(2)


def _parse_exponent(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 1.0:
        raise argparse.ArgumentTypeError("the exponent p must be greater than 1")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _csv(rows: list[list], header: list[str]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# constants


def _constant_rows(p: float, n: int) -> list[tuple[str, float, float]]:
    """(label, computed, expected) rows for the closed-form operator values."""
    rows: list[tuple[str, float, float]] = []
    simplex = geo.standard_simplex(n)
    facet = geo.probability_simplex(n)
    moment_const = pochhammer_reciprocal(p, n)
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        rows.append(
            (f"moment+(standard_simplex)(e{i + 1})", valuation_function("moment+", simplex, p)(e), moment_const)
        )
        rows.append(
            (f"moment+(standard_simplex)(-e{i + 1})", valuation_function("moment+", simplex, p)(-e), 0.0)
        )
        rows.append(
            (f"moment_gap+(probability_simplex)(e{i + 1})", valuation_function("moment_gap+", facet, p)(e), moment_const)
        )
        rows.append(
            (f"moment_gap+(probability_simplex)(-e{i + 1})", valuation_function("moment_gap+", facet, p)(-e), 0.0)
        )
    e1 = np.zeros(n)
    e1[0] = 1.0
    seg = geo.unit_segment(n)
    seg2 = geo.offset_segment(n)
    rows.append(("support+(unit_segment)(e1)", valuation_function("support+", seg, p)(e1), 1.0))
    rows.append(("support+(offset_segment)(e1)", valuation_function("support+", seg2, p)(e1), 2.0**p))
    rows.append(("support_min+(offset_segment)(e1)", valuation_function("support_min+", seg2, p)(e1), 1.0))

    triangle = geo.upper_right_triangle(n) if n >= 2 else None
    pair = geo.probability_simplex(2)
    pair = geo.embed(pair, n)
    e2 = np.zeros(n)
    e2[1] = 1.0
    tri_dirs = [("e1", e1, 1.0, 0.0), ("e2", e2, 1.0, 0.0), ("e1+e2", e1 + e2, 2.0**p, 1.0)]
    for label, d, exp_max, exp_min in tri_dirs:
        rows.append(
            (f"support+(upper_right_triangle)({label})", valuation_function("support+", triangle, p)(d), exp_max)
        )
        rows.append(
            (f"support_min+(upper_right_triangle)({label})", valuation_function("support_min+", triangle, p)(d), exp_min)
        )
    pair_dirs = [("e1", e1, 1.0, 0.0), ("e1+e2", e1 + e2, 1.0, 1.0), ("2e1+e2", 2 * e1 + e2, 2.0**p, 1.0)]
    for label, d, exp_max, exp_min in pair_dirs:
        rows.append(
            (f"support+(edge_e1_e2)({label})", valuation_function("support+", pair, p)(d), exp_max)
        )
        rows.append(
            (f"support_min+(edge_e1_e2)({label})", valuation_function("support_min+", pair, p)(d), exp_min)
        )
    if n == 2:
        t2 = geo.standard_simplex(2)
        t1 = geo.probability_simplex(2)
        for i, e in (("e1", np.array([1.0, 0.0])), ("e2", np.array([0.0, 1.0]))):
            rows.append(
                (f"origin_face+(standard_simplex)({i})", valuation_function("origin_face+", t2, p)(e), 0.5)
            )
            rows.append(
                (f"origin_face+(standard_simplex)(-{i})", valuation_function("origin_face+", t2, p)(-e), 0.0)
            )
            rows.append(
                (f"origin_face+(probability_simplex)({i})", valuation_function("origin_face+", t1, p)(e), 0.5)
            )
            combined = (
                valuation_function("support+", t2, p)(e)
                - valuation_function("origin_face+", t2, p)(e)
                + valuation_function("support_min+", t2, p)(e)
                - valuation_function("origin_face_min+", t2, p)(e)
            )
            rows.append((f"(support-origin_face+support_min-origin_face_min)+(standard_simplex)({i})", combined, 0.5))
    return rows


def cmd_constants(args) -> int:
    rows = _constant_rows(args.p, args.n)
    table = [[label, float(got), float(exp), float(abs(got - exp))] for label, got, exp in rows]
    if args.format == "json":
        payload = [
            {"name": r[0], "computed": r[1], "expected": r[2], "deviation": r[3]} for r in table
        ]
        _write_text(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _write_text(_csv(table, ["name", "computed", "expected", "deviation"]), args.out)
    worst = max(r[3] / max(1.0, abs(r[2])) for r in table)
    return 0 if worst <= args.tol else 1


# ---------------------------------------------------------------------------
# eval


def _eval_directions(args, n: int) -> np.ndarray:
    if args.dirs_file:
        data = json.loads(Path(args.dirs_file).read_text(encoding="utf-8"))
        dirs = np.asarray(data, dtype=float)
        if dirs.ndim != 2 or dirs.shape[1] != n:
            raise _usage_error(f"direction file must hold vectors of length {n}")
        return dirs
    rng = np.random.default_rng(args.seed)
    return lab.random_directions(n, args.dirs, rng)


def cmd_eval(args) -> int:
    body = load_body(args.body)
    kind = OperatorKind.parse(args.operator)
    if kind.family.startswith("origin_face") and body.n != 2:
        raise _usage_error("origin-face operators require a 2-dimensional body")
    fn = valuation_function(kind, body, args.p)
    dirs = _eval_directions(args, body.n)
    rows = []
    for u in dirs:
        value_hp = fn(u)
        rows.append([*map(float, u), float(value_hp), float(value_hp ** (1.0 / args.p))])
    header = [f"u{i + 1}" for i in range(body.n)] + ["value_hp", "value"]
    _write_text(_csv(rows, header), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    reports = lab.run_suite(args.suite, args.n, args.p, args.seed, args.tol, args.dirs)
    passed = all(r.passed for r in reports)
    payload = {
        "suite": args.suite,
        "n": args.n,
        "p": args.p,
        "seed": args.seed,
        "tol": args.tol,
        "passed": passed,
        "reports": [r.to_dict() for r in reports],
    }
    _write_text(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# fit


def _load_bodies(path: str | None, domain: str, n: int, seed: int, count: int = 8) -> list[Body]:
    if path:
        files = sorted(Path(path).glob("*.json"))
        if not files:
            raise _usage_error(f"no body files found in {path}")
        return [load_body(f) for f in files]
    rng = np.random.default_rng(seed)
    if domain == lab.DOMAIN_WITH_ORIGIN:
        return [lab.random_body_with_origin(n, rng) for _ in range(count)]
    return [lab.random_simplex_body(n, rng) for _ in range(count)]


def cmd_fit(args) -> int:
    if (args.builtin is None) == (args.coeffs is None):
        raise _usage_error("provide exactly one of --builtin or --coeffs")
    if args.builtin:
        phi = lab.builtin_valuation(args.builtin, args.n, args.p)
    else:
        spec = json.loads(Path(args.coeffs).read_text(encoding="utf-8"))
        domain = spec.get("domain", args.domain)
        phi = lab.combination_valuation(
            spec["coefficients"], domain, args.n, args.p,
            include_min_support=bool(spec.get("include_min_support", False)),
        )
    bodies = _load_bodies(args.bodies, args.domain, args.n, args.seed)
    rng = np.random.default_rng(args.seed + 1)
    dirs = lab.random_directions(args.n, args.dirs, rng)
    result = lab.fit_coefficients(
        phi, bodies, dirs, args.domain, include_min_support=args.include_min_support
    )
    payload = result.to_dict()
    warnings = []
    for i, d in enumerate(result.coefficients):
        if d < -1e-6:
            warnings.append(f"coefficient d{i + 1} = {d:.3e} is negative")
    if args.include_min_support and args.domain == lab.DOMAIN_ALL:
        for i, d in enumerate(result.coefficients[6:], start=7):
            if abs(d) > 1e-6:
                warnings.append(f"min-support coefficient d{i} = {d:.3e} should vanish")
    payload["warnings"] = warnings
    _write_text(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# demo


def cmd_demo_discontinuity(args) -> int:
    epsilons = [float(t) for t in args.epsilons.split(",") if t]
    table = lab.discontinuity_witness(args.p, epsilons)
    rows = [[row["epsilon"], row["value"], row["hausdorff"]] for row in table["rows"]]
    rows.append(["limit", table["limit_value"], 0.0])
    _write_text(_csv(rows, ["epsilon", "value_hp", "hausdorff"]), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpmink",
        description="Moment and support valuations on convex polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, n_default=3):
        sp.add_argument("--p", type=_parse_exponent, default=2.0, help="exponent, must be > 1")
        sp.add_argument("--n", type=_positive_int, default=n_default, help="ambient dimension")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--tol", type=float, default=1e-8)
        sp.add_argument("--out", default=None, help="output path (default: stdout)")

    sp = sub.add_parser("constants", help="reproduce the closed-form operator values")
    common(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_constants)

    sp = sub.add_parser("eval", help="evaluate an operator on a body file")
    common(sp)
    sp.add_argument("--operator", required=True, help="e.g. moment+, support-, moment_gap+")
    sp.add_argument("--body", required=True, help="body JSON file")
    sp.add_argument("--dirs", type=_positive_int, default=16, help="number of seeded directions")
    sp.add_argument("--dirs-file", default=None, help="JSON file with explicit directions")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument(
        "--suite",
        choices=("valuation", "covariance", "scaling", "functional", "projection", "all"),
        default="all",
    )
    sp.add_argument("--dirs", type=_positive_int, default=8)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("fit", help="recover basis coefficients of a valuation")
    common(sp)
    sp.add_argument("--builtin", default=None, help="built-in operator id")
    sp.add_argument("--coeffs", default=None, help="JSON file with h^p-scale coefficients")
    sp.add_argument("--domain", choices=(lab.DOMAIN_WITH_ORIGIN, lab.DOMAIN_ALL), default=lab.DOMAIN_ALL)
    sp.add_argument("--bodies", default=None, help="directory of body JSON files")
    sp.add_argument("--dirs", type=_positive_int, default=40)
    sp.add_argument("--include-min-support", action="store_true")
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("demo-discontinuity", help="collapse a family onto a segment")
    common(sp, n_default=2)
    sp.add_argument("--epsilons", default="0.1,0.01,0.001")
    sp.set_defaults(func=cmd_demo_discontinuity)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
