"""Command-line front end: every operation as a subcommand, CSV or JSON out.

CSV (the default) carries a single header row and then data rows; JSON is a
single object with "command", "params" and "rows" keys. Floats are printed
with 15 significant digits in both formats, so identical invocations produce
byte-identical output and the two formats carry identical values. Output is
written only after the command has fully computed, so errors never leave a
partial table behind.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 divisor-budget
overflow.
"""

import argparse
import csv
import json
import sys

from . import core, dirichlet, summatory, witness
from .errors import DivisorBudgetError, DomainError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_OVERFLOW = 4


def _fmt(value) -> str:
    """One stable text rendering per value type (shared by CSV and JSON)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".15g")
    return str(value)


def _json_scalar(value) -> str:
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, list):
        return "[" + ",".join(_json_scalar(v) for v in value) + "]"
    return _fmt(value)


def _emit(args, command: str, params: dict, columns: list[str], rows: list[tuple]) -> None:
    if args.format == "json":
        parts = [f'"command":{json.dumps(command)}']
        parts.append('"params":{' + ",".join(f"{json.dumps(k)}:{_json_scalar(v)}" for k, v in params.items()) + "}")
        row_objs = []
        for row in rows:
            row_objs.append("{" + ",".join(f"{json.dumps(c)}:{_json_scalar(v)}" for c, v in zip(columns, row)) + "}")
        parts.append('"rows":[' + ",".join(row_objs) + "]")
        sys.stdout.write("{" + ",".join(parts) + "}\n")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _cmd_a(args):
    value = core.small_divisor_sum(args.n)
    return {"n": args.n}, ["n", "a"], [(args.n, value)]


def _cmd_b(args):
    value = core.b_via_square_divisors(args.n)
    return {"n": args.n}, ["n", "b"], [(args.n, value)]


def _cmd_sigma(args):
    value = core.sigma(core.factorize(args.n))
    return {"n": args.n}, ["n", "sigma"], [(args.n, value)]


def _cmd_tau(args):
    value = core.tau(core.factorize(args.n))
    return {"n": args.n}, ["n", "tau"], [(args.n, value)]


def _cmd_factor(args):
    f = core.factorize(args.n)
    rows = [(args.n, p, e) for p, e in f.factors]
    return {"n": args.n}, ["n", "prime", "exponent"], rows


def _cmd_summatory(args):
    params = {"x": args.x, "method": args.method}
    if args.method == "exact":
        return params, ["x", "exact"], [(args.x, summatory.summatory_exact(args.x))]
    if args.method == "brute":
        return params, ["x", "brute"], [(args.x, summatory.summatory_brute(args.x))]
    exact = summatory.summatory_exact(args.x)
    brute = summatory.summatory_brute(args.x)
    return params, ["x", "exact", "brute", "match"], [(args.x, exact, brute, exact == brute)]


def _cmd_residual(args):
    points = _parse_points(args.points)
    rows = []
    for x in points:
        r = summatory.residual_report(x)
        rows.append((r.x, r.s_exact, r.main_term, r.residual, r.normalized_residual))
    columns = ["x", "s_exact", "main_term", "residual", "normalized_residual"]
    return {"points": points}, columns, rows


def _cmd_dirichlet(args):
    series = dirichlet.Series(args.series)
    ps = dirichlet.partial_dirichlet(series, args.sigma, args.terms)
    params = {"series": args.series, "sigma": args.sigma, "terms": args.terms}
    if ps.tail is None:
        columns = ["series", "sigma", "terms", "value"]
        rows = [(args.series, args.sigma, args.terms, ps.value)]
    else:
        full = ps.full_series_bracket()
        columns = ["series", "sigma", "terms", "value", "tail_lo", "tail_hi", "series_lo", "series_hi"]
        rows = [(args.series, args.sigma, args.terms, ps.value, ps.tail.lo, ps.tail.hi, full.lo, full.hi)]
    return params, columns, rows


def _cmd_divergence(args):
    ps = dirichlet.partial_dirichlet(dirichlet.Series.A, 1.5, args.terms)
    bound = dirichlet.divergence_lower_bound(args.terms)
    columns = ["terms", "partial_sum", "lower_bound", "ok"]
    return {"terms": args.terms}, columns, [(args.terms, ps.value, bound, ps.value >= bound)]


def _cmd_bound(args):
    value = dirichlet.convergence_upper_bound(args.sigma)
    return {"sigma": args.sigma}, ["sigma", "upper_bound"], [(args.sigma, value)]


def _cmd_euler(args):
    value = dirichlet.euler_product_b(args.sigma, args.primes)
    columns = ["sigma", "primes", "product"]
    return {"sigma": args.sigma, "primes": args.primes}, columns, [(args.sigma, args.primes, value)]


def _cmd_sandwich(args):
    rep = dirichlet.sandwich_check(args.sigma, args.terms)
    columns = [
        "sigma", "terms", "lower_ok", "upper_ok",
        "product_lo", "product_hi", "l_lo", "l_hi", "upper_lo", "upper_hi",
    ]
    row = (
        rep.sigma, rep.n_terms, rep.lower_ok, rep.upper_ok,
        rep.zeta_product.lo, rep.zeta_product.hi,
        rep.l_bracket.lo, rep.l_bracket.hi,
        rep.zeta_upper.lo, rep.zeta_upper.hi,
    )
    return {"sigma": args.sigma, "terms": args.terms}, columns, [row]


def _cmd_witness(args):
    rep = witness.witness_report(args.m)
    columns = ["m", "s_m", "a_value", "ratio", "lower_bound"]
    return {"m": args.m}, columns, [(rep.m, rep.s_m, rep.a_value, rep.ratio, rep.lower_bound)]


def _cmd_supermult(args):
    pairs = witness.random_coprime_pairs(args.trials, args.max, args.seed)
    rows = []
    for m, n in pairs:
        chk = witness.supermult_check(m, n)
        rows.append((args.seed, chk.m, chk.n, chk.lhs, chk.rhs, chk.holds))
    columns = ["seed", "m", "n", "a_mn", "a_m_times_a_n", "holds"]
    params = {"trials": args.trials, "max": args.max, "seed": args.seed}
    return params, columns, rows


def _cmd_counterexample(args):
    c = witness.non_complete_counterexample()
    columns = ["m", "n", "product", "a_product", "a_m_times_a_n", "gcd"]
    return {}, columns, [(c.m, c.n, c.product, c.a_product, c.a_m_times_a_n, c.gcd)]


def _parse_points(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise DomainError(f"malformed points list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")

    parser = argparse.ArgumentParser(
        prog="smalldiv",
        description="Small-divisor sums, their summatory function, and Dirichlet-series checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("a", _cmd_a, "small-divisor sum a(n)")
    p.add_argument("n", type=int)
    p = add("b", _cmd_b, "multiplicative companion b(n)")
    p.add_argument("n", type=int)
    p = add("sigma", _cmd_sigma, "divisor sum sigma(n)")
    p.add_argument("n", type=int)
    p = add("tau", _cmd_tau, "divisor count tau(n)")
    p.add_argument("n", type=int)
    p = add("factor", _cmd_factor, "prime factorization of n")
    p.add_argument("n", type=int)

    p = add("summatory", _cmd_summatory, "S(x) = sum of a(k) for k <= x")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--method", choices=("exact", "brute", "both"), default="exact")

    p = add("residual", _cmd_residual, "S(x) against its (2/3) x^1.5 main term")
    p.add_argument("--points", required=True, help="comma-separated x values")

    p = add("dirichlet", _cmd_dirichlet, "partial Dirichlet sum of a or b")
    p.add_argument("--series", choices=("a", "b"), required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--terms", type=int, required=True)

    p = add("divergence", _cmd_divergence, "a-series partial sum at sigma=1.5 vs its lower bound")
    p.add_argument("--terms", type=int, required=True)

    p = add("bound", _cmd_bound, "a-series upper bound for 1.5 < sigma < 2")
    p.add_argument("--sigma", type=float, required=True)

    p = add("euler", _cmd_euler, "truncated Euler product of the b-series")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--primes", type=int, required=True)

    p = add("sandwich", _cmd_sandwich, "two-sided zeta comparison for the a-series")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--terms", type=int, required=True)

    p = add("witness", _cmd_witness, "squared-primorial witness report")
    p.add_argument("--m", type=int, required=True)

    p = add("supermult", _cmd_supermult, "seeded random coprime supermultiplicativity checks")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    add("counterexample", _cmd_counterexample, "the fixed 24 * 36 counterexample")

    return parser


def run(argv: list[str]) -> int:
    """Parse argv, execute, emit; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        params, columns, rows = args.handler(args)
    except DivisorBudgetError as exc:
        print(f"smalldiv: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except DomainError as exc:
        print(f"smalldiv: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(args, args.command, params, columns, rows)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
