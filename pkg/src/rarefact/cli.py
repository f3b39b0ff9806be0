"""Command-line surface: partial sums, rarefied sums, profile samples,
spectral and trace tables, exact norms, and the verification suites.

Output is CSV (or JSON mirroring the same records) with reals printed to 17
significant digits; identical configurations produce byte-identical output.
Exit codes: 0 success, 1 any FAIL verdict, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from multiprocessing import Pool

from . import cyclotomic, verify
from .lucas import (
    DEFAULT_MAX_DIGITS,
    DEFAULT_SEED,
    Verdict,
    factor_congruence_check,
    lucas,
)
from .fractal import FractalProfile
from .primes import odd_primes_upto
from .sequences import (
    DEFAULT_ORACLE_BOUND,
    OracleBoundError,
    build_twist,
    closed_form_partial_sum,
    naive_partial_sum,
    parse_sequence_literal,
    rarefied_sum,
    rarefied_sum_via_twists,
)
from .spectral import spectral_report

SEED_ENV_VAR = "RAREFACT_SEED"


def _real(value: float) -> str:
    return f"{value:.17g}"


def _complex(value: complex) -> str:
    if value.imag == 0:
        return _real(value.real)
    return f"{_real(value.real)}{value.imag:+.17g}j"


def _emit_rows(header: list[str], rows: list[list], fmt: str) -> None:
    if fmt == "json":
        records = [dict(zip(header, row)) for row in rows]
        print(json.dumps(records, indent=None, separators=(",", ":")))
        return
    print(",".join(header))
    for row in rows:
        print(",".join(_real(v) if isinstance(v, float) else str(v) for v in row))


def _emit_value(value, fmt: str) -> None:
    if fmt == "json":
        if isinstance(value, complex):
            print(json.dumps({"re": value.real, "im": value.imag}))
        else:
            print(json.dumps({"value": value}))
        return
    if isinstance(value, complex):
        print(_complex(value))
    else:
        print(value)


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation; everything run() needs to stay deterministic."""

    subcommand: str
    sequence: str | None = None
    n_terms: int | None = None
    p: int | None = None
    pmax: int | None = None
    twist: tuple[int, int] | None = None
    count: int | None = None
    branch: int = 0
    method: str | None = None
    support: str | None = None
    gamma: str | None = None
    squares: bool = False
    factor: bool = False
    max_digits: int = DEFAULT_MAX_DIGITS
    suite: str = "all"
    fmt: str = "csv"
    jobs: int = 1
    bound: int | None = None
    seed: int = DEFAULT_SEED

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        seed = int(os.environ.get(SEED_ENV_VAR, DEFAULT_SEED))
        fields = {
            key: value for key, value in vars(args).items() if key in cls.__dataclass_fields__
        }
        if fields.get("twist") is not None:
            fields["twist"] = tuple(fields["twist"])
        return cls(seed=seed, **fields)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rarefact",
        description="Rarefied sums of b-multiplicative sequences and their exact invariants.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")

    p_sum = sub.add_parser("sum", help="partial sum of the first N terms")
    p_sum.add_argument("--seq", dest="sequence", required=True,
                       help='sign literal like "+-" or JSON [[re,im],...] weights')
    p_sum.add_argument("--N", dest="n_terms", type=int, required=True)
    p_sum.add_argument("--method", choices=("closed", "naive"), default="closed")
    p_sum.add_argument("--bound", type=int, default=None, help="naive oracle bound override")
    add_format(p_sum)

    p_rar = sub.add_parser("rarefy", help="sum over indices divisible by p")
    p_rar.add_argument("--seq", dest="sequence", required=True)
    p_rar.add_argument("--p", type=int, required=True)
    p_rar.add_argument("--N", dest="n_terms", type=int, required=True)
    p_rar.add_argument("--method", choices=("twist", "naive"), default="twist")
    p_rar.add_argument("--bound", type=int, default=None)
    add_format(p_rar)

    p_samp = sub.add_parser("sample-f", help="sample the periodic profile over one period")
    p_samp.add_argument("--seq", dest="sequence", required=True)
    p_samp.add_argument("--twist", nargs=2, type=int, metavar=("P", "J"), default=None,
                        help="twist the +-1 sequence by zeta_P^(J n) first")
    p_samp.add_argument("--count", type=int, required=True)
    p_samp.add_argument("--branch", type=int, default=0, help="branch index of log d(b)")
    p_samp.add_argument("--jobs", type=int, default=1)
    add_format(p_samp)

    p_spec = sub.add_parser("spectral", help="spectral table for odd primes up to pmax")
    p_spec.add_argument("--pmax", type=int, required=True)
    add_format(p_spec)

    p_norm = sub.add_parser("norm", help="exact norm of a support polynomial product")
    p_norm.add_argument("--p", type=int, required=True)
    p_norm.add_argument("--support", required=True,
                        help='coefficient list, e.g. "1,1,-1" for 1 + T - T^2')
    add_format(p_norm)

    p_xi = sub.add_parser("xi", help="numeric coset products for a subgroup of F_p^x")
    p_xi.add_argument("--p", type=int, required=True)
    group = p_xi.add_mutually_exclusive_group()
    group.add_argument("--gamma", default=None, help="comma-separated subgroup generators")
    group.add_argument("--squares", action="store_true", help="use the subgroup of squares")
    p_xi.add_argument("--support", default="1,-1")
    add_format(p_xi)

    p_tr = sub.add_parser("trace-table", help="trace of the square-coset products, p = 1 mod 4")
    p_tr.add_argument("--pmax", type=int, required=True)
    add_format(p_tr)

    p_luc = sub.add_parser("lucas", help="Lucas numbers of prime index, optionally factored")
    p_luc.add_argument("--pmax", type=int, required=True)
    p_luc.add_argument("--factor", action="store_true")
    p_luc.add_argument("--max-digits", dest="max_digits", type=int,
                       default=DEFAULT_MAX_DIGITS)
    add_format(p_luc)

    p_ver = sub.add_parser("verify", help="run the identity suites")
    p_ver.add_argument("positional_suite", nargs="?", default=None,
                       choices=verify.SUITE_NAMES + ("all",),
                       help="suite name (same as --suite)")
    p_ver.add_argument("--suite", default=None, choices=verify.SUITE_NAMES + ("all",))
    p_ver.add_argument("--pmax", type=int, default=None)
    return parser


def _parse_support(text: str) -> cyclotomic.Support:
    try:
        coeffs = [int(c.strip()) for c in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed support coefficient list {text!r}") from None
    return cyclotomic.support_from_coefficients(coeffs)


def _profile_for(config: RunConfig) -> FractalProfile:
    seq = parse_sequence_literal(config.sequence)
    if config.twist is not None:
        seq = build_twist(seq, config.twist[0], config.twist[1])
    return FractalProfile(seq, log_branch=config.branch)


def _sample_point(args: tuple[FractalProfile, float]) -> tuple[float, float, float]:
    profile, y = args
    value = profile.profile_at(y)
    return (y, value.real, value.imag)


def _run_sum(config: RunConfig) -> int:
    seq = parse_sequence_literal(config.sequence)
    if config.n_terms == 0:
        _emit_value(0j, config.fmt)
        return 0
    if config.method == "naive":
        bound = config.bound if config.bound is not None else DEFAULT_ORACLE_BOUND
        value = naive_partial_sum(seq, config.n_terms, bound)
    else:
        value = closed_form_partial_sum(seq, config.n_terms)
    _emit_value(value, config.fmt)
    return 0


def _run_rarefy(config: RunConfig) -> int:
    seq = parse_sequence_literal(config.sequence)
    if config.method == "naive":
        bound = config.bound if config.bound is not None else DEFAULT_ORACLE_BOUND
        value = rarefied_sum(seq, config.p, config.n_terms, bound)
    else:
        value = rarefied_sum_via_twists(seq, config.p, config.n_terms)
    _emit_value(value, config.fmt)
    return 0


def _run_sample(config: RunConfig) -> int:
    profile = _profile_for(config)
    if config.count < 2:
        raise ValueError("--count must be at least 2")
    ys = [i / config.count for i in range(config.count)]
    if config.jobs > 1:
        with Pool(config.jobs) as pool:
            rows = pool.map(_sample_point, [(profile, y) for y in ys])
    else:
        rows = [_sample_point((profile, y)) for y in ys]
    _emit_rows(["y", "re", "im"], [list(row) for row in rows], config.fmt)
    return 0


def _run_spectral(config: RunConfig) -> int:
    rows = []
    for p in odd_primes_upto(config.pmax):
        report = spectral_report(p)
        rows.append([p, report.s, report.r, report.lambda1, report.lambda2,
                     report.alpha, report.beta])
    _emit_rows(["p", "s", "r", "lambda1", "lambda2", "alpha", "beta"], rows, config.fmt)
    return 0


def _run_norm(config: RunConfig) -> int:
    support = _parse_support(config.support)
    expansion = cyclotomic.product_over_set(config.p, support, range(1, config.p))
    _emit_value(cyclotomic.norm_from_expansion(expansion), config.fmt)
    return 0


def _run_xi(config: RunConfig) -> int:
    if config.gamma:
        generators = [int(g.strip()) for g in config.gamma.split(",")]
        system = cyclotomic.CosetSystem.from_generators(config.p, generators)
    elif config.squares:
        system = cyclotomic.CosetSystem.squares(config.p)
    else:
        system = cyclotomic.CosetSystem.full_group(config.p)
    support = _parse_support(config.support)
    rows = []
    for coset, element in zip(system.cosets, cyclotomic.coset_products(system, support)):
        value = cyclotomic.evaluate_numeric(element, 1)
        rows.append([coset[0], value.real, value.imag])
    _emit_rows(["coset", "re", "im"], rows, config.fmt)
    return 0


def _run_trace_table(config: RunConfig) -> int:
    rows = []
    for p in odd_primes_upto(config.pmax):
        if p % 4 != 1:
            continue
        system = cyclotomic.CosetSystem.squares(p)
        rows.append([p, cyclotomic.trace_of_coset_products(system, cyclotomic.ONE_MINUS_T)])
    _emit_rows(["p", "trace"], rows, config.fmt)
    return 0


def _run_lucas(config: RunConfig) -> int:
    rows = []
    failed = False
    for p in odd_primes_upto(config.pmax):
        if p < 5:
            continue
        value = lucas(p)
        if not config.factor:
            rows.append([p, value])
            continue
        report = factor_congruence_check(p, max_digits=config.max_digits, seed=config.seed)
        if report.factors is None:
            factors = ""
        else:
            factors = "*".join(
                str(q) if mult == 1 else f"{q}^{mult}" for q, mult in report.factors
            )
        rows.append([p, value, factors, report.status.value])
        failed = failed or report.status is Verdict.FAIL
    header = ["p", "lucas", "factors", "verdict"] if config.factor else ["p", "lucas"]
    _emit_rows(header, rows, config.fmt)
    return 1 if failed else 0


def _run_verify(config: RunConfig) -> int:
    suite = config.suite
    names = verify.SUITE_NAMES if suite == "all" else (suite,)
    results = verify.run_suites(names, pmax=config.pmax, seed=config.seed)
    width = max(len(f"{r.suite}: {r.name}") for r in results)
    failed = False
    for result in results:
        tag = "PASS" if result.passed else "FAIL"
        label = f"{result.suite}: {result.name}"
        detail = f"  [{result.detail}]" if result.detail else ""
        print(f"{tag}  {label:<{width}}{detail}")
        failed = failed or not result.passed
    print(f"{'FAIL' if failed else 'PASS'}  {sum(r.passed for r in results)}/{len(results)} checks")
    return 1 if failed else 0


_RUNNERS = {
    "sum": _run_sum,
    "rarefy": _run_rarefy,
    "sample-f": _run_sample,
    "spectral": _run_spectral,
    "norm": _run_norm,
    "xi": _run_xi,
    "trace-table": _run_trace_table,
    "lucas": _run_lucas,
    "verify": _run_verify,
}


def run(config: RunConfig) -> int:
    return _RUNNERS[config.subcommand](config)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.subcommand == "verify":
        chosen = args.suite or args.positional_suite or "all"
        if args.suite and args.positional_suite and args.suite != args.positional_suite:
            print("error: conflicting suite selections", file=sys.stderr)
            return 2
        args.suite = chosen
    config = RunConfig.from_args(args)
    try:
        return run(config)
    except OracleBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
