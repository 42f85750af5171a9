from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Dict, Optional, Sequence

from . import __version__
from .arith import (
    PrimePowerValueTable,
    convolve_prime_power,
    dirichlet_inverse_oracle,
    fiber_witnesses,
    inverse_prime_power,
    smf_eval,
    smf_spec,
)
from .comet import comet_emit, crossover_scan
from .config import STDOUT, RunConfig, load_config
from .emitter import (
    format_float,
    format_rational,
    open_output,
    write_comet_csv,
    write_violations_csv,
)
from .errors import USAGE_ERRORS, InvalidArgumentError, ReproductionError, SylvesterError
from .log import configure_logging, get_logger
from .primes import PrimeTable, build_table
from .primorial import check_phi_bar_minimality, check_sylvester_maximality, limit_diagnostics
from .unitsmod import sylvester_identity_check
from .violation import ViolationReport
from .workflow import Session

logger = get_logger("CLI")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _prime_table_for(p: int, config: RunConfig) -> PrimeTable:
    table = build_table(max(p, 2), max_limit=config.max_sieve_limit)
    if not table.is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime", "cli")
    return table


def _scan_provenance(session: Session, c: float) -> Dict[str, Any]:
    provenance = session.provenance()
    provenance["c"] = c
    return provenance


def cmd_comet(args: argparse.Namespace, config: RunConfig) -> int:
    if args.min < 3:
        raise InvalidArgumentError(f"--min must be >= 3, got {args.min}", "comet")
    config.require_sieve_for(args.max)
    session = Session(config)
    c = session.constant().value
    records = comet_emit(
        args.min,
        args.max,
        args.stride,
        session.table(),
        c,
        counts=session.counts(args.max),
        with_phi_bar=args.phi_bar,
        scheduler=session.chunks,
    )
    with open_output(args.out or config.output_path) as out:
        rows = write_comet_csv(records, out, args.phi_bar, _scan_provenance(session, c))
    logger.info(f"{rows} rows written")
    return EXIT_OK


def cmd_crossover(args: argparse.Namespace, config: RunConfig) -> int:
    if args.min < 3:
        raise InvalidArgumentError(f"--min must be >= 3, got {args.min}", "crossover")
    config.require_sieve_for(args.max)
    session = Session(config)
    c = session.constant().value
    violations = crossover_scan(
        args.min,
        args.max,
        c,
        session.table(),
        counts=session.counts(args.max),
        scheduler=session.chunks,
        precision_guard=config.precision_guard,
    )
    report = ViolationReport(violations)

    destination = args.out or config.output_path
    with open_output(destination) as out:
        write_violations_csv(report.violations, out, _scan_provenance(session, c))
    # stdout carries only CSV when the rows go there
    print(report.summary_line(), file=sys.stderr if destination == STDOUT else sys.stdout)

    if args.verify_claim and len(report):
        raise ReproductionError(
            f"expected no violations in [{args.min}, {args.max}]: {report.summary_line()}",
            "crossover",
            rows=report.violations,
        )
    return EXIT_OK


def cmd_constant(args: argparse.Namespace, config: RunConfig) -> int:
    session = Session(config.model_copy(update={"c_terms": args.terms}))
    constant = session.constant()
    lower, upper = constant.bracket
    print(
        f"c={format_float(constant.value)} terms={constant.terms_used} "
        f"last_prime={constant.last_prime} lower={format_float(lower)} upper={format_float(upper)}"
    )
    return EXIT_OK


def cmd_convolve(args: argparse.Namespace, config: RunConfig) -> int:
    _prime_table_for(args.p, config)
    value = convolve_prime_power(smf_spec(args.f), smf_spec(args.g), args.p, args.k)
    print(format_rational(value))
    return EXIT_OK


def cmd_inverse(args: argparse.Namespace, config: RunConfig) -> int:
    _prime_table_for(args.p, config)
    f = smf_spec(args.f)
    if args.oracle:
        values = PrimePowerValueTable.from_smf(f, [args.p], max(args.k, 1))
        value = dirichlet_inverse_oracle(values, args.p, args.k)
    else:
        value = inverse_prime_power(f, args.p, args.k)
    print(format_rational(value))
    return EXIT_OK


def cmd_units(args: argparse.Namespace, config: RunConfig) -> int:
    primes = [int(q) for q in args.primes.split(",") if q.strip()]
    m = 2
    for q in primes:
        m *= q
    table = build_table(max(m, 2), max_limit=config.max_sieve_limit)
    check = sylvester_identity_check(primes, args.n, table, verify_brute=args.brute)
    line = check.render()
    if check.brute is not None:
        line += f" brute={check.brute}"
    print(line)
    return EXIT_OK


def cmd_primorial(args: argparse.Namespace, config: RunConfig) -> int:
    session = Session(config)
    table = session.table()
    if args.check == "limits":
        diagnostics = limit_diagnostics(args.n, table)
        print("n,phi_bar,sylvester")
        for index, phi, s in diagnostics.rows():
            print(f"{index},{format_float(phi)},{format_float(s)}")
        return EXIT_OK

    check = check_phi_bar_minimality if args.check == "phi" else check_sylvester_maximality
    verdict = check(
        args.n,
        table,
        samples=args.samples,
        seed=args.seed,
        exhaustive_max=config.exhaustive_primorial_max,
        scheduler=session.chunks,
    )
    print(verdict.render())
    return EXIT_OK


def cmd_fiber(args: argparse.Namespace, config: RunConfig) -> int:
    f = smf_spec(args.f)
    table = Session(config).table()
    witnesses = fiber_witnesses(f, args.m, args.count, table)
    value = smf_eval(f, args.m, table)
    print(f"value={format_rational(value)} witnesses={','.join(str(w) for w in witnesses)}")
    return EXIT_OK


def _add_range_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--min", type=int, required=True, help="smallest n (>= 3)")
    parser.add_argument("--max", type=int, required=True, help="largest n")
    parser.add_argument("--out", default=None, help=f"output path, '{STDOUT}' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylvester",
        description="Goldbach comet, Sylvester factor and strongly multiplicative functions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--sieve-limit", type=int, default=None)
    parser.add_argument("--c-terms", type=int, default=None)
    parser.add_argument("--chunk-size", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--precision-guard", type=float, default=None)
    parser.add_argument("--log-level", default=None)

    sub = parser.add_subparsers(dest="command", required=True)

    comet = sub.add_parser("comet", help="emit n,g,sylvester,G rows")
    _add_range_flags(comet)
    comet.add_argument("--stride", type=int, default=1)
    comet.add_argument("--phi-bar", action="store_true", help="add the phi_bar column")
    comet.set_defaults(handler=cmd_comet)

    crossover = sub.add_parser("crossover", help="report n with S(n) >= G(n)")
    _add_range_flags(crossover)
    crossover.add_argument(
        "--verify-claim", action="store_true", help="exit 3 unless no violation is found"
    )
    crossover.set_defaults(handler=cmd_crossover)

    constant = sub.add_parser("constant", help="twin prime constant partial product")
    constant.add_argument("--terms", type=int, required=True)
    constant.set_defaults(handler=cmd_constant)

    convolve = sub.add_parser("convolve", help="(f*g)(p^k)")
    convolve.add_argument("--f", required=True)
    convolve.add_argument("--g", required=True)
    convolve.add_argument("--p", type=int, required=True)
    convolve.add_argument("--k", type=int, required=True)
    convolve.set_defaults(handler=cmd_convolve)

    inverse = sub.add_parser("inverse", help="f^-1(p^k)")
    inverse.add_argument("--f", required=True)
    inverse.add_argument("--p", type=int, required=True)
    inverse.add_argument("--k", type=int, required=True)
    inverse.add_argument("--oracle", action="store_true", help="use the recurrence")
    inverse.set_defaults(handler=cmd_inverse)

    units = sub.add_parser("units", help="check s*_m(2n) = S(d) s*_m(2)")
    units.add_argument("--primes", required=True, help="comma-separated odd primes")
    units.add_argument("--n", type=int, required=True)
    units.add_argument("--brute", action="store_true", help="also enumerate the lhs")
    units.set_defaults(handler=cmd_units)

    primorial = sub.add_parser("primorial", help="primorial extremality checks")
    primorial.add_argument("--check", choices=["phi", "sylvester", "limits"], required=True)
    primorial.add_argument("--n", type=int, required=True)
    primorial.add_argument("--samples", type=int, default=None)
    primorial.add_argument("--seed", type=int, default=0)
    primorial.set_defaults(handler=cmd_primorial)

    fiber = sub.add_parser("fiber", help="integers sharing f(m)")
    fiber.add_argument("--f", required=True)
    fiber.add_argument("--m", type=int, required=True)
    fiber.add_argument("--count", type=int, required=True)
    fiber.set_defaults(handler=cmd_fiber)

    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "sieve_limit": args.sieve_limit,
        "c_terms": args.c_terms,
        "chunk_size": args.chunk_size,
        "threads": args.threads,
        "precision_guard": args.precision_guard,
        "log_level": args.log_level,
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable[[argparse.Namespace, RunConfig], int] = args.handler

    try:
        config = load_config(_overrides(args))
        configure_logging(config.log_level)
        return handler(args, config)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SylvesterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:
        logger.exception(f"internal failure: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
