"""Command line front end: toric, nested, sv, verify and fiber-walk subcommands."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
import hashlib
from pathlib import Path
import sys
import time

from loguru import logger

from toricnest.algebra.orders import MonomialOrder, parse_order
from toricnest.config import get_settings
from toricnest.exceptions import ParseError, PreconditionError, ToricNestError, VerificationFailure
from toricnest.formats.parsing import (
    format_basis,
    parse_basis,
    parse_configuration,
    parse_counts,
    parse_nested_system,
    parse_sv_spec,
    read_text,
)
from toricnest.groebner.binomials import MarkedBasis, MarkedBinomial
from toricnest.groebner.buchberger import buchberger
from toricnest.groebner.verification import (
    check_groebner_basis,
    is_squarefree_initial,
    max_degree,
    verify_marking,
)
from toricnest.logging import configure_logging, resolve_log_settings
from toricnest.models.reports import RunReport, Verdicts
from toricnest.models.types import ConstructionMode
from toricnest.nested.bases import main1_basis
from toricnest.nested.system import build_nested
from toricnest.segre_veronese.bases import main2_basis, sorting_gb
from toricnest.segre_veronese.configuration import sv_configuration, sv_presentation
from toricnest.stats.fiber_walk import fiber_walk, walk_frame, write_walk
from toricnest.toric.configuration import Presentation
from toricnest.toric.generators import toric_basis, toric_generators

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _order_for(text: str | None, presentation: Presentation) -> MonomialOrder:
    kind = text or get_settings().groebner.default_order.value
    return parse_order(kind, presentation.source)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {out}")


def verify_basis(
    G: MarkedBasis,
    presentation: Presentation,
    oracle: list[MarkedBinomial],
    *,
    squarefree: bool = False,
) -> Verdicts:
    """
    Certificate, membership, S-pair and oracle verdicts for `G`; the
    squarefree initial ideal verdict only when `squarefree` asks for it.
    """
    certificate = verify_marking(G)
    verdicts = Verdicts(
        marking_certificate=certificate is not None,
        squarefree_initial_ideal=is_squarefree_initial(G) if squarefree else None,
    )
    if certificate is None:
        return verdicts
    check = check_groebner_basis(G, oracle, evaluate=presentation.evaluate)
    recomputed = buchberger(oracle, certificate.as_order(G))
    verdicts.certificate_weights = certificate.as_text()
    verdicts.members_in_ideal = check.members_in_ideal
    verdicts.s_pairs_reduce_to_zero = check.s_pairs_reduce_to_zero
    verdicts.oracle_agreement = check.generators_reduce_to_zero
    verdicts.matches_oracle_basis = recomputed.same_marked_set(G)
    return verdicts


def cmd_toric(args: argparse.Namespace, report: RunReport) -> MarkedBasis:
    C = parse_configuration(read_text(args.config))
    P = C.presentation()
    order = _order_for(args.order, P)
    G = toric_basis(C, order, presentation=P)
    report.order = order.describe()
    report.configuration_size = len(C)
    if args.verify:
        report.verdicts = verify_basis(G, P, toric_generators(C, presentation=P))
    _emit(format_basis(G, order), args.out)
    return G


def cmd_nested(args: argparse.Namespace, report: RunReport) -> MarkedBasis:
    spec = parse_nested_system(read_text(args.system))
    system = build_nested(
        spec.base,
        spec.inner,
        base_order=spec.base_order,
        inner_orders=spec.inner_orders,
    )
    mode = ConstructionMode(args.mode)
    report.mode = mode.value
    report.configuration_size = len(system.result)
    order: MonomialOrder | None = None
    if mode is ConstructionMode.MAIN1:
        G = main1_basis(system)
    elif mode is ConstructionMode.MAIN2:
        G = main2_basis(system, spec.spec)
    else:
        order = _order_for(args.order, system.presentation)
        G = toric_basis(system.result, order, presentation=system.presentation)
        report.order = order.describe()
    if args.verify:
        oracle = toric_generators(system.result, presentation=system.presentation)
        report.verdicts = verify_basis(G, system.presentation, oracle)
    _emit(format_basis(G, order), args.out)
    return G


def cmd_sv(args: argparse.Namespace, report: RunReport) -> MarkedBasis:
    C = sv_configuration(parse_sv_spec(read_text(args.spec)))
    P = sv_presentation(C)
    G = sorting_gb(C, presentation=P)
    report.configuration_size = len(C)
    if args.verify:
        report.verdicts = verify_basis(G, P, toric_generators(C, presentation=P), squarefree=True)
    _emit(format_basis(G), args.out)
    return G


def cmd_verify(args: argparse.Namespace, report: RunReport) -> MarkedBasis:
    C = parse_configuration(read_text(args.config))
    P = C.presentation()
    G = parse_basis(read_text(args.basis), P.source)
    report.configuration_size = len(C)
    report.verdicts = verify_basis(G, P, toric_generators(C, presentation=P))
    return G


def cmd_fiber_walk(args: argparse.Namespace, report: RunReport) -> MarkedBasis:
    C = parse_configuration(read_text(args.config))
    P = C.presentation()
    if args.basis is not None:
        G = parse_basis(read_text(args.basis), P.source)
    else:
        order = _order_for(args.order, P)
        G = toric_basis(C, order, presentation=P)
        report.order = order.describe()
    start = parse_counts(args.counts, P.source)
    walk = fiber_walk(P, G, start, steps=args.steps, seed=args.seed)
    target = P.image_exponents(start)
    report.configuration_size = len(C)
    report.steps = walk.steps
    report.seed = walk.seed
    report.verdicts = Verdicts(
        fiber_preserved=all(P.image_exponents(s) == target for s in walk.states)
    )
    if args.out is None:
        sys.stdout.write(walk_frame(walk).write_csv())
    else:
        write_walk(walk, args.out)
    return G


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricnest",
        description="Gröbner bases of toric ideals and nested configurations",
    )
    parser.add_argument("--log-level", default=None, help="Override TORICNEST_LOG_LEVEL")
    parser.add_argument("--report", type=Path, default=None, help="Write the run report JSON here")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, verify: bool = True) -> None:
        p.add_argument("--out", type=Path, default=None, help="Output file (stdout if omitted)")
        if verify:
            p.add_argument("--verify", action="store_true", help="Run the Gröbner basis checks")

    toric = sub.add_parser("toric", help="Reduced Gröbner basis of a toric ideal")
    toric.add_argument("config", type=Path, help="Configuration file")
    toric.add_argument("--order", default=None, help="lex, grlex, grevlex or weighted:w1,...[:tie]")
    common(toric)
    toric.set_defaults(handler=cmd_toric)

    nested = sub.add_parser("nested", help="Quadratic Gröbner basis of a nested configuration")
    nested.add_argument("system", type=Path, help="Nested system file")
    nested.add_argument(
        "--mode",
        choices=[m.value for m in ConstructionMode],
        default=ConstructionMode.MAIN1.value,
        help="Construction to run",
    )
    nested.add_argument("--order", default=None, help="Order for oracle mode")
    common(nested)
    nested.set_defaults(handler=cmd_nested)

    sv = sub.add_parser("sv", help="Sorting Gröbner basis of a Segre-Veronese configuration")
    sv.add_argument("spec", type=Path, help="Segre-Veronese spec file")
    common(sv)
    sv.set_defaults(handler=cmd_sv)

    verify = sub.add_parser("verify", help="Check a marked basis against a configuration")
    verify.add_argument("config", type=Path, help="Configuration file")
    verify.add_argument("basis", type=Path, help="Marked basis file over the presentation ring")
    verify.set_defaults(handler=cmd_verify)

    walk = sub.add_parser("fiber-walk", help="Random walk on the fiber of an observed vector")
    walk.add_argument("config", type=Path, help="Configuration file")
    walk.add_argument("--counts", required=True, help="Observed counts, e.g. '1,0,2' or 'x_t1.t1*x_t2.t2'")
    walk.add_argument("--basis", type=Path, default=None, help="Marked basis to use as moves")
    walk.add_argument("--order", default=None, help="Order for computing the moves")
    walk.add_argument("--steps", type=int, default=None, help="Number of proposals")
    walk.add_argument("--seed", type=int, default=None, help="Random seed")
    common(walk, verify=False)
    walk.set_defaults(handler=cmd_fiber_walk)
    return parser


def _inputs(args: argparse.Namespace) -> dict[str, Path]:
    names = ("config", "system", "spec", "basis")
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(resolve_log_settings(get_settings(), args.log_level or None))

    started = time.perf_counter()
    report = RunReport(command=list(argv if argv is not None else sys.argv[1:]))
    try:
        report.input_digests = {name: _digest(path) for name, path in _inputs(args).items()}
        G = args.handler(args, report)
    except ParseError as exc:
        logger.error(f"Parse error: {exc}")
        return EXIT_PARSE
    except OSError as exc:
        logger.error(f"Cannot read input: {exc}")
        return EXIT_PARSE
    except PreconditionError as exc:
        logger.error(f"Precondition violated: {exc}")
        return EXIT_PRECONDITION
    except VerificationFailure as exc:
        logger.error(f"Verification failed: {exc}")
        return EXIT_VERIFICATION
    except ToricNestError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_ERROR

    report.basis_size = len(G)
    report.max_degree = max_degree(G)
    report.wall_time_seconds = round(time.perf_counter() - started, 6)
    if args.report is not None:
        args.report.parent.mkdir(parents=True, exist_ok=True)
        args.report.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    else:
        logger.info(f"Run report: {report.model_dump_json()}")

    if not report.verdicts.passed:
        failed = [name for name, ok in report.verdicts.requested().items() if not ok]
        logger.error(f"Failed verdicts: {failed}")
        return EXIT_VERIFICATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
