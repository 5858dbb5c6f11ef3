"""Command-line front end: one subcommand per estimator plus the oracle
self-test and environment inspection."""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from bck_net.core import (
    BckNetError,
    ConfigurationError,
    FieldMode,
    LatticeBox,
    OutcomeKind,
)
from bck_net.estimators import Estimate, get_supported_estimators
from bck_net.simulation import (
    ReplicateRunner,
    RunConfig,
    format_results,
    format_table,
    oracle_check,
)

__all__: list[str] = ["build_parser", "parse_args", "run", "main", "configure_logging"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

_ARG_TYPES = {
    "float": {"type": float},
    "int": {"type": int},
    "float_list": {"type": float, "nargs": "+"},
    "int_list": {"type": int, "nargs": "+"},
}


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.INFO)


def _flag(name: str) -> str:
    return "--" + name.replace("_", "-")


def _common_parser() -> argparse.ArgumentParser:
    # Defaults are suppressed so only explicit flags override the config file
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    model = common.add_argument_group("model")
    model.add_argument(
        "--mode", choices=[m.value for m in FieldMode], help="joint or layered"
    )
    model.add_argument("--b", type=float, help="branching rate")
    model.add_argument("--k", type=float, help="killing rate")
    model.add_argument(
        "--beta", type=float, help="scale parameter (0: site-level b and k)"
    )
    model.add_argument(
        "--resample",
        action="store_true",
        help="give joint-mode kill sites a latent arrow",
    )
    run = common.add_argument_group("run")
    run.add_argument("--reps", type=int, help="number of replicates")
    run.add_argument("--seed", type=int, help="environment seed")
    run.add_argument("--threads", type=int, help="worker threads for replicates")
    run.add_argument("--format", choices=["csv", "json"], help="output format")
    run.add_argument("--out", help="output file (default: stdout)")
    run.add_argument("--config", help="flat key=value file; flags override it")
    run.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bck-net",
        description="Branching-coalescing-killing random walks: simulation and checks",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    common = _common_parser()

    for name, cls in get_supported_estimators().items():
        sub = subparsers.add_parser(
            name,
            parents=[common],
            help=cls.get_description(),
            argument_default=argparse.SUPPRESS,
        )
        for field_name, meta in cls.get_default_parameters().items():
            sub.add_argument(
                _flag(field_name),
                dest=field_name,
                help=meta.get("label"),
                **_ARG_TYPES[meta["type"]],
            )

    oracle = subparsers.add_parser(
        "oracle",
        parents=[common],
        help="Duality self-test on stored lattices",
        argument_default=argparse.SUPPRESS,
    )
    oracle.add_argument("--width", type=int, help="lattice width (<= 60)")
    oracle.add_argument("--height", type=int, help="lattice height (<= 60)")
    oracle.add_argument(
        "--b-grid", dest="b_grid", type=float, nargs="+", help="site b values"
    )
    oracle.add_argument(
        "--k-grid", dest="k_grid", type=float, nargs="+", help="site k values"
    )

    inspect = subparsers.add_parser(
        "inspect",
        parents=[common],
        help="Dump site outcomes of a small box",
        argument_default=argparse.SUPPRESS,
    )
    inspect.add_argument("--width", type=int, help="box width")
    inspect.add_argument("--height", type=int, help="box height")
    return parser


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Build a validated RunConfig from command-line arguments.

    Raises:
        SystemExit: usage error (code 2), printed by argparse
        ConfigurationError: invalid value or combination
    """
    parser = build_parser()
    argv = list(argv)
    if not argv:
        parser.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)

    namespace = vars(parser.parse_args(argv))
    namespace.pop("verbose", None)
    config_path = namespace.pop("config", None)
    if config_path:
        return RunConfig.from_file(config_path, **namespace).validate()
    return RunConfig(**namespace).validate()


def _inspect_rows(config: RunConfig) -> str:
    field = config.scaled.field_for(config.seed, 0)
    box = LatticeBox(0, max(0, config.width - 1), 0, max(0, config.height - 1))
    xs, ts = box.even_sites()
    kinds = field.kinds(xs, ts) if xs.size else []
    marks = field.kill_marks(xs, ts) if xs.size else []
    rows = [
        {
            "x": int(x),
            "t": int(t),
            "kind": OutcomeKind(int(kind)).name,
            "kill_mark": bool(mark),
        }
        for x, t, kind, mark in zip(xs, ts, kinds, marks)
    ]
    columns = ["x", "t", "kind", "kill_mark"]
    return format_table(rows, columns, config.format, config.echo())


def _oracle(config: RunConfig) -> tuple[str, int]:
    report = oracle_check(
        config.width,
        config.height,
        config.reps,
        b_grid=config.b_grid or [0.0, 0.3, 1.0],
        k_grid=config.k_grid or [0.0, 0.2],
        mode=FieldMode(config.mode),
        seed=config.seed,
        corrupt_rotation=config.corrupt_rotation,
    )
    estimates = [
        Estimate(
            "oracle_discrepancies",
            float(len(report.discrepancies)),
            0.0,
            max(1, report.lattices),
            reference=0.0,
            notes=f"{report.sites} sites over {report.lattices} lattices",
        )
    ]
    for d in report.discrepancies:
        logger.error(f"oracle discrepancy: {d}")
        estimates.append(
            Estimate(
                "discrepancy",
                1.0,
                0.0,
                1,
                notes=str(d),
                extras={"x": float(d.x), "t": float(d.t)},
            )
        )
    code = EXIT_OK if report.passed else EXIT_RUNTIME
    return format_results(estimates, config), code


def run(config: RunConfig) -> int:
    """Execute the configured subcommand and write its data output.

    Returns:
        0 on success, 1 on a runtime failure or failed self-test, 2 on an
        invalid configuration. Nothing is written to the data stream on failure.
    """
    try:
        config.validate()
        runner = ReplicateRunner(config.threads)
        logger.info(f"Running {config.command} [{config.scaled.describe()}]")
        code = EXIT_OK
        if config.command == "oracle":
            text, code = _oracle(config)
        elif config.command == "inspect":
            text = _inspect_rows(config)
        else:
            estimators = get_supported_estimators()
            if config.command not in estimators:
                raise ConfigurationError(f"unknown command {config.command!r}")
            estimator = estimators[config.command]()
            estimates = estimator.run(config, runner)
            for estimate in estimates:
                logger.info(str(estimate))
            text = format_results(estimates, config)
    except ConfigurationError as exc:
        logger.error(f"Invalid configuration: {exc}")
        return EXIT_USAGE
    except BckNetError as exc:
        logger.error(f"{config.command} failed: {exc}")
        return EXIT_RUNTIME

    if config.out:
        try:
            Path(config.out).write_text(text)
        except OSError as exc:
            logger.error(f"cannot write {config.out}: {exc}")
            return EXIT_RUNTIME
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return code


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    configure_logging("-v" in argv or "--verbose" in argv)
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ConfigurationError as exc:
        logger.error(f"Invalid configuration: {exc}")
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
