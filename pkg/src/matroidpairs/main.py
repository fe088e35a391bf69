"""
Main entry point for the matroidpairs catalogue and pair search.
"""
import argparse
import asyncio
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from .config import RunConfig, load_expected_counts
from .errors import MatroidError
from .generation import Catalogue
from .matroids import find_separation, identify, is_3connected, is_44S_connected, is_ifc
from .search.records import resolve_name
from .utils.logging import setup_logger
from .utils.pool import WorkerPool
from .utils.trackers import RunState
from .workflows import (
    IfcWorkflow,
    PairsWorkflow,
    PopulateWorkflow,
    SearchWorkflow,
    VerificationWorkflow,
)

logger = setup_logger()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidpairs",
        description="Catalogue 3-connected binary matroids and search for fascinating pairs",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--jobs", type=int, help="Worker processes (default: MCAT_JOBS or cores)")
    parser.add_argument("--catalogue", type=Path, help="MCAT file of the full catalogue")
    parser.add_argument("--ifc", type=Path, help="MCAT file of the internally 4-connected part")
    parser.add_argument("--out", type=Path, help="Directory for reports and summary.json")
    parser.add_argument("--max-size", type=int, help="Largest ground set to generate")
    parser.add_argument("--log-dir", type=Path, help="Directory for the debug log")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug output on the console")

    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("populate", help="Generate the catalogue up to --max-size")
    commands.add_parser("ifc", help="Filter the catalogue to its internally 4-connected members")
    search = commands.add_parser("search", help="Search for fascinating pairs of one size")
    search.add_argument("--size", type=int, choices=(14, 15), required=True)
    commands.add_parser("pairs", help="Combine the searches and find the interesting pairs")
    commands.add_parser("verify-moves", help="Verify every move certificate")
    commands.add_parser("counts", help="Print the count vectors of the existing MCAT files")
    show = commands.add_parser("show", help="Describe one named or encoded matroid")
    show.add_argument("--matroid", required=True, help="Name such as K5, Delta4* or A6")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Environment and ``.env`` first, then whatever was given on the command line."""
    overrides = {
        "jobs": args.jobs,
        "catalogue_path": args.catalogue,
        "ifc_path": args.ifc,
        "report_path": args.out,
        "max_size": args.max_size,
        "log_dir": args.log_dir,
        "verbosity": 2 if args.verbose else None,
    }
    return RunConfig(**{key: value for key, value in overrides.items() if value is not None})


def count_lines(config: RunConfig) -> List[str]:
    lines = []
    for label, path in (("Populate", config.catalogue_path), ("PopulateIFC", config.ifc_path)):
        if not path.exists():
            lines.append(f"{label}: {path} does not exist")
            continue
        catalogue = Catalogue.load(path)
        lines.extend(f"{label}({n}): {catalogue.counts(n)}" for n in sorted(catalogue.completed))
    return lines


def show_lines(name: str) -> List[str]:
    matroid = resolve_name(name)
    lines = [
        f"{name}: size {matroid.size}, rank {matroid.rows}",
        f"identified as: {identify(matroid) or 'unnamed'}",
        f"labels: {' '.join(str(label) for label in matroid.labels)}",
        "reduced matrix:",
        str(matroid.reduced_matrix()),
        f"3-connected: {is_3connected(matroid)}",
        f"internally 4-connected: {is_ifc(matroid)}",
        f"(4,4,S)-connected: {is_44S_connected(matroid)}",
    ]
    for k in (1, 2, 3):
        separation = find_separation(matroid, k)
        if separation is not None:
            side = matroid.labels_of(separation.side)
            lines.append(f"{separation.kind.value}: {side} (lambda {separation.lambda_value})")
            break
    return lines


async def run_command(args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    """Run one workflow and return its final inputs."""
    state = RunState()
    with WorkerPool(config.jobs, description=args.command) as pool:
        if args.command == "populate":
            workflow = PopulateWorkflow(config, pool, state, load_expected_counts())
            return await workflow.setup().ainvoke({})
        if args.command == "ifc":
            workflow = IfcWorkflow(config, pool, state, load_expected_counts())
            return await workflow.setup().ainvoke({})
        if args.command == "search":
            workflow = SearchWorkflow(config, pool, state, load_expected_counts())
            return await workflow.setup().ainvoke({"size": args.size})
        if args.command == "pairs":
            workflow = PairsWorkflow(config, pool, state, load_expected_counts())
            return await workflow.setup().ainvoke({})
        if args.command == "verify-moves":
            return await VerificationWorkflow(config, pool, state).setup().ainvoke({})
    raise ValueError(f"unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args)
        setup_logger(config.log_dir, config.verbosity)

        if args.command == "counts":
            print("\n".join(count_lines(config)))
            sys.exit(0)
        if args.command == "show":
            print("\n".join(show_lines(args.matroid)))
            sys.exit(0)

        result = asyncio.run(run_command(args, config))
        if result.get("report"):
            print("\n".join(result["report"]))
        if not result.get("success"):
            print(f"\n{args.command} failed: {result.get('error', 'a check did not pass')}")
        sys.exit(0 if result.get("success") else 1)

    except KeyboardInterrupt:
        print(f"\n{args.command} cancelled by user")
        sys.exit(1)
    except ValidationError as e:
        print(f"\nInvalid configuration: {e}")
        sys.exit(1)
    except MatroidError as e:
        logger.error(str(e))
        print(f"\nError: {e}")
        sys.exit(1)
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        print(f"\nUnexpected error: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
