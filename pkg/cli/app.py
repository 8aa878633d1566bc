"""Command-line application factory."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence, TextIO

from config.constants import ExitCode
from cli.commands import criterion, lattice, module, nabla, oracle, partial, realize, suite, weights
from cli.error_handler import error_response
from cli.validators import build_run_config
from worker.artifacts import dump_json, write_json


logger = logging.getLogger(__name__)

COMMAND_GROUPS = (weights, nabla, lattice, criterion, module, realize, partial, oracle, suite)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="Weyl group rank")
    common.add_argument("--q", type=int, help="residue field size")
    common.add_argument("--r", type=int, help="amplitude, pi^r = q")
    common.add_argument("--precision", type=int, help="Laurent series working precision")
    common.add_argument("--seed", type=int, help="seed for random probes")
    common.add_argument("--in", dest="input", help="JSON input file, '-' for stdin")
    common.add_argument("--out", help="write the JSON result (a directory for suite)")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")
    return common


class _Parser(argparse.ArgumentParser):
    """Raise instead of exiting so usage errors become JSON bodies."""

    def error(self, message):
        raise argparse.ArgumentError(None, message)


def create_parser() -> argparse.ArgumentParser:
    """Create the parser with every command group registered."""
    common = _common_options()
    parser = _Parser(prog="hecke-lattices", description="Stable lattices in tamely ramified principal series")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for group in COMMAND_GROUPS:
        group.register(subparsers, common)
    return parser


def _load_input(path: str | None) -> dict:
    if not path:
        return {}
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def run_command(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """Run one command; JSON goes to stdout and the exit code is returned."""
    stdout = stdout or sys.stdout
    raw = sys.argv[1:] if argv is None else list(argv)
    pretty = "--pretty" in raw
    try:
        args = create_parser().parse_args(raw)
        pretty = args.pretty
        config = build_run_config(args)
        if config.verbose:
            logging.getLogger().setLevel(logging.INFO)
        data = _load_input(config.input_path)
        payload, ok = args.handler(config, data)
    except argparse.ArgumentError as e:
        payload, code = {"error": "Bad Usage", "message": str(e)}, ExitCode.USAGE
    except Exception as e:
        payload, code = error_response(e)
    else:
        code = ExitCode.OK if ok else ExitCode.FALSE_VERDICT
        if config.output_path and config.command != "suite":
            write_json(config.output_path, payload)

    stdout.write(dump_json(payload, pretty))
    stdout.write("\n")
    return code
