"""suite: the acceptance battery, one certificate per check."""
from __future__ import annotations

from config.constants import SuiteCheck
from cli.validators import RunConfig
from worker.suite import run_suite


def register(subparsers, common) -> None:
    suite = subparsers.add_parser("suite", parents=[common], help="run the acceptance battery")
    suite.add_argument("--checks", nargs="+", choices=SuiteCheck.ALL, help="run only these checks")
    suite.add_argument("--grid", help="YAML grid overriding config/suite.yaml")
    suite.add_argument("--workers", type=int, help="concurrent checks")
    suite.set_defaults(handler=handle_suite)


def handle_suite(config: RunConfig, data: dict) -> tuple[dict, bool]:
    report = run_suite(
        checks=config.options.get("checks"),
        seed=config.seed,
        out_dir=config.output_path,
        grid_path=config.options.get("grid"),
        concurrency=config.options.get("workers"),
    )
    return report, report["ok"]
