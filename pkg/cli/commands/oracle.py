"""oracle compare"""
from __future__ import annotations

from algebra.oracle.compare import compare_closed_form
from algebra.oracle.identities import run_identity_checks
from cli.records import parse_character
from cli.validators import RunConfig
from worker.artifacts import build_character_record, build_compare_record, build_identity_record


def register(subparsers, common) -> None:
    group = subparsers.add_parser("oracle", help="brute-force Hecke operators over Laurent series")
    actions = group.add_subparsers(dest="action", required=True)
    compare = actions.add_parser("compare", parents=[common], help="compare coset sums with the closed forms")
    compare.add_argument("--identities", action="store_true", help="also run the group identity checks")
    compare.add_argument("--samples", type=int, default=50, help="random decompositions for the round trip")
    compare.set_defaults(handler=handle_compare)


def handle_compare(config: RunConfig, data: dict) -> tuple[dict, bool]:
    c = parse_character(data, config)
    report = compare_closed_form(c, config.precision)
    payload = build_compare_record(report)
    payload["character"] = build_character_record(c)
    ok = report.ok
    if config.options.get("identities"):
        identities = run_identity_checks(c.d, c.q, config.options["samples"], config.seed, config.precision)
        payload["identities"] = [build_identity_record(result) for result in identities]
        ok = ok and all(result.ok for result in identities)
    return payload, ok
