"""nabla build | check"""
from __future__ import annotations

from config.constants import EquinabMode
from algebra.nabla import build_nabla, check_equinab, check_integration
from cli.records import parse_character, parse_nabla, parse_weight, records_of
from cli.validators import RunConfig
from worker.artifacts import build_integration_record, build_nabla_record


def register(subparsers, common) -> None:
    group = subparsers.add_parser("nabla", help="integrating functions on W")
    actions = group.add_subparsers(dest="action", required=True)

    build = actions.add_parser("build", parents=[common], help="construct nabla for balanced weights")
    build.add_argument("--n", type=int, nargs="+", help="weight coordinates n_0 .. n_d")
    build.set_defaults(handler=handle_build)

    check = actions.add_parser("check", parents=[common], help="verify the integration and descent conditions")
    check.add_argument("--mode", choices=sorted(EquinabMode.ALL), default=EquinabMode.FULL)
    check.set_defaults(handler=handle_check)


def handle_build(config: RunConfig, data: dict) -> tuple[dict, bool]:
    if config.options.get("n"):
        data = {"n": config.options["n"], "r": config.r}
    records = [build_nabla_record(weight, build_nabla(weight))
               for weight in (parse_weight(record, config) for record in records_of(data, "weights"))]
    return (records[0] if len(records) == 1 else {"nablas": records}), True


def handle_check(config: RunConfig, data: dict) -> tuple[dict, bool]:
    results = []
    for record in records_of(data, "nablas"):
        weight, nabla = parse_nabla(record, config)
        result = {}
        if weight:
            result["integration"] = build_integration_record(check_integration(nabla, weight.n, weight.r))
        if weight or "character" in record:
            c = parse_character(record, config)
            result["equinab"] = build_integration_record(check_equinab(nabla, c, config.options["mode"]))
        results.append(result)
    ok = all(check["ok"] for result in results for check in result.values())
    return (results[0] if len(results) == 1 else {"results": results}), ok
