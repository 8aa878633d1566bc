"""module reduce | make | validate"""
from __future__ import annotations

from algebra.wtype import WTypeModule, make_wtype_module, reduce_lattice, validate_action
from cli.records import parse_character, parse_eps, parse_nabla, parse_sigma, records_of
from cli.validators import RunConfig
from worker.artifacts import build_module_record, build_relation_record


def register(subparsers, common) -> None:
    group = subparsers.add_parser("module", help="mod-p modules of W-type")
    actions = group.add_subparsers(dest="action", required=True)

    reduce = actions.add_parser("reduce", parents=[common], help="reduce a stable lattice modulo pi")
    reduce.set_defaults(handler=handle_reduce)

    make = actions.add_parser("make", parents=[common], help="build M(theta, sigma, eps) directly")
    make.set_defaults(handler=handle_make)

    validate = actions.add_parser("validate", parents=[common], help="check the necessary relations")
    validate.set_defaults(handler=handle_validate)


def module_from_data(config: RunConfig, data: dict) -> WTypeModule:
    d = int(data.get("d", config.d))
    q = int(data.get("q", config.q))
    theta_exp = data.get("theta_exp") or [0] * (d + 1)
    return make_wtype_module(theta_exp, parse_sigma(d, data.get("sigma", {})), parse_eps(d, q, data.get("eps")), q)


def handle_reduce(config: RunConfig, data: dict) -> tuple[dict, bool]:
    results = []
    for record in records_of(data, "nablas"):
        _, nabla = parse_nabla(record, config)
        module = reduce_lattice(parse_character(record, config), nabla)
        result = build_module_record(module)
        result["relations"] = build_relation_record(validate_action(module))
        results.append(result)
    ok = all(result["relations"]["ok"] for result in results)
    return (results[0] if len(results) == 1 else {"results": results}), ok


def handle_make(config: RunConfig, data: dict) -> tuple[dict, bool]:
    return build_module_record(module_from_data(config, data)), True


def handle_validate(config: RunConfig, data: dict) -> tuple[dict, bool]:
    report = validate_action(module_from_data(config, data))
    return build_relation_record(report), report.ok
