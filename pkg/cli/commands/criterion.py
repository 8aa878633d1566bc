"""criterion check | dual"""
from __future__ import annotations

from algebra.character import center_check, dual_character, unitarity_criterion, weight_of_character
from cli.records import parse_character
from cli.validators import RunConfig
from worker.artifacts import build_character_record, build_criterion_record


def register(subparsers, common) -> None:
    group = subparsers.add_parser("criterion", help="the unitarity criterion")
    actions = group.add_subparsers(dest="action", required=True)

    check = actions.add_parser("check", parents=[common], help="evaluate the criterion on a character")
    check.set_defaults(handler=handle_check)

    dual = actions.add_parser("dual", parents=[common], help="the dual character Theta^{-1} delta")
    dual.set_defaults(handler=handle_dual)


def handle_check(config: RunConfig, data: dict) -> tuple[dict, bool]:
    c = parse_character(data, config)
    check = unitarity_criterion(c)
    record = build_criterion_record(c, check, center_check(c))
    record["weight"] = list(weight_of_character(c))
    return record, check.ok


def handle_dual(config: RunConfig, data: dict) -> tuple[dict, bool]:
    c = parse_character(data, config)
    dual = dual_character(c)
    return {
        "character": build_character_record(c),
        "dual": build_character_record(dual),
        "involution": dual_character(dual) == c,
        "unitary": unitarity_criterion(c).ok,
        "dual_unitary": unitarity_criterion(dual).ok,
    }, True
