"""weights check | enumerate | reduce"""
from __future__ import annotations

import logging

from algebra.weights import BalancedWeight, enumerate_balanced, is_balanced, reduce_weight, tilde_reduction
from cli.records import parse_weight, records_of
from cli.validators import RunConfig
from worker.artifacts import build_balance_record, build_weight_record


logger = logging.getLogger(__name__)


def register(subparsers, common) -> None:
    group = subparsers.add_parser("weights", help="balanced weights")
    actions = group.add_subparsers(dest="action", required=True)

    check = actions.add_parser("check", parents=[common], help="test the subset inequality system")
    check.add_argument("--n", type=int, nargs="+", help="weight coordinates n_0 .. n_d")
    check.set_defaults(handler=handle_check)

    enum = actions.add_parser("enumerate", parents=[common], help="all balanced weights of rank d, amplitude r")
    enum.set_defaults(handler=handle_enumerate)

    reduce = actions.add_parser("reduce", parents=[common], help="the reduced weight of rank d-1")
    reduce.add_argument("--n", type=int, nargs="+", help="weight coordinates n_0 .. n_d")
    reduce.set_defaults(handler=handle_reduce)


def _weights(config: RunConfig, data: dict) -> list[BalancedWeight]:
    if config.options.get("n"):
        return [BalancedWeight(tuple(config.options["n"]), config.r)]
    return [parse_weight(record, config) for record in records_of(data, "weights")]


def _single_or_list(records: list[dict], key: str) -> dict:
    return records[0] if len(records) == 1 else {key: records}


def handle_check(config: RunConfig, data: dict) -> tuple[dict, bool]:
    records = []
    for weight in _weights(config, data):
        records.append(build_balance_record(weight, is_balanced(weight.n, weight.r)))
    return _single_or_list(records, "weights"), all(record["balanced"] for record in records)


def handle_enumerate(config: RunConfig, data: dict) -> tuple[dict, bool]:
    del data
    weights = enumerate_balanced(config.d, config.r)
    logger.info("enumerated %d balanced weights at d=%d r=%d", len(weights), config.d, config.r)
    return {
        "d": config.d,
        "r": config.r,
        "count": len(weights),
        "weights": [build_weight_record(weight) for weight in weights],
    }, True


def handle_reduce(config: RunConfig, data: dict) -> tuple[dict, bool]:
    records = []
    for weight in _weights(config, data):
        reduced = BalancedWeight(reduce_weight(weight), weight.r)
        records.append({
            "input": build_weight_record(weight),
            "tilde": list(tilde_reduction(weight)),
            "reduced": build_weight_record(reduced),
        })
    return _single_or_list(records, "results"), True
