"""lattice check"""
from __future__ import annotations

from algebra.psmod import build_hecke_module, is_lattice_stable, rebase_to_lattice
from cli.records import parse_character, parse_nabla, records_of
from cli.validators import RunConfig
from worker.artifacts import build_character_record, build_lattice_record, build_stability_record


def register(subparsers, common) -> None:
    group = subparsers.add_parser("lattice", help="stable lattices L_nabla")
    actions = group.add_subparsers(dest="action", required=True)
    check = actions.add_parser("check", parents=[common], help="is L_nabla stable under every generator")
    check.add_argument("--matrices", action="store_true", help="include the rebased generator matrices")
    check.set_defaults(handler=handle_check)


def handle_check(config: RunConfig, data: dict) -> tuple[dict, bool]:
    results = []
    for record in records_of(data, "nablas"):
        _, nabla = parse_nabla(record, config)
        c = parse_character(record, config)
        result = build_stability_record(is_lattice_stable(c, nabla))
        result["character"] = build_character_record(c)
        if config.options.get("matrices"):
            result["lattice"] = build_lattice_record(rebase_to_lattice(build_hecke_module(c), nabla))
        results.append(result)
    ok = all(result["stable"] for result in results)
    return (results[0] if len(results) == 1 else {"results": results}), ok
