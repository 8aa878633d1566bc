"""partial search"""
from __future__ import annotations

from algebra.realize import search_partial
from cli.records import parse_sigma
from cli.validators import RunConfig
from worker.artifacts import build_partial_record


def register(subparsers, common) -> None:
    group = subparsers.add_parser("partial", help="partial functions compatible with sigma")
    actions = group.add_subparsers(dest="action", required=True)
    search = actions.add_parser("search", parents=[common], help="smallest admissible values first")
    search.set_defaults(handler=handle_search)


def handle_search(config: RunConfig, data: dict) -> tuple[dict, bool]:
    d = int(data.get("d", config.d))
    r = int(data.get("r", config.r))
    partial = search_partial(parse_sigma(d, data.get("sigma", {})), r, d)
    if partial is None:
        return {"found": False, "d": d, "r": r}, False
    return dict(build_partial_record(partial), found=True), True
