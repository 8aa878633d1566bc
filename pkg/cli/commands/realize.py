"""realize: a lattice whose reduction is a prescribed module of W-type."""
from __future__ import annotations

from algebra.realize import search_partial, silvester_realize
from algebra.wtype import reduce_lattice
from cli.records import parse_eps, parse_partial, parse_sigma
from cli.validators import RunConfig
from worker.artifacts import build_character_record, build_module_record, build_nabla_record, build_partial_record


def register(subparsers, common) -> None:
    realize = subparsers.add_parser("realize", parents=[common],
                                    help="build (Theta, nabla) from theta, sigma, eps and a partial function")
    realize.set_defaults(handler=handle_realize)


def handle_realize(config: RunConfig, data: dict) -> tuple[dict, bool]:
    d = int(data.get("d", config.d))
    q = int(data.get("q", config.q))
    r = int(data.get("r", config.r))
    sigma = parse_sigma(d, data.get("sigma", {}))
    eps = parse_eps(d, q, data.get("eps"))
    theta_exp = data.get("theta_exp") or [0] * (d + 1)
    if "partial" in data:
        partial = parse_partial(data["partial"], d, r)
    else:
        partial = search_partial(sigma, r, d)
        if partial is None:
            return {"found": False, "d": d, "r": r}, False

    c, nabla = silvester_realize(theta_exp, sigma, eps, partial)
    return {
        "found": True,
        "partial": build_partial_record(partial),
        "character": build_character_record(c),
        "nabla": build_nabla_record(None, nabla),
        "module": build_module_record(reduce_lattice(c, nabla)),
    }, True
