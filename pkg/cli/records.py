"""Parsing of JSON inputs into algebra objects."""
from __future__ import annotations

from typing import Any, Mapping

from algebra.character import CharacterData, character_from_weight, make_character, trivial_character
from algebra.coxeter import Permutation, enumerate_w, parse_permutation
from algebra.errors import ConfigError
from algebra.finite_field import FqElement, get_field
from algebra.nabla import NablaFunction, PartialFunction, SigmaFunction
from algebra.weights import BalancedWeight
from cli.validators import RunConfig


def _require(data: Mapping[str, Any], key: str) -> Any:
    if key not in data:
        raise ConfigError(f"input is missing {key!r}")
    return data[key]


def _int_list(value: Any, key: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise ConfigError(f"{key!r} must be a list of integers")
    return tuple(value)


def parse_permutation_map(d: int, data: Mapping[str, Any], key: str) -> dict[Permutation, Any]:
    if not isinstance(data, Mapping):
        raise ConfigError(f"{key!r} must map permutations to values")
    values = {parse_permutation(text): value for text, value in data.items()}
    if any(w.d != d for w in values):
        raise ConfigError(f"{key!r} has permutations of the wrong size for d={d}")
    return values


def records_of(data: Mapping[str, Any], key: str) -> list[Mapping[str, Any]]:
    """A single record, or the list stored under key."""
    if key in data:
        return list(data[key])
    return [data]


def parse_weight(data: Mapping[str, Any], config: RunConfig) -> BalancedWeight:
    n = _int_list(_require(data, "n"), "n")
    return BalancedWeight(n, int(data.get("r", config.r)))


def parse_nabla(data: Mapping[str, Any], config: RunConfig) -> tuple[BalancedWeight | None, NablaFunction]:
    weight = parse_weight(data, config) if "n" in data else None
    d = weight.d if weight else int(data.get("d", config.d))
    values = parse_permutation_map(d, _require(data, "entries"), "entries")
    if set(values) != set(enumerate_w(d)):
        raise ConfigError("nabla must be given on every element of W")
    return weight, NablaFunction(d, {w: int(v) for w, v in values.items()})


def parse_character(data: Mapping[str, Any], config: RunConfig) -> CharacterData:
    """From explicit pi-orders, from a weight n, or the trivial character of rank --d."""
    source = data.get("character", data)
    q = int(source.get("q", config.q))
    r = int(source.get("r", config.r))
    theta_exp = _int_list(source["theta_exp"], "theta_exp") if "theta_exp" in source else None
    unit_exp = _int_list(source["unit_exp"], "unit_exp") if "unit_exp" in source else None
    if "pi_ord" in source:
        pi_ord = _int_list(source["pi_ord"], "pi_ord")
        zeros = (0,) * len(pi_ord)
        return make_character(theta_exp or zeros, pi_ord, unit_exp or zeros, q, r)
    if "n" in source:
        return character_from_weight(_int_list(source["n"], "n"), q, r, theta_exp, unit_exp)
    c = trivial_character(int(source.get("d", config.d)), q, r)
    if theta_exp or unit_exp:
        zeros = (0,) * (c.d + 1)
        return make_character(theta_exp or zeros, c.pi_ord, unit_exp or zeros, q, r)
    return c


def parse_sigma(d: int, data: Mapping[str, Any]) -> SigmaFunction:
    values = parse_permutation_map(d, data, "sigma")
    return SigmaFunction(d, {w: int(v) for w, v in values.items()})


def parse_fq(q: int, value: Any) -> FqElement:
    """Coefficient list low to high, or an int read as an element of the prime field."""
    fq = get_field(q)
    if isinstance(value, int):
        return fq.from_int(value)
    if isinstance(value, list):
        return fq.element(value)
    raise ConfigError(f"cannot read {value!r} as an element of F_{q}")


def parse_eps(d: int, q: int, data: Mapping[str, Any] | None) -> dict[Permutation, FqElement]:
    """Missing entries default to 1."""
    one = get_field(q).one()
    eps = {w: one for w in enumerate_w(d)}
    if data:
        for w, value in parse_permutation_map(d, data, "eps").items():
            eps[w] = parse_fq(q, value)
    return eps


def parse_partial(data: Mapping[str, Any], d: int, r: int) -> PartialFunction:
    values = parse_permutation_map(d, data, "partial")
    if set(values) != set(enumerate_w(d)):
        raise ConfigError("partial must be given on every element of W")
    return PartialFunction(d, r, {w: int(v) for w, v in values.items()})
