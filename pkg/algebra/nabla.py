"""Integrating functions on W and the data derived from them (sigma and the partial function)."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from config.constants import EquinabMode
from algebra.coxeter import (
    Permutation,
    identity,
    iter_w,
    mu,
    simple_reflection,
    ubar,
    ubar_split,
)
from algebra.errors import PreconditionError, SizeMismatchError
from algebra.weights import BalancedWeight, is_balanced, reduce_weight

if TYPE_CHECKING:
    from algebra.character import CharacterData


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NablaFunction:
    """A map W -> Z, total on all (d+1)! elements."""
    d: int
    values: dict[Permutation, int]

    def __call__(self, w: Permutation) -> int:
        return self.values[w]

    def shifted(self, constant: int) -> "NablaFunction":
        return NablaFunction(self.d, {w: value + constant for w, value in self.values.items()})

    def shifted_on_orbit(self, w: Permutation, constant: int) -> "NablaFunction":
        """Add constant on the right orbit w<ubar>; differences along ubar are unchanged."""
        orbit = {w * ubar(self.d, j) for j in range(self.d + 1)}
        return NablaFunction(self.d, {
            v: value + constant if v in orbit else value for v, value in self.values.items()
        })


@dataclass(frozen=True)
class SigmaFunction:
    """sigma: W^{s_d} -> {-1, 0, 1}."""
    d: int
    values: dict[Permutation, int]

    def __call__(self, w: Permutation) -> int:
        return self.values[w]


@dataclass(frozen=True)
class PartialFunction:
    """A map W -> [-r, r], antisymmetric under right multiplication by s_d."""
    d: int
    r: int
    values: dict[Permutation, int]

    def __call__(self, w: Permutation) -> int:
        return self.values[w]


@dataclass(frozen=True)
class IntegrationCheck:
    """Result of checking the ubar-difference and descent conditions."""
    ok: bool
    witness: dict = field(default_factory=dict)


EquinabCheck = IntegrationCheck


def build_nabla(weight: BalancedWeight) -> NablaFunction:
    """Construct nabla with nabla(e) = 0 by induction on d.

    For w = w' ubar^j with w'(d) = d the value is
    nabla'(w') + sum_{t<j} n_{mu(w' ubar^t)}, where nabla' is built on
    Sym{0..d-1} from the reduced weight.
    """
    n, r = weight.n, weight.r
    check = is_balanced(n, r)
    if not check.ok:
        raise PreconditionError(f"weight {list(n)} is not balanced for r={r}: {check.witness}")
    d = weight.d
    if d < 1:
        raise PreconditionError("weights of length 1 carry no Weyl group action")

    if d == 1:
        return NablaFunction(1, {identity(1): 0, simple_reflection(1, 1): n[0]})

    inner = build_nabla(BalancedWeight(reduce_weight(weight), r))
    values: dict[Permutation, int] = {}
    for w in iter_w(d):
        head, j = ubar_split(w)
        value = inner(Permutation(head.images[:d]))
        for t in range(j):
            value += n[mu(head * ubar(d, t))]
        values[w] = value
    logger.debug("built nabla for n=%s r=%d", list(n), r)
    return NablaFunction(d, values)


def _descent_witness(nabla: NablaFunction, r: int, reflections: Sequence[int]) -> dict | None:
    d = nabla.d
    for i in reflections:
        s = simple_reflection(d, i)
        for w in iter_w(d):
            if not w.has_ascent(i):
                continue
            here, there = nabla(w), nabla(w * s)
            if not here - r <= there <= here:
                return {"equation": "descent", "w": str(w), "s": i, "nabla_w": here, "nabla_ws": there}
    return None


def check_integration(nabla: NablaFunction, n: Sequence[int], r: int) -> IntegrationCheck:
    """nabla(w) - nabla(w ubar) = -n_{mu(w)} for all w, and nabla(w) - r <= nabla(ws) <= nabla(w) on ascents."""
    d = nabla.d
    if len(n) != d + 1:
        raise SizeMismatchError(f"weight of length {len(n)} against nabla on rank {d}")
    step = ubar(d)
    for w in iter_w(d):
        difference = nabla(w) - nabla(w * step)
        if difference != -n[mu(w)]:
            return IntegrationCheck(False, {"equation": "ubar", "w": str(w),
                                            "difference": difference, "expected": -n[mu(w)]})
    witness = _descent_witness(nabla, r, range(1, d + 1))
    if witness:
        return IntegrationCheck(False, witness)
    return IntegrationCheck(True)


def check_equinab(nabla: NablaFunction, character: "CharacterData", mode: str = EquinabMode.FULL) -> EquinabCheck:
    """nabla(w) - nabla(w ubar) = ord Theta(t_{w ubar}) plus the descent condition.

    mode FULL checks the descent condition for every simple reflection,
    S_D_ONLY only for s_d; the two always agree.
    """
    if mode not in EquinabMode.ALL:
        raise PreconditionError(f"unknown mode {mode!r}")
    d = nabla.d
    if character.d != d:
        raise SizeMismatchError(f"character of rank {character.d} against nabla on rank {d}")
    step = ubar(d)
    for w in iter_w(d):
        difference = nabla(w) - nabla(w * step)
        expected = character.t_order(w * step)
        if difference != expected:
            return EquinabCheck(False, {"equation": "ubar", "w": str(w),
                                        "difference": difference, "expected": expected})
    reflections = range(1, d + 1) if mode == EquinabMode.FULL else [d]
    witness = _descent_witness(nabla, character.r, reflections)
    if witness:
        return EquinabCheck(False, witness)
    return EquinabCheck(True)


def sigma_from_nabla(nabla: NablaFunction, r: int) -> SigmaFunction:
    d = nabla.d
    s_d = simple_reflection(d, d)
    values: dict[Permutation, int] = {}
    for w in iter_w(d):
        if not w.has_ascent(d):
            continue
        here, there = nabla(w), nabla(w * s_d)
        if there == here:
            values[w] = 1
        elif there == here - r:
            values[w] = -1
        elif here - r < there < here:
            values[w] = 0
        else:
            raise PreconditionError(
                f"descent condition fails at w={w}: nabla(w)={here}, nabla(ws_d)={there}, r={r}"
            )
    return SigmaFunction(d, values)


def partial_from_nabla(nabla: NablaFunction, r: int) -> PartialFunction:
    """partial(w) = nabla(w) - nabla(w s_d), antisymmetric by construction."""
    s_d = simple_reflection(nabla.d, nabla.d)
    return PartialFunction(nabla.d, r, {w: nabla(w) - nabla(w * s_d) for w in iter_w(nabla.d)})
