"""Realizing a W-type module as the reduction of a stable lattice.

Starting from a function partial on W (antisymmetric under s_d, compatible
with sigma, satisfying the two cocycle identities) we extend it to
partial(w, v) along reduced words of v, set nabla(w) = -partial(e, w) and
read Theta(t_w) off the nabla differences.
"""
from __future__ import annotations

import logging
from typing import Iterator, Mapping, Sequence

from config import settings
from algebra.character import CharacterData, make_character
from algebra.coxeter import (
    Permutation,
    ReducedWord,
    ascent_set,
    identity,
    iter_w,
    reduced_word,
    reduced_words,
    simple_reflection,
    ubar,
)
from algebra.errors import CocycleError, HypothesisError, InvariantError, PreconditionError, ResourceBoundError
from algebra.finite_field import FqElement
from algebra.nabla import NablaFunction, PartialFunction, SigmaFunction
from algebra.wtype import make_wtype_module, modules_equal, reduce_lattice


logger = logging.getLogger(__name__)

# (coefficient, element) pairs whose weighted partial-sum must vanish
Term = tuple[int, Permutation]


def _s(d: int, i: int) -> Permutation:
    return simple_reflection(d, i)


def _commuting_terms(d: int, w: Permutation, i: int, j: int) -> list[Term]:
    """partial(w ubar^{d-i}) + partial(w s_i ubar^{d-j}) - partial(w ubar^{d-j}) - partial(w s_j ubar^{d-i})."""
    return [
        (1, w * ubar(d, d - i)),
        (1, w * _s(d, i) * ubar(d, d - j)),
        (-1, w * ubar(d, d - j)),
        (-1, w * _s(d, j) * ubar(d, d - i)),
    ]


def _braid_terms(d: int, w: Permutation, i: int) -> list[Term]:
    s_i, s_next = _s(d, i), _s(d, i + 1)
    return [
        (1, w * ubar(d, d - i)),
        (1, w * s_i * ubar(d, d - i - 1)),
        (1, w * s_i * s_next * ubar(d, d - i)),
        (-1, w * ubar(d, d - i - 1)),
        (-1, w * s_next * ubar(d, d - i)),
        (-1, w * s_next * s_i * ubar(d, d - i - 1)),
    ]


def cocycle_instances(d: int) -> Iterator[tuple[dict, list[Term]]]:
    """Every instance of the commuting (i+2 <= j) and braid identities, labelled by (i, j, w)."""
    for w in iter_w(d):
        for i in range(1, d + 1):
            for j in range(i + 2, d + 1):
                yield {"identity": "commute", "i": i, "j": j, "w": str(w)}, _commuting_terms(d, w, i, j)
        for i in range(1, d):
            yield {"identity": "braid", "i": i, "j": i + 1, "w": str(w)}, _braid_terms(d, w, i)


def _allowed_values(sigma_value: int, r: int) -> range:
    if sigma_value == 1:
        return range(0, 1)
    if sigma_value == -1:
        return range(r, r + 1)
    return range(1, r)


def check_partial(partial: PartialFunction, sigma: SigmaFunction | None = None) -> None:
    """Raise CocycleError with a witness unless partial has all the required properties."""
    d, r = partial.d, partial.r
    s_d = _s(d, d)
    for w in iter_w(d):
        value = partial(w)
        if not -r <= value <= r:
            raise CocycleError("partial value out of range", {"w": str(w), "value": value, "r": r})
        if partial(w * s_d) != -value:
            raise CocycleError("partial is not antisymmetric under s_d",
                               {"w": str(w), "value": value, "value_ws": partial(w * s_d)})
    if sigma is not None:
        for w, sigma_value in sigma.values.items():
            if partial(w) not in _allowed_values(sigma_value, r):
                raise CocycleError("partial is not compatible with sigma",
                                   {"w": str(w), "sigma": sigma_value, "value": partial(w)})
    for label, terms in cocycle_instances(d):
        total = sum(c * partial(x) for c, x in terms)
        if total:
            raise CocycleError(f"{label['identity']} identity fails", dict(label, defect=total))


def partial_word_sum(partial: PartialFunction, w: Permutation, word: ReducedWord) -> int:
    """sum_m partial(w s_{i_1} ... s_{i_{m-1}} ubar^{d - i_m})."""
    d = partial.d
    total = 0
    prefix = w
    for letter in word.letters:
        total += partial(prefix * ubar(d, d - letter))
        prefix = prefix * _s(d, letter)
    return total


def partial_pair(partial: PartialFunction, w: Permutation, v: Permutation) -> int:
    """partial(w, v) along the canonical reduced word of v."""
    return partial_word_sum(partial, w, reduced_word(v))


def word_independence(partial: PartialFunction, w: Permutation, v: Permutation) -> dict | None:
    """Compare partial(w, v) over every reduced word of v; returns a witness on disagreement."""
    sums = {word.letters: partial_word_sum(partial, w, word) for word in reduced_words(v)}
    if len(set(sums.values())) > 1:
        return {"w": str(w), "v": str(v), "sums": {" ".join(map(str, k)): s for k, s in sums.items()}}
    return None


def cocycle_additivity(partial: PartialFunction, w: Permutation, v: Permutation, x: Permutation) -> bool:
    """partial(w, v) + partial(wv, x) = partial(w, vx)."""
    return partial_pair(partial, w, v) + partial_pair(partial, w * v, x) == partial_pair(partial, w, v * x)


def nabla_from_partial(partial: PartialFunction) -> NablaFunction:
    e = identity(partial.d)
    return NablaFunction(partial.d, {v: -partial_pair(partial, e, v) for v in iter_w(partial.d)})


def hausdorff_checks(nabla: NablaFunction, c: CharacterData, eps: Mapping[Permutation, FqElement]) -> dict | None:
    """nabla(w) - nabla(w ubar) = nabla(w s_i) - nabla(w s_i ubar) for 1 <= i <= d-1,
    and Theta(t_w) = pi^{nabla(w ubar^{-1}) - nabla(w)} eps_w for every w."""
    d = nabla.d
    step, back = ubar(d), ubar(d, -1)
    for w in iter_w(d):
        for i in range(1, d):
            ws = w * _s(d, i)
            left, right = nabla(w) - nabla(w * step), nabla(ws) - nabla(ws * step)
            if left != right:
                return {"check": "ubar_shift", "w": str(w), "i": i, "left": left, "right": right}
        order = nabla(w * back) - nabla(w)
        if order != c.t_order(w):
            return {"check": "t_order", "w": str(w), "order": order, "expected": c.t_order(w)}
        if eps[w].fq.log(eps[w]) != c.t_unit(w):
            return {"check": "t_unit", "w": str(w)}
    return None


def _check_eps_hypothesis(d: int, eps: Mapping[Permutation, FqElement]) -> None:
    for w in iter_w(d):
        for i in range(2, d + 1):
            if eps[w] != eps[w * _s(d, i)]:
                raise HypothesisError(f"eps_w != eps_(w s_{i}) at w={w}")


def silvester_realize(theta_exp: Sequence[int], sigma: SigmaFunction,
                      eps: Mapping[Permutation, FqElement],
                      partial: PartialFunction) -> tuple[CharacterData, NablaFunction]:
    """Build (Theta, nabla) whose lattice reduces to M(theta, sigma, eps)."""
    d, r = partial.d, partial.r
    if sigma.d != d:
        raise PreconditionError(f"sigma on rank {sigma.d} against partial on rank {d}")
    if set(eps) != set(iter_w(d)):
        raise PreconditionError("eps must be given on every element of W")
    _check_eps_hypothesis(d, eps)
    check_partial(partial, sigma)

    starts = list(iter_w(d)) if d <= settings.MAX_ENUM_RANK else [identity(d)]
    for w in starts:
        for v in iter_w(d):
            witness = word_independence(partial, w, v)
            if witness:
                raise CocycleError("partial(w, v) depends on the reduced word", witness)

    fq = next(iter(eps.values())).fq
    nabla = nabla_from_partial(partial)
    pi_ord = tuple(nabla(ubar(d, j - 1)) - nabla(ubar(d, j)) for j in range(d + 1))
    unit_exp = tuple(fq.log(eps[ubar(d, j)]) for j in range(d + 1))
    c = make_character(tuple(a % (fq.q - 1) for a in theta_exp), pi_ord, unit_exp, fq.q, r)

    witness = hausdorff_checks(nabla, c, eps)
    if witness:
        raise InvariantError(f"realized nabla is inconsistent: {witness}")

    reduced = reduce_lattice(c, nabla)
    difference = modules_equal(reduced, make_wtype_module(c.theta_exp, sigma, eps, fq.q))
    if difference:
        raise InvariantError(f"realized lattice does not reduce to the prescribed module: {difference}")
    logger.info("realized module at d=%d r=%d: pi orders %s", d, r, list(pi_ord))
    return c, nabla


def _representative(x: Permutation, s_d: Permutation) -> tuple[Permutation, int]:
    return (x, 1) if x.has_ascent(x.d) else (x * s_d, -1)


def search_partial(sigma: SigmaFunction, r: int, d: int) -> PartialFunction | None:
    """Smallest admissible values first; None when no sigma-compatible cocycle exists."""
    if sigma.d != d:
        raise PreconditionError(f"sigma on rank {sigma.d}, expected {d}")
    if d > settings.MAX_ENUM_RANK:
        raise ResourceBoundError(f"d={d} exceeds MAX_ENUM_RANK={settings.MAX_ENUM_RANK}")
    s_d = _s(d, d)
    free = ascent_set(d)
    order = {w: k for k, w in enumerate(free)}
    domains = [_allowed_values(sigma(w), r) for w in free]
    if any(len(domain) == 0 for domain in domains):
        logger.info("no admissible values for sigma=0 with r=%d", r)
        return None

    # constraints keyed by the position of their last variable
    constraints: dict[int, set[tuple[tuple[int, int], ...]]] = {}
    for _, terms in cocycle_instances(d):
        coefficients: dict[int, int] = {}
        for c, x in terms:
            rep, sign = _representative(x, s_d)
            coefficients[order[rep]] = coefficients.get(order[rep], 0) + c * sign
        normalized = tuple(sorted((k, c) for k, c in coefficients.items() if c))
        if normalized:
            constraints.setdefault(normalized[-1][0], set()).add(normalized)
    logger.debug("partial search at d=%d: %d variables, %d constraints",
                 d, len(free), sum(len(group) for group in constraints.values()))

    values = [0] * len(free)

    def satisfied(position: int) -> bool:
        return all(
            sum(c * values[k] for k, c in constraint) == 0
            for constraint in constraints.get(position, ())
        )

    def assign(position: int) -> bool:
        if position == len(free):
            return True
        for value in domains[position]:
            values[position] = value
            if satisfied(position) and assign(position + 1):
                return True
        return False

    if not assign(0):
        logger.info("no partial function for sigma at d=%d r=%d", d, r)
        return None
    result: dict[Permutation, int] = {}
    for w, value in zip(free, values):
        result[w] = value
        result[w * s_d] = -value
    return PartialFunction(d, r, result)
