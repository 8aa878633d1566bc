"""Balanced weights: the subset inequality system, reversal, reduction and enumeration."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from config import settings
from config.constants import Inequality
from algebra.errors import InvariantError, PreconditionError, ResourceBoundError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BalancedWeight:
    """A weight (n_0, ..., n_d) of amplitude r."""
    n: tuple[int, ...]
    r: int

    @property
    def d(self) -> int:
        return len(self.n) - 1


@dataclass(frozen=True)
class BalanceCheck:
    """Outcome of is_balanced; the witness is empty when ok."""
    ok: bool
    subset: tuple[int, ...] | None = None
    side: str | None = None
    witness: dict = field(default_factory=dict)


def delta(subset) -> int:
    """Delta(I) = sum(I) - |I|(|I|-1)/2."""
    size = len(subset)
    return sum(subset) - size * (size - 1) // 2


def _members(mask: int, size: int) -> tuple[int, ...]:
    return tuple(i for i in range(size) if mask >> i & 1)


def iter_subsets(size: int) -> Iterator[tuple[int, ...]]:
    """Subsets of {0, ..., size-1} in bitmask order."""
    if size > settings.MAX_SUBSET_BITS:
        raise ResourceBoundError(f"{size} subset bits exceed MAX_SUBSET_BITS={settings.MAX_SUBSET_BITS}")
    for mask in range(1 << size):
        yield _members(mask, size)


def is_balanced(n: Sequence[int], r: int) -> BalanceCheck:
    """Check sum zero and r*Delta(I) >= sum_I n >= -r*Delta(complement) for every I."""
    size = len(n)
    total = sum(n)
    if total != 0:
        return BalanceCheck(False, None, Inequality.SUM, {"sum": total})

    everything = frozenset(range(size))
    for subset in iter_subsets(size):
        partial = sum(n[i] for i in subset)
        upper = r * delta(subset)
        if partial > upper:
            return BalanceCheck(False, subset, Inequality.UPPER,
                                {"subset": list(subset), "sum": partial, "bound": upper})
        lower = -r * delta(sorted(everything - set(subset)))
        if partial < lower:
            return BalanceCheck(False, subset, Inequality.LOWER,
                                {"subset": list(subset), "sum": partial, "bound": lower})
    return BalanceCheck(True)


def reverse_weight(n: Sequence[int]) -> tuple[int, ...]:
    d = len(n) - 1
    return tuple(-n[d - i] for i in range(d + 1))


def delta_complement_identity(d: int) -> tuple[int, ...] | None:
    """Check Delta(I) = Delta({d-i | i not in I}) for all I; returns a failing subset or None."""
    everything = set(range(d + 1))
    for subset in iter_subsets(d + 1):
        mirrored = [d - i for i in everything - set(subset)]
        if delta(subset) != delta(mirrored):
            return subset
    return None


def _require_balanced(n: Sequence[int], r: int) -> None:
    if r < 1:
        raise PreconditionError(f"amplitude must be positive, got {r}")
    check = is_balanced(n, r)
    if not check.ok:
        raise PreconditionError(f"weight {list(n)} is not balanced for r={r}: {check.witness}")


def _tight_subsets(s: list[int], r: int) -> list[frozenset[int]]:
    # s is indexed 1..d; slot 0 unused
    d = len(s) - 1
    tight = []
    for subset in iter_subsets(d):
        members = [i + 1 for i in subset]
        size = len(members)
        if sum(s[i] for i in members) == r * size * (size - 1) // 2:
            tight.append(frozenset(members))
    return tight


def _maximal_tight_subset(s: list[int], r: int) -> frozenset[int]:
    tight = _tight_subsets(s, r)
    maximal = [a for a in tight if not any(a < b for b in tight)]
    union = frozenset().union(*tight)
    if len(maximal) != 1:
        logger.warning("%d maximal equality subsets %s; using their union", len(maximal),
                       [sorted(a) for a in maximal])
        if union not in tight:
            raise InvariantError(f"union {sorted(union)} of equality subsets is not an equality subset")
    return union


def tilde_reduction(weight: BalancedWeight) -> tuple[int, ...]:
    """Return a balanced n~ with n~_0 = 0 and 0 <= n_i - n~_i <= r.

    The shifted weight t_i = n_i + r(d-i) is lowered one unit at a time:
    each step finds the maximal subset I_0 of {1..d} with
    sum_{I_0} s_i = r|I_0|(|I_0|-1)/2 and decrements the smallest
    k outside I_0 with s_k + r > t_k.
    """
    n, r = weight.n, weight.r
    _require_balanced(n, r)
    d = len(n) - 1

    t = [0] + [n[i] + r * (d - i) for i in range(1, d + 1)]
    steps = sum(t[1:]) - r * d * (d - 1) // 2
    if steps < 0:
        raise InvariantError(f"negative step count {steps} for {list(n)}")

    s = list(t)
    for step in range(steps):
        tight = _maximal_tight_subset(s, r)
        k = next((k for k in range(1, d + 1) if k not in tight and s[k] + r > t[k]), None)
        if k is None:
            raise InvariantError(
                f"no admissible index at step {step} for weight {list(n)}, s={s[1:]}, I_0={sorted(tight)}"
            )
        logger.debug("step %d: I_0=%s, lowering s_%d", step, sorted(tight), k)
        s[k] -= 1

    return (0,) + tuple(s[i] - r * (d - i) for i in range(1, d + 1))


def reduce_weight(weight: BalancedWeight) -> tuple[int, ...]:
    """m_{i-1} = n~_i: a balanced weight of length d."""
    return tilde_reduction(weight)[1:]


def singleton_bounds(d: int, r: int) -> list[tuple[int, int]]:
    """Box -r(d-i) <= n_i <= r*i from the singleton inequalities."""
    return [(-r * (d - i), r * i) for i in range(d + 1)]


def enumerate_balanced(d: int, r: int) -> list[BalancedWeight]:
    """All balanced weights of length d+1 and amplitude r, lexicographically ordered."""
    if d < 1 or r < 1:
        raise PreconditionError("d and r must be positive")
    if d > settings.MAX_ENUM_RANK or r > settings.MAX_ENUM_AMPLITUDE:
        raise ResourceBoundError(
            f"enumeration bound exceeded: d={d} (max {settings.MAX_ENUM_RANK}), "
            f"r={r} (max {settings.MAX_ENUM_AMPLITUDE})"
        )
    box = singleton_bounds(d, r)
    # suffix extremes let the search prune prefixes whose sum cannot return to zero
    suffix_low = [0] * (d + 2)
    suffix_high = [0] * (d + 2)
    for i in range(d, -1, -1):
        suffix_low[i] = suffix_low[i + 1] + box[i][0]
        suffix_high[i] = suffix_high[i + 1] + box[i][1]

    found: list[BalancedWeight] = []

    def search(prefix: list[int], total: int) -> None:
        i = len(prefix)
        if i == d:
            last = -total
            if box[d][0] <= last <= box[d][1]:
                candidate = tuple(prefix) + (last,)
                if is_balanced(candidate, r).ok:
                    found.append(BalancedWeight(candidate, r))
            return
        low, high = box[i]
        for value in range(low, high + 1):
            rest = total + value
            if suffix_low[i + 1] <= -rest <= suffix_high[i + 1]:
                prefix.append(value)
                search(prefix, rest)
                prefix.pop()

    search([], 0)
    logger.debug("enumerated %d balanced weights for d=%d r=%d", len(found), d, r)
    return found
