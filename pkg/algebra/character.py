"""Tamely ramified characters Theta of the diagonal torus.

Theta is determined by the exponents a_j of its restriction theta to the
Teichmuller digits, theta(diag(x_0..x_d)) = prod_j zeta^{a_j dlog x_j},
together with the values Theta(t_{ubar^i}) = zeta^{u_i} pi^{m_i}.
The element t_w = w ubar^{-1} u w^{-1} is the diagonal matrix with p_F in
slot w(0), so Theta(t_w) depends only on w(0).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from algebra.coxeter import Permutation, iter_w, simple_reflection, ubar
from algebra.errors import PreconditionError
from algebra.scalars import Scalar, ScalarContext, get_context
from algebra.weights import delta, iter_subsets


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterData:
    """Theta given by residue exponents, pi-orders and unit exponents."""
    d: int
    q: int
    r: int
    theta_exp: tuple[int, ...]
    pi_ord: tuple[int, ...]
    unit_exp: tuple[int, ...]

    @property
    def ctx(self) -> ScalarContext:
        return get_context(self.q, self.r)

    def slot_index(self, slot: int) -> int:
        """The j with ubar^j(0) = slot."""
        return 0 if slot == 0 else self.d + 1 - slot

    def t_index(self, w: Permutation) -> int:
        return self.slot_index(w(0))

    def t_order(self, w: Permutation) -> int:
        """ord_K Theta(t_w)."""
        return self.pi_ord[self.t_index(w)]

    def t_unit(self, w: Permutation) -> int:
        return self.unit_exp[self.t_index(w)]

    def theta_t(self, w: Permutation) -> Scalar:
        j = self.t_index(w)
        return Scalar.monomial(self.ctx, self.unit_exp[j], self.pi_ord[j])

    def theta_t_inverse(self, w: Permutation) -> Scalar:
        j = self.t_index(w)
        return Scalar.monomial(self.ctx, -self.unit_exp[j], -self.pi_ord[j])

    def is_regular(self, w: Permutation, i: int) -> bool:
        """theta(w h_{s_i}(.) w^{-1}) != 1, i.e. a_{w(i-1)} != a_{w(i)} mod q-1."""
        return (self.theta_exp[w(i - 1)] - self.theta_exp[w(i)]) % (self.q - 1) != 0

    def kappa_exponent(self, w: Permutation, i: int) -> int:
        """kappa_{w,s_i} = theta(w delta_{s_i} w^{-1}) as a power of zeta."""
        if self.q % 2 == 0:
            return 0
        return self.theta_exp[w(i - 1)] * (self.q - 1) // 2 % (self.q - 1)

    def torus_exponent(self, w: Permutation, digits: Sequence[int]) -> int:
        """theta(w t^{-1} w^{-1}) as a power of zeta; digits are discrete logs of t's entries."""
        return -sum(self.theta_exp[w(k)] * e for k, e in enumerate(digits)) % (self.q - 1)

    def diagonal_value(self, valuations: Sequence[int], leading_logs: Sequence[int]) -> Scalar:
        """Theta(diag(alpha)) for alpha_j = p_F^{valuations[j]} * (unit with leading digit g^{leading_logs[j]})."""
        unit = 0
        order = 0
        for slot, (v, log) in enumerate(zip(valuations, leading_logs)):
            j = self.slot_index(slot)
            unit += self.unit_exp[j] * v + self.theta_exp[slot] * log
            order += self.pi_ord[j] * v
        return Scalar.monomial(self.ctx, unit, order)


@dataclass(frozen=True)
class CriterionCheck:
    """Outcome of the unitarity criterion."""
    ok: bool
    witness: dict = field(default_factory=dict)


def make_character(theta_exp: Sequence[int], pi_ord: Sequence[int], unit_exp: Sequence[int],
                   q: int, r: int) -> CharacterData:
    size = len(theta_exp)
    if len(pi_ord) != size or len(unit_exp) != size:
        raise PreconditionError(
            f"character data lengths differ: {size}, {len(pi_ord)}, {len(unit_exp)}"
        )
    if size < 2:
        raise PreconditionError("characters need at least two torus components")
    get_context(q, r)
    for name, residues in (("theta_exp", theta_exp), ("unit_exp", unit_exp)):
        if any(not 0 <= a < q - 1 for a in residues):
            raise PreconditionError(f"{name} must be reduced modulo q-1={q - 1}: {list(residues)}")
    return CharacterData(size - 1, q, r, tuple(theta_exp), tuple(pi_ord), tuple(unit_exp))


def trivial_character(d: int, q: int, r: int) -> CharacterData:
    zeros = (0,) * (d + 1)
    return make_character(zeros, zeros, zeros, q, r)


def character_from_weight(n: Sequence[int], q: int, r: int,
                          theta_exp: Sequence[int] | None = None,
                          unit_exp: Sequence[int] | None = None) -> CharacterData:
    """The character whose weight is n: m_i = -n_{i-1}, indices mod d+1."""
    d = len(n) - 1
    pi_ord = tuple(-n[(i - 1) % (d + 1)] for i in range(d + 1))
    zeros = (0,) * (d + 1)
    return make_character(theta_exp or zeros, pi_ord, unit_exp or zeros, q, r)


def weight_of_character(c: CharacterData) -> tuple[int, ...]:
    """n_i = -ord Theta(t_{ubar^{i+1}})."""
    return tuple(-c.pi_ord[(i + 1) % (c.d + 1)] for i in range(c.d + 1))


def center_check(c: CharacterData) -> bool:
    """prod_j |Theta(t_{ubar^j})| = 1."""
    return sum(c.pi_ord) == 0


def unitarity_criterion(c: CharacterData) -> CriterionCheck:
    """|q|^{Delta(I)} <= |prod_{j in I} Theta_j(p_F)| <= |q|^{-Delta(complement)} for all I, in pi-orders."""
    if not center_check(c):
        return CriterionCheck(False, {"equation": "center", "sum": sum(c.pi_ord)})
    d, r = c.d, c.r
    # ord Theta_j(p_F) = ord Theta(t_{ubar^{d+1-j}})
    orders = [c.pi_ord[(d + 1 - j) % (d + 1)] for j in range(d + 1)]
    everything = set(range(d + 1))
    for subset in iter_subsets(d + 1):
        total = sum(orders[j] for j in subset)
        upper = r * delta(subset)
        lower = -r * delta(sorted(everything - set(subset)))
        if total > upper or total < lower:
            return CriterionCheck(False, {"equation": "subset", "subset": list(subset),
                                          "order": total, "upper": upper, "lower": lower})
    return CriterionCheck(True)


def dual_character(c: CharacterData) -> CharacterData:
    """Theta^{-1} delta, with delta(t_w) of pi-order -r(d - 2 w(0))."""
    d, r, modulus = c.d, c.r, c.q - 1
    pi_ord = tuple(-c.pi_ord[i] - r * (d - 2 * ubar(d, i)(0)) for i in range(d + 1))
    return CharacterData(
        d, c.q, r,
        tuple(-a % modulus for a in c.theta_exp),
        pi_ord,
        tuple(-u % modulus for u in c.unit_exp),
    )


def check_t_positions(d: int) -> dict | None:
    """t_{ubar^i} has p_F in slot d-i+1 and t_w = t_{w s_i} for 2 <= i <= d; returns a witness or None."""
    for i in range(1, d + 1):
        slot = ubar(d, i)(0)
        if slot != d - i + 1:
            return {"i": i, "slot": slot}
    for w in iter_w(d):
        for i in range(2, d + 1):
            if w(0) != (w * simple_reflection(d, i))(0):
                return {"w": str(w), "i": i}
    return None
