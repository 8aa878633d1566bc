"""Group-level identities behind the Hecke operator formulas, checked by direct multiplication."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from config import settings
from algebra.coxeter import enumerate_w, simple_reflection
from algebra.finite_field import get_field
from algebra.oracle.decompose import decompose_with_retry
from algebra.oracle.group import (
    GroupElement,
    constant,
    delta,
    from_entries,
    h,
    nu,
    perm_matrix,
    s_element,
)
from algebra.oracle.laurent import LaurentScalar


logger = logging.getLogger(__name__)


@dataclass
class IdentityReport:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **context) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(context)


def check_reflection_swap(d: int, q: int) -> IdentityReport:
    """s nu_s(a) s = h_s(a^{-1}) nu_s(a) delta_s s nu_s(a^{-1}) for every s and unit a."""
    fq = get_field(q)
    report = IdentityReport("reflection_swap")
    for i in range(1, d + 1):
        s = s_element(fq, d, i)
        for a in fq.units():
            x, x_inv = constant(fq, a), constant(fq, a.inverse())
            left = s * nu(fq, d, i, x) * s
            right = h(fq, d, i, x_inv) * nu(fq, d, i, x) * delta(fq, d, i) * s * nu(fq, d, i, x_inv)
            report.record(left.agrees_with(right), i=i, a=list(a.coeffs))
    return report


def check_conjugated_unipotent(d: int, q: int) -> IdentityReport:
    """w nu_s(b) w^{-1} is upper unipotent with b at (w(i-1), w(i)) whenever l(ws) > l(w)."""
    fq = get_field(q)
    report = IdentityReport("conjugated_unipotent")
    samples = [constant(fq, a) for a in fq.units()] + [LaurentScalar.uniformizer(fq)]
    for w in enumerate_w(d):
        pw, pw_inv = perm_matrix(fq, w), perm_matrix(fq, w.inverse())
        for i in range(1, d + 1):
            if not w.has_ascent(i):
                continue
            for b in samples:
                x = pw * nu(fq, d, i, b) * pw_inv
                ok = x.is_upper_unipotent() and x[w(i - 1), w(i)].agrees_with(b)
                report.record(ok, w=str(w), i=i)
    return report


def _reflection_lifts(fq) -> list[LaurentScalar]:
    return [LaurentScalar.zero(fq)] + [constant(fq, a) for a in fq.units()]


def check_cell_exclusions(d: int, q: int, precision: int | None = None) -> IdentityReport:
    """The three statements locating v nu_s(a) s outside P w I_0.

    (a) l(ws) > l(w), a a unit: ws nu_s(a) s is not in P w I_0.
    (b) l(ws) > l(w): v nu_s(a) s is not in P w I_0 for v != ws.
    (c) v nu_s(a) s is not in P w I_0 for v not in {w, ws}.
    """
    fq = get_field(q)
    report = IdentityReport("cell_exclusions")
    lifts = _reflection_lifts(fq)
    basis = enumerate_w(d)
    for i in range(1, d + 1):
        s = simple_reflection(d, i)
        s_matrix = s_element(fq, d, i)
        for v in basis:
            for a in lifts:
                cell = decompose_with_retry(perm_matrix(fq, v) * nu(fq, d, i, a) * s_matrix, precision).w
                for w in basis:
                    ws = w * s
                    if w.has_ascent(i) and not a.is_exact_zero() and v == ws:
                        report.record(cell != w, statement="a", w=str(w), i=i)
                    if w.has_ascent(i) and v != ws:
                        report.record(cell != w, statement="b", w=str(w), v=str(v), i=i)
                    if v not in (w, ws):
                        report.record(cell != w, statement="c", w=str(w), v=str(v), i=i)
    return report


def random_element(fq, d: int, rng: random.Random) -> GroupElement:
    """Entries are Laurent polynomials with exponents in [-1, 2]."""
    units = fq.elements()
    rows = []
    for _ in range(d + 1):
        row = []
        for _ in range(d + 1):
            terms = {e: rng.choice(units) for e in range(-1, 3) if rng.random() < 0.5}
            row.append(LaurentScalar.make(fq, terms))
        rows.append(row)
    return from_entries(fq, rows)


def check_round_trip(d: int, q: int, samples: int, seed: int | None = None,
                     precision: int | None = None) -> IdentityReport:
    """p w i recomposes to x, p is upper triangular and i lies in I_0."""
    fq = get_field(q)
    rng = random.Random(settings.DEFAULT_SEED if seed is None else seed)
    report = IdentityReport("round_trip")
    drawn = 0
    while drawn < samples:
        x = random_element(fq, d, rng)
        if x.determinant().is_exact_zero():
            continue
        found = decompose_with_retry(x, precision)
        drawn += 1
        ok = (found.recompose().agrees_with(x) and found.p.is_upper_triangular()
              and found.i.in_pro_p_iwahori())
        report.record(ok, sample=drawn, w=str(found.w))
    logger.debug("round trip: %d samples, %d failures", report.checked, len(report.failures))
    return report


def run_identity_checks(d: int, q: int, samples: int = 50, seed: int | None = None,
                        precision: int | None = None) -> list[IdentityReport]:
    return [
        check_reflection_swap(d, q),
        check_conjugated_unipotent(d, q),
        check_cell_exclusions(d, q, precision),
        check_round_trip(d, q, samples, seed, precision),
    ]
