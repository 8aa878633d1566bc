"""Helpers for building JSON records and writing certificates."""
from __future__ import annotations

import json
import logging
import os
from typing import Any, Callable, Mapping

from algebra.character import CharacterData, CriterionCheck
from algebra.coxeter import Permutation
from algebra.finite_field import FqElement
from algebra.matrices import Matrix, nonzero_entries
from algebra.nabla import IntegrationCheck, NablaFunction, PartialFunction, SigmaFunction
from algebra.oracle.compare import CompareReport
from algebra.oracle.identities import IdentityReport
from algebra.psmod import HeckeModule, StabilityCheck, generating_set
from algebra.relations import RelationReport
from algebra.scalars import Scalar
from algebra.weights import BalanceCheck, BalancedWeight
from algebra.wtype import WTypeModule


logger = logging.getLogger(__name__)


def permutation_key(w: Permutation) -> str:
    return str(w)


def build_permutation_map(values: Mapping[Permutation, Any], fn: Callable = lambda v: v) -> dict:
    return {permutation_key(w): fn(value) for w, value in sorted(values.items())}


def build_weight_record(weight: BalancedWeight) -> dict:
    return {"d": weight.d, "r": weight.r, "n": list(weight.n)}


def build_balance_record(weight: BalancedWeight, check: BalanceCheck) -> dict:
    record = build_weight_record(weight)
    record["balanced"] = check.ok
    if not check.ok:
        record["witness"] = dict(check.witness, subset=list(check.subset or ()), side=check.side)
    return record


def build_nabla_record(weight: BalancedWeight | None, nabla: NablaFunction) -> dict:
    record = build_weight_record(weight) if weight else {"d": nabla.d}
    record["entries"] = build_permutation_map(nabla.values)
    return record


def build_integration_record(check: IntegrationCheck) -> dict:
    return {"ok": check.ok, "witness": check.witness}


def build_character_record(c: CharacterData) -> dict:
    return {
        "d": c.d,
        "q": c.q,
        "r": c.r,
        "theta_exp": list(c.theta_exp),
        "pi_ord": list(c.pi_ord),
        "unit_exp": list(c.unit_exp),
    }


def build_criterion_record(c: CharacterData, check: CriterionCheck, center: bool) -> dict:
    return {"character": build_character_record(c), "unitary": check.ok, "center": center,
            "witness": check.witness}


def build_scalar_record(value: Scalar) -> dict:
    """{"pi_deg_coeffs": [[i, e, c_0, ...]]} meaning sum_i q^{-e} (sum_j c_j zeta^j) pi^i."""
    return {
        "pi_deg_coeffs": [
            [i, part.q_exp, *part.coeffs]
            for i, part in enumerate(value.parts)
            if not part.is_zero()
        ]
    }


def build_fq_record(value: FqElement) -> list[int]:
    return list(value.coeffs)


def build_matrix_record(matrix: Matrix, fn: Callable) -> list[list]:
    """Nonzero entries as [row, col, encoded entry]."""
    return [[row, col, fn(entry)] for row, col, entry in nonzero_entries(matrix)]


def build_stability_record(check: StabilityCheck) -> dict:
    return {"stable": check.ok, "witness": check.witness}


def build_lattice_record(lattice: HeckeModule) -> dict:
    """Rebased generator matrices in the basis g_w, entries as scalar records."""
    return {
        "basis": [permutation_key(w) for w in lattice.basis],
        "generators": {
            generator.label(): build_matrix_record(lattice.matrix(generator), build_scalar_record)
            for generator in generating_set(lattice.d)
        },
    }


def build_sigma_record(sigma: SigmaFunction) -> dict:
    return build_permutation_map(sigma.values)


def build_partial_record(partial: PartialFunction) -> dict:
    return {"d": partial.d, "r": partial.r, "partial": build_permutation_map(partial.values)}


def build_module_record(module: WTypeModule) -> dict:
    fq = module.operators.one.fq
    return {
        "d": module.d,
        "q": module.q,
        "field": {"p": fq.p, "f": fq.f, "modulus": list(fq.modulus)},
        "basis": [permutation_key(w) for w in module.basis],
        "theta_exp": list(module.theta_exp),
        "sigma": build_sigma_record(module.sigma),
        "eps": build_permutation_map(module.eps, build_fq_record),
        "generators": {
            generator.label(): build_matrix_record(module.matrix(generator), build_fq_record)
            for generator in generating_set(module.d)
        },
    }


def build_relation_record(report: RelationReport) -> dict:
    return {
        "ok": report.ok,
        "checked": len(report.results),
        "failures": [
            {"relation": result.relation, "instance": result.instance, **result.detail}
            for result in report.failures()
        ],
    }


def build_compare_record(report: CompareReport) -> dict:
    return {"matches": report.matches, "mismatches": report.mismatches, "precision": report.precision}


def build_identity_record(report: IdentityReport) -> dict:
    return {"name": report.name, "ok": report.ok, "checked": report.checked, "failures": report.failures}


def dump_json(payload: Any, pretty: bool = False) -> str:
    """Sorted keys and no timestamps, so identical runs give identical bytes."""
    if pretty:
        return json.dumps(payload, sort_keys=True, indent=2)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def write_json(path: str, payload: Any, pretty: bool = True) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dump_json(payload, pretty))
        handle.write("\n")
    logger.debug("wrote %s", path)
    return path


def write_certificate(out_dir: str, name: str, payload: Mapping[str, Any]) -> str:
    """One JSON certificate per suite check."""
    return write_json(os.path.join(out_dir, f"{name}.json"), dict(payload))
