"""Acceptance battery: each check sweeps a grid and reports a verdict with a witness."""
from __future__ import annotations

import itertools
import logging
import queue
import random
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

import yaml

from config import settings
from config.constants import EquinabMode, Relation, SuiteCheck
from algebra.character import (
    CharacterData,
    character_from_weight,
    check_t_positions,
    dual_character,
    make_character,
    unitarity_criterion,
    weight_of_character,
)
from algebra.coxeter import ascent_set, enumerate_w, reduced_words
from algebra.errors import AlgebraError, ConfigError
from algebra.finite_field import get_field
from algebra.nabla import NablaFunction, SigmaFunction, build_nabla, check_equinab, check_integration
from algebra.oracle.compare import compare_closed_form
from algebra.oracle.identities import run_identity_checks
from algebra.psmod import build_hecke_module, is_lattice_stable
from algebra.realize import cocycle_additivity, search_partial, silvester_realize, word_independence
from algebra.relations import check_relations
from algebra.weights import (
    BalancedWeight,
    delta_complement_identity,
    enumerate_balanced,
    is_balanced,
    reduce_weight,
    reverse_weight,
)
from algebra.wtype import reduce_lattice, validate_action
from worker.artifacts import build_character_record, write_certificate


logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """Verdict of one battery check; details never carry timings."""
    name: str
    ok: bool
    checked: int = 0
    witness: dict = field(default_factory=dict)
    error: str | None = None

    def as_record(self) -> dict:
        record = {"name": self.name, "ok": self.ok, "checked": self.checked, "witness": self.witness}
        if self.error:
            record["error"] = self.error
        return record


class _Counter:
    """Counts instances and keeps the first failure."""

    def __init__(self, name: str):
        self.result = CheckResult(name, True)

    def record(self, ok: bool, **witness) -> None:
        self.result.checked += 1
        if not ok and self.result.ok:
            self.result.ok = False
            self.result.witness = witness


def load_grid(path: str | None = None) -> dict:
    path = path or settings.SUITE_GRID_PATH
    try:
        with open(path, encoding="utf-8") as handle:
            grid = yaml.safe_load(handle) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot read suite grid {path}: {e}") from e
    if not isinstance(grid, dict):
        raise ConfigError(f"suite grid {path} must be a mapping")
    return grid


def _balanced(max_d: int, max_r: int) -> Iterable[BalancedWeight]:
    for d in range(1, max_d + 1):
        for r in range(1, max_r + 1):
            yield from enumerate_balanced(d, r)


def character_grid(d: int, q: int, r: int) -> list[CharacterData]:
    """Trivial, regular theta, nonzero pi-orders and a mixed character; pi-orders vary when q = 2."""
    zeros = (0,) * (d + 1)
    shifted = (-1, 1) + (0,) * (d - 1)
    if q == 2:
        return [
            make_character(zeros, pi_ord, zeros, q, r)
            for pi_ord in (zeros, shifted, (1, -1) + (0,) * (d - 1), (2, -2) + (0,) * (d - 1))
        ]
    regular = (0, 1) + (0,) * (d - 1)
    units = (1,) + (0,) * d
    return [
        make_character(zeros, zeros, zeros, q, r),
        make_character(regular, zeros, zeros, q, r),
        make_character(zeros, shifted, zeros, q, r),
        make_character(regular, (1, -1) + (0,) * (d - 1), units, q, r),
    ]


def check_weight_reduction(grid: dict) -> CheckResult:
    counter = _Counter(SuiteCheck.REDUCTION)
    for weight in _balanced(grid["max_d"], grid["max_r"]):
        m = reduce_weight(weight)
        bounds = all(0 <= weight.n[i] - m[i - 1] <= weight.r for i in range(1, weight.d + 1))
        counter.record(len(m) == weight.d and bounds and is_balanced(m, weight.r).ok, n=list(weight.n), m=list(m))
    return counter.result


def check_weight_reversal(grid: dict, seed: int) -> CheckResult:
    counter = _Counter(SuiteCheck.REVERSAL)
    for d in range(1, grid["max_d"] + 1):
        failing = delta_complement_identity(d)
        counter.record(failing is None, d=d, subset=failing)
    for weight in _balanced(grid["max_d"], grid["max_r"]):
        counter.record(is_balanced(reverse_weight(weight.n), weight.r).ok, n=list(weight.n), r=weight.r)
    rng = random.Random(seed)
    bound = grid["probe_bound"]
    for _ in range(grid["probes"]):
        d = rng.randint(1, grid["max_d"])
        r = rng.randint(1, grid["max_r"])
        n = [rng.randint(-bound, bound) for _ in range(d)]
        n.append(-sum(n))
        counter.record(is_balanced(n, r).ok == is_balanced(reverse_weight(n), r).ok, n=n, r=r)
    return counter.result


def check_nabla_construction(grid: dict) -> CheckResult:
    counter = _Counter(SuiteCheck.NABLA)
    for weight in _balanced(grid["max_d"], grid["max_r"]):
        check = check_integration(build_nabla(weight), weight.n, weight.r)
        counter.record(check.ok, n=list(weight.n), r=weight.r, **check.witness)
    return counter.result


def _perturbations(nabla: NablaFunction) -> Iterable[NablaFunction]:
    """Single-point changes break the ubar equation; orbit shifts keep it and only move the descent data."""
    for w in enumerate_w(nabla.d):
        for step in (-1, 1):
            values = dict(nabla.values)
            values[w] += step
            yield NablaFunction(nabla.d, values)
    for head in enumerate_w(nabla.d):
        if head(nabla.d) != nabla.d:
            continue
        for step in (-1, 1):
            yield nabla.shifted_on_orbit(head, step)


def check_stability_equivalence(grid: dict) -> CheckResult:
    counter = _Counter(SuiteCheck.STABILITY)
    q = grid["q"]
    descent_cases = 0
    for weight in _balanced(grid["max_d"], grid["max_r"]):
        thetas = [None, (0, 1) + (0,) * (weight.d - 1)]
        base = build_nabla(weight)
        for theta in thetas:
            c = character_from_weight(weight.n, q, weight.r, theta)
            for nabla in itertools.chain([base, base.shifted(3)], _perturbations(base)):
                full = check_equinab(nabla, c, EquinabMode.FULL)
                verdicts = (
                    is_lattice_stable(c, nabla).ok,
                    full.ok,
                    check_equinab(nabla, c, EquinabMode.S_D_ONLY).ok,
                )
                if full.witness.get("equation") == "descent":
                    descent_cases += 1
                counter.record(len(set(verdicts)) == 1, n=list(weight.n), verdicts=list(verdicts))
    if grid["max_d"] >= 2:
        counter.record(descent_cases > 0, descent_cases=descent_cases)
    logger.info("stability: %d cases rejected by the descent condition alone", descent_cases)
    return counter.result


def check_oracle_equality(grid: dict, seed: int) -> CheckResult:
    counter = _Counter(SuiteCheck.ORACLE)
    for d in grid["ranks"]:
        for q in grid["fields"]:
            for c in character_grid(d, q, grid["r"]):
                reports = [compare_closed_form(c, precision) for precision in grid["precisions"]]
                agree = len({(report.matches, len(report.mismatches)) for report in reports}) == 1
                first = reports[0]
                counter.record(first.ok and agree, character=build_character_record(c),
                               mismatches=first.mismatches[:3])
                logger.info("oracle d=%d q=%d: %d matching columns", d, q, first.matches)
            for identity in run_identity_checks(d, q, grid["samples"], seed, grid["precisions"][0]):
                counter.record(identity.ok, identity=identity.name, d=d, q=q, failures=identity.failures[:3])
    return counter.result


def check_relation_suite(grid: dict) -> CheckResult:
    counter = _Counter(SuiteCheck.RELATIONS)
    for d in range(1, grid["max_d"] + 1):
        for q in grid["fields"]:
            for c in character_grid(d, q, grid["r"]):
                report = check_relations(build_hecke_module(c), Relation.ALL)
                failures = [result.relation + ":" + result.instance for result in report.failures()]
                counter.record(report.ok, character=build_character_record(c), failures=failures)
    return counter.result


def _criterion_grid(grid: dict) -> Iterable[CharacterData]:
    bound = grid["order_bound"]
    for d in range(1, grid["max_d"] + 1):
        zeros = (0,) * (d + 1)
        regular = (0, 1) + (0,) * (d - 1)
        for r in range(1, grid["max_r"] + 1):
            for pi_ord in itertools.product(range(-bound, bound + 1), repeat=d + 1):
                if sum(pi_ord) == 0:
                    yield make_character(regular, pi_ord, zeros, 3, r)


def check_criterion_equivalence(grid: dict) -> CheckResult:
    counter = _Counter(SuiteCheck.CRITERION)
    for d in range(1, grid["max_d"] + 1):
        witness = check_t_positions(d)
        counter.record(witness is None, d=d, t_positions=witness)
    for c in _criterion_grid(grid):
        verdict = unitarity_criterion(c).ok
        balanced = is_balanced(weight_of_character(c), c.r).ok
        counter.record(verdict == balanced, character=build_character_record(c))
    return counter.result


def check_duality(grid: dict) -> CheckResult:
    counter = _Counter(SuiteCheck.DUALITY)
    for c in _criterion_grid(grid):
        dual = dual_character(c)
        ok = unitarity_criterion(c).ok == unitarity_criterion(dual).ok and dual_character(dual) == c
        counter.record(ok, character=build_character_record(c))
    return counter.result


def check_reduction_coincidence(grid: dict) -> CheckResult:
    """reduce_lattice compares both reductions itself; the reduced module must also pass validate_action."""
    counter = _Counter(SuiteCheck.REDUCTION_COINCIDENCE)
    for weight in _balanced(grid["max_d"], grid["max_r"]):
        nabla = build_nabla(weight)
        for q in grid["fields"]:
            thetas = [None] if q == 2 else [None, (0, 1) + (0,) * (weight.d - 1)]
            for theta in thetas:
                c = character_from_weight(weight.n, q, weight.r, theta)
                report = validate_action(reduce_lattice(c, nabla))
                counter.record(report.ok, n=list(weight.n), q=q,
                               failures=[result.relation for result in report.failures()])
    return counter.result


def _sigma_maps(d: int) -> Iterable[SigmaFunction]:
    domain = ascent_set(d)
    for values in itertools.product((-1, 0, 1), repeat=len(domain)):
        yield SigmaFunction(d, dict(zip(domain, values)))


def check_realization(grid: dict, seed: int) -> CheckResult:
    counter = _Counter(SuiteCheck.REALIZATION)
    d, r, q = grid["d"], grid["r"], grid["q"]
    fq = get_field(q)
    basis = enumerate_w(d)
    eps = {w: fq.one() for w in basis}
    thetas = [(0,) * (d + 1), (0, 1) + (0,) * (d - 1)]
    rng = random.Random(seed)
    for sigma in _sigma_maps(d):
        partial = search_partial(sigma, r, d)
        label = {str(w): value for w, value in sorted(sigma.values.items())}
        counter.record(partial is not None, sigma=label, stage="search")
        if partial is None:
            continue
        for theta in thetas:
            try:
                silvester_realize(theta, sigma, eps, partial)
                counter.record(True)
            except AlgebraError as e:
                counter.record(False, sigma=label, theta=list(theta), stage="realize", message=str(e))
        for v in basis:
            if len(reduced_words(v)) >= 2:
                for w in basis:
                    witness = word_independence(partial, w, v)
                    counter.record(witness is None, stage="words", **(witness or {}))
        for _ in range(grid["additivity_triples"] // 27 + 1):
            w, v, x = (rng.choice(basis) for _ in range(3))
            counter.record(cocycle_additivity(partial, w, v, x), stage="additivity", w=str(w), v=str(v), x=str(x))
    return counter.result


def battery(grid: dict, seed: int) -> dict[str, Callable[[], CheckResult]]:
    return {
        SuiteCheck.REDUCTION: lambda: check_weight_reduction(grid[SuiteCheck.REDUCTION]),
        SuiteCheck.REVERSAL: lambda: check_weight_reversal(grid[SuiteCheck.REVERSAL], seed),
        SuiteCheck.NABLA: lambda: check_nabla_construction(grid[SuiteCheck.NABLA]),
        SuiteCheck.STABILITY: lambda: check_stability_equivalence(grid[SuiteCheck.STABILITY]),
        SuiteCheck.ORACLE: lambda: check_oracle_equality(grid[SuiteCheck.ORACLE], seed),
        SuiteCheck.RELATIONS: lambda: check_relation_suite(grid[SuiteCheck.RELATIONS]),
        SuiteCheck.CRITERION: lambda: check_criterion_equivalence(grid[SuiteCheck.CRITERION]),
        SuiteCheck.DUALITY: lambda: check_duality(grid[SuiteCheck.DUALITY]),
        SuiteCheck.REDUCTION_COINCIDENCE: lambda: check_reduction_coincidence(grid[SuiteCheck.REDUCTION_COINCIDENCE]),
        SuiteCheck.REALIZATION: lambda: check_realization(grid[SuiteCheck.REALIZATION], seed),
    }


class SuiteWorkerThread(threading.Thread):
    """One worker thread that repeatedly takes a check off the queue and runs it."""

    def __init__(self, worker_index: int, tasks: queue.Queue, results: dict, lock: threading.Lock):
        super().__init__(daemon=True, name=f"suite-worker-{worker_index}")
        self._tasks = tasks
        self._results = results
        self._lock = lock

    def run(self):
        while True:
            try:
                name, check = self._tasks.get_nowait()
            except queue.Empty:
                return
            started = time.monotonic()
            try:
                result = check()
            except Exception as e:
                logger.error("%s raised", name, exc_info=True)
                result = CheckResult(name, False, error=f"{type(e).__name__}: {e}")
            logger.info("%s: %s after %.1fs (%d instances)", name, "pass" if result.ok else "FAIL",
                        time.monotonic() - started, result.checked)
            with self._lock:
                self._results[name] = result
            self._tasks.task_done()


def run_suite(checks: list[str] | None = None, seed: int | None = None, out_dir: str | None = None,
              grid_path: str | None = None, concurrency: int | None = None) -> dict:
    """Run the selected checks concurrently; writes one certificate per check and report.json when out_dir is set."""
    grid = load_grid(grid_path)
    seed = settings.DEFAULT_SEED if seed is None else seed
    selected = checks or SuiteCheck.ALL
    unknown = [name for name in selected if name not in SuiteCheck.ALL]
    if unknown:
        raise ConfigError(f"unknown suite checks: {unknown}")
    missing = [name for name in selected if name not in grid]
    if missing:
        raise ConfigError(f"suite grid has no entry for {missing}")

    runners = battery(grid, seed)
    tasks: queue.Queue = queue.Queue()
    for name in selected:
        tasks.put((name, runners[name]))
    results: dict[str, CheckResult] = {}
    lock = threading.Lock()
    workers = [SuiteWorkerThread(i, tasks, results, lock)
               for i in range(max(1, min(concurrency or settings.SUITE_CONCURRENCY, len(selected))))]
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()

    report = {
        "ok": all(results[name].ok for name in selected),
        "seed": seed,
        "checks": [results[name].as_record() for name in selected],
    }
    if out_dir:
        for name in selected:
            write_certificate(out_dir, name, results[name].as_record())
        write_certificate(out_dir, "report", report)
    return report
