"""The acceptance battery on a reduced grid."""
import io
import json
import os
import tempfile
from unittest import TestCase

import yaml

from config.constants import ExitCode, SuiteCheck
from algebra.errors import ConfigError
from cli.app import run_command
from worker.suite import character_grid, load_grid, run_suite


SMALL_GRID = {
    SuiteCheck.REDUCTION: {"max_d": 2, "max_r": 2},
    SuiteCheck.REVERSAL: {"max_d": 2, "max_r": 2, "probes": 50, "probe_bound": 2},
    SuiteCheck.NABLA: {"max_d": 2, "max_r": 2},
    SuiteCheck.STABILITY: {"max_d": 2, "max_r": 1, "q": 3},
    SuiteCheck.ORACLE: {"ranks": [1], "fields": [3], "r": 1, "precisions": [8], "samples": 5},
    SuiteCheck.RELATIONS: {"max_d": 2, "fields": [3], "r": 1},
    SuiteCheck.CRITERION: {"max_d": 1, "max_r": 2, "order_bound": 2},
    SuiteCheck.DUALITY: {"max_d": 1, "max_r": 2, "order_bound": 2},
    SuiteCheck.REDUCTION_COINCIDENCE: {"max_d": 2, "max_r": 1, "fields": [2, 3]},
    SuiteCheck.REALIZATION: {"d": 2, "r": 2, "q": 3, "additivity_triples": 27},
}


class SuiteTests(TestCase):
    """Every check passes on a small grid and leaves a certificate behind."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.grid_path = os.path.join(self.tmp.name, "grid.yaml")
        self._write_grid(SMALL_GRID)

    def _write_grid(self, grid):
        with open(self.grid_path, "w", encoding="utf-8") as handle:
            yaml.safe_dump(grid, handle)

    def test_full_battery(self):
        out_dir = os.path.join(self.tmp.name, "certs")
        report = run_suite(seed=5, out_dir=out_dir, grid_path=self.grid_path, concurrency=3)
        failing = [check for check in report["checks"] if not check["ok"]]
        self.assertTrue(report["ok"], failing)
        self.assertEqual([check["name"] for check in report["checks"]], SuiteCheck.ALL)
        for name in SuiteCheck.ALL + ["report"]:
            self.assertTrue(os.path.exists(os.path.join(out_dir, f"{name}.json")), name)

    def test_counts_are_reported(self):
        report = run_suite([SuiteCheck.STABILITY, SuiteCheck.REVERSAL], seed=5, grid_path=self.grid_path)
        checked = {check["name"]: check["checked"] for check in report["checks"]}
        self.assertGreater(checked[SuiteCheck.STABILITY], 0)
        self.assertGreaterEqual(checked[SuiteCheck.REVERSAL], 50)

    def test_failing_check_is_captured(self):
        self._write_grid(dict(SMALL_GRID, **{SuiteCheck.REDUCTION: {"max_d": 9, "max_r": 1}}))
        report = run_suite([SuiteCheck.REDUCTION], grid_path=self.grid_path)
        self.assertFalse(report["ok"])
        self.assertIn("ResourceBoundError", report["checks"][0]["error"])

    def test_configuration_errors(self):
        with self.assertRaises(ConfigError):
            run_suite(["no_such_check"], grid_path=self.grid_path)
        with self.assertRaises(ConfigError):
            load_grid(os.path.join(self.tmp.name, "missing.yaml"))
        self._write_grid({SuiteCheck.REDUCTION: {"max_d": 1, "max_r": 1}})
        with self.assertRaises(ConfigError):
            run_suite([SuiteCheck.NABLA], grid_path=self.grid_path)

    def test_default_grid_covers_every_check(self):
        grid = load_grid()
        self.assertTrue(all(name in grid for name in SuiteCheck.ALL))

    def test_character_grid(self):
        for q in (2, 3):
            characters = character_grid(2, q, 1)
            self.assertEqual(len(characters), 4)
            self.assertEqual(len(set(characters)), 4)

    def test_command(self):
        out_dir = os.path.join(self.tmp.name, "cli")
        stdout = io.StringIO()
        code = run_command(["suite", "--checks", SuiteCheck.REDUCTION, SuiteCheck.DUALITY,
                            "--grid", self.grid_path, "--out", out_dir], stdout)
        self.assertEqual(code, ExitCode.OK)
        body = json.loads(stdout.getvalue())
        self.assertEqual(len(body["checks"]), 2)
        self.assertTrue(os.path.exists(os.path.join(out_dir, "report.json")))
