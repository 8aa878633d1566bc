"""Modules of W-type and the reduction of stable lattices."""
from unittest import TestCase

from config.constants import Relation
from algebra.character import character_from_weight, make_character, trivial_character
from algebra.coxeter import ascent_set, enumerate_w, identity, simple_reflection
from algebra.errors import PreconditionError, SizeMismatchError
from algebra.finite_field import get_field
from algebra.nabla import NablaFunction, SigmaFunction, build_nabla
from algebra.psmod import Generator
from algebra.relations import conjugated_s
from algebra.weights import BalancedWeight, enumerate_balanced
from algebra.wtype import (
    epsilon_from_character,
    make_wtype_module,
    modules_equal,
    reduce_lattice,
    validate_action,
)


def _sigma(d: int, value: int) -> SigmaFunction:
    return SigmaFunction(d, {w: value for w in ascent_set(d)})


def _eps(d: int, q: int) -> dict:
    fq = get_field(q)
    return {w: fq.one() for w in enumerate_w(d)}


class MakeModuleTests(TestCase):

    def test_trivial_data_passes(self):
        module = make_wtype_module((0, 0, 0), _sigma(2, 1), _eps(2, 3), 3)
        report = validate_action(module)
        self.assertTrue(report.ok, [(f.relation, f.instance) for f in report.failures()])

    def test_s_d_matrix_cases(self):
        fq = get_field(3)
        e, s1 = identity(1), simple_reflection(1, 1)
        module = make_wtype_module((0, 0), SigmaFunction(1, {e: -1}), _eps(1, 3), 3)
        matrix = module.s_matrix(1)
        self.assertEqual(matrix[0][1], fq.one())
        self.assertEqual(matrix[1][1], -fq.one())
        self.assertTrue(matrix[1][0].is_zero())
        module = make_wtype_module((0, 0), SigmaFunction(1, {e: 1}), _eps(1, 3), 3)
        self.assertEqual(module.s_matrix(1)[1][0], fq.one())
        self.assertEqual(module.basis, [e, s1])

    def test_lower_reflections_are_conjugates(self):
        module = make_wtype_module((0, 1, 0), _sigma(2, 0), _eps(2, 3), 3)
        self.assertEqual(module.s_matrix(1), conjugated_s(module, 1))
        with self.assertRaises(PreconditionError):
            module.matrix(Generator.s(1))

    def test_braid_fails_when_eps_is_not_s2_invariant(self):
        fq = get_field(3)
        eps = _eps(2, 3)
        eps[identity(2)] = fq.gen_power(1)
        report = validate_action(make_wtype_module((0, 0, 0), _sigma(2, 1), eps, 3))
        self.assertFalse(report.ok)
        self.assertFalse(report.passed(Relation.BRAID))

    def test_validation(self):
        with self.assertRaises(SizeMismatchError):
            make_wtype_module((0, 0), _sigma(2, 1), _eps(2, 3), 3)
        with self.assertRaises(PreconditionError):
            make_wtype_module((0, 0, 0), SigmaFunction(2, {identity(2): 1}), _eps(2, 3), 3)
        with self.assertRaises(PreconditionError):
            make_wtype_module((0, 0, 0), _sigma(2, 2), _eps(2, 3), 3)
        eps = _eps(2, 3)
        eps[identity(2)] = get_field(3).zero()
        with self.assertRaises(PreconditionError):
            make_wtype_module((0, 0, 0), _sigma(2, 1), eps, 3)


class ReduceLatticeTests(TestCase):

    def test_epsilon_of_trivial_units(self):
        eps = epsilon_from_character(trivial_character(2, 3, 1))
        self.assertTrue(all(value == get_field(3).one() for value in eps.values()))

    def test_trivial_lattice(self):
        zero = NablaFunction(2, {w: 0 for w in enumerate_w(2)})
        reduced = reduce_lattice(trivial_character(2, 3, 1), zero)
        self.assertIsNone(modules_equal(reduced, make_wtype_module((0, 0, 0), _sigma(2, 1), _eps(2, 3), 3)))

    def test_rank_one_reduction(self):
        weight = BalancedWeight((-1, 1), 1)
        reduced = reduce_lattice(character_from_weight(weight.n, 3, 1), build_nabla(weight))
        self.assertEqual(reduced.sigma.values, {identity(1): -1})

    def test_reductions_satisfy_relations(self):
        for q in (2, 3):
            for weight in enumerate_balanced(2, 2):
                theta = (0, 1, 0) if q == 3 else None
                c = character_from_weight(weight.n, q, 2, theta)
                report = validate_action(reduce_lattice(c, build_nabla(weight)))
                self.assertTrue(report.ok, (q, weight))

    def test_units_carry_into_eps(self):
        c = make_character((0, 0), (0, 0), (1, 1), 3, 1)
        zero = NablaFunction(1, {w: 0 for w in enumerate_w(1)})
        reduced = reduce_lattice(c, zero)
        self.assertTrue(all(value == get_field(3).gen_power(1) for value in reduced.eps.values()))

    def test_unstable_lattice(self):
        nabla = NablaFunction(1, {identity(1): 0, simple_reflection(1, 1): 1})
        with self.assertRaises(PreconditionError):
            reduce_lattice(trivial_character(1, 3, 1), nabla)

    def test_modules_equal_reports_difference(self):
        a = make_wtype_module((0, 0, 0), _sigma(2, 1), _eps(2, 3), 3)
        b = make_wtype_module((0, 0, 0), _sigma(2, -1), _eps(2, 3), 3)
        self.assertEqual(modules_equal(a, b)["generator"], "T_s(2)")
