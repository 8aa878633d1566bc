"""Hecke operators on the principal series, lattice stability and the relation checker."""
from unittest import TestCase

from config.constants import EquinabMode, Relation
from algebra.character import character_from_weight, make_character, trivial_character
from algebra.coxeter import enumerate_w, identity, simple_reflection
from algebra.errors import PreconditionError
from algebra.nabla import NablaFunction, build_nabla, check_equinab
from algebra.psmod import (
    Generator,
    build_hecke_module,
    generating_set,
    is_lattice_stable,
    operator_matrix,
    rebase_to_lattice,
)
from algebra.relations import check_relations
from algebra.scalars import Scalar
from algebra.weights import BalancedWeight, enumerate_balanced


def _rank_one(value_s: int) -> NablaFunction:
    return NablaFunction(1, {identity(1): 0, simple_reflection(1, 1): value_s})


class OperatorMatrixTests(TestCase):

    def test_rank_one_trivial_s(self):
        c = trivial_character(1, 3, 1)
        ctx = c.ctx
        matrix = operator_matrix(c, Generator.s(1))
        # basis order: e, s_1
        self.assertEqual(matrix[1][0], Scalar.one(ctx))
        self.assertEqual(matrix[0][1], Scalar.from_int(ctx, 3))
        self.assertEqual(matrix[1][1], Scalar.from_int(ctx, 2))
        self.assertTrue(matrix[0][0].is_zero())

    def test_regular_character_drops_diagonal(self):
        c = make_character((0, 1), (0, 0), (0, 0), 3, 1)
        matrix = operator_matrix(c, Generator.s(1))
        self.assertTrue(matrix[1][1].is_zero())

    def test_u_and_u_inverse_are_inverse(self):
        c = make_character((0, 1, 0), (-1, 1, 0), (1, 0, 0), 3, 1)
        module = build_hecke_module(c)
        product_report = check_relations(module, {Relation.U_INVERSE})
        self.assertTrue(product_report.ok)

    def test_generator_validation(self):
        c = trivial_character(2, 3, 1)
        with self.assertRaises(PreconditionError):
            operator_matrix(c, Generator.s(3))
        with self.assertRaises(PreconditionError):
            operator_matrix(c, Generator.torus((1, 0)))

    def test_generating_set(self):
        labels = [generator.label() for generator in generating_set(2)]
        self.assertEqual(labels[-1], "T_s(2)")
        self.assertEqual(len(labels), 6)


class RelationTests(TestCase):
    """Every relation holds for the closed-form operators."""

    def test_relations_for_sample_characters(self):
        characters = [
            trivial_character(2, 3, 1),
            make_character((0, 1, 0), (0, 0, 0), (0, 0, 0), 3, 1),
            make_character((0, 0, 0), (-1, 1, 0), (0, 0, 0), 2, 1),
            make_character((1, 0, 0, 1), (1, -1, 0, 0), (1, 0, 0, 0), 3, 2),
        ]
        for c in characters:
            report = check_relations(build_hecke_module(c), Relation.ALL)
            self.assertTrue(report.ok, [(f.relation, f.instance) for f in report.failures()])

    def test_torus_product_trivial_digits(self):
        c = trivial_character(1, 3, 1)
        module = build_hecke_module(c)
        zero_digits = module.torus_matrix((0, 0))
        self.assertEqual(zero_digits[0][0], Scalar.one(c.ctx))
        self.assertEqual(zero_digits[1][1], Scalar.one(c.ctx))


class LatticeTests(TestCase):

    def test_zero_nabla_leaves_matrices(self):
        c = trivial_character(2, 3, 1)
        module = build_hecke_module(c)
        zero = NablaFunction(2, {w: 0 for w in enumerate_w(2)})
        lattice = rebase_to_lattice(module, zero)
        for generator in generating_set(2):
            self.assertEqual(lattice.matrix(generator), module.matrix(generator))

    def test_rank_one_worked_example(self):
        c = character_from_weight((-1, 1), 3, 1)
        lattice = rebase_to_lattice(build_hecke_module(c), _rank_one(-1))
        matrix = lattice.matrix(Generator.s(1))
        ctx = c.ctx
        self.assertEqual(matrix[0][1], Scalar.one(ctx))
        self.assertEqual(matrix[1][1], Scalar.pi(ctx) - Scalar.one(ctx))

    def test_stability(self):
        self.assertTrue(is_lattice_stable(trivial_character(2, 3, 1),
                                          NablaFunction(2, {w: 0 for w in enumerate_w(2)})).ok)
        weight = BalancedWeight((-1, 1), 1)
        self.assertTrue(is_lattice_stable(character_from_weight(weight.n, 3, 1), build_nabla(weight)).ok)

    def test_instability_witness(self):
        check = is_lattice_stable(trivial_character(1, 3, 1), _rank_one(1))
        self.assertFalse(check.ok)
        self.assertIn("generator", check.witness)
        self.assertLess(check.witness["valuation"], 0)

    def test_pipeline_lattices_are_stable(self):
        for weight in enumerate_balanced(2, 2):
            for theta in (None, (0, 1, 0)):
                c = character_from_weight(weight.n, 3, 2, theta)
                self.assertTrue(is_lattice_stable(c, build_nabla(weight)).ok, weight)

    def test_orbit_shifts_agree_with_descent_condition(self):
        """Shifting nabla on a ubar-orbit keeps the ubar equation, so only the descent condition decides."""
        descent_rejections = 0
        for r in (1, 2):
            for weight in enumerate_balanced(2, r):
                c = character_from_weight(weight.n, 3, r)
                base = build_nabla(weight)
                for head in (w for w in enumerate_w(2) if w(2) == 2):
                    for step in (-1, 1):
                        nabla = base.shifted_on_orbit(head, step)
                        full = check_equinab(nabla, c, EquinabMode.FULL)
                        verdicts = {
                            is_lattice_stable(c, nabla).ok,
                            full.ok,
                            check_equinab(nabla, c, EquinabMode.S_D_ONLY).ok,
                        }
                        self.assertEqual(len(verdicts), 1, (weight, head, step))
                        if not full.ok:
                            self.assertEqual(full.witness["equation"], "descent")
                            descent_rejections += 1
        self.assertGreater(descent_rejections, 0)
