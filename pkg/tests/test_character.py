"""Tamely ramified characters, their weights, the unitarity criterion and duality."""
from unittest import TestCase

from algebra.character import (
    center_check,
    character_from_weight,
    check_t_positions,
    dual_character,
    make_character,
    trivial_character,
    unitarity_criterion,
    weight_of_character,
)
from algebra.coxeter import enumerate_w, identity, ubar
from algebra.errors import PreconditionError
from algebra.scalars import Scalar
from algebra.weights import enumerate_balanced, is_balanced


class CharacterDataTests(TestCase):

    def test_trivial_character_is_one_on_t(self):
        c = trivial_character(2, 3, 1)
        for w in enumerate_w(2):
            self.assertEqual(c.theta_t(w), Scalar.one(c.ctx))
            self.assertEqual(c.t_order(w), 0)

    def test_t_index_follows_ubar(self):
        c = trivial_character(3, 2, 1)
        for j in range(4):
            self.assertEqual(c.t_index(ubar(3, j)), j)

    def test_t_positions(self):
        for d in range(1, 5):
            self.assertIsNone(check_t_positions(d))

    def test_regularity_and_kappa(self):
        c = make_character((0, 1, 0), (0, 0, 0), (0, 0, 0), 3, 1)
        e = identity(2)
        self.assertTrue(c.is_regular(e, 1))
        self.assertTrue(c.is_regular(e, 2))
        self.assertEqual(c.kappa_exponent(e, 1), 0)
        self.assertEqual(c.kappa_exponent(e, 2), 1)
        self.assertFalse(trivial_character(2, 3, 1).is_regular(e, 1))

    def test_theta_t_inverse(self):
        c = make_character((0, 1), (-1, 1), (1, 0), 3, 2)
        for w in enumerate_w(1):
            self.assertEqual(c.theta_t(w) * c.theta_t_inverse(w), Scalar.one(c.ctx))

    def test_validation(self):
        with self.assertRaises(PreconditionError):
            make_character((0, 0), (0,), (0, 0), 3, 1)
        with self.assertRaises(PreconditionError):
            make_character((0, 2), (0, 0), (0, 0), 3, 1)
        with self.assertRaises(PreconditionError):
            make_character((0,), (0,), (0,), 3, 1)


class WeightTests(TestCase):

    def test_trivial_weight(self):
        self.assertEqual(weight_of_character(trivial_character(3, 2, 1)), (0, 0, 0, 0))

    def test_reindexing(self):
        c = make_character((0, 0), (1, -1), (0, 0), 3, 1)
        self.assertEqual(weight_of_character(c), (1, -1))

    def test_weight_round_trip(self):
        for weight in enumerate_balanced(3, 2):
            self.assertEqual(weight_of_character(character_from_weight(weight.n, 2, 2)), weight.n)


class CriterionTests(TestCase):

    def test_unramified_unitary(self):
        self.assertTrue(unitarity_criterion(trivial_character(2, 3, 1)).ok)

    def test_rank_one(self):
        self.assertTrue(unitarity_criterion(character_from_weight((-1, 1), 3, 1)).ok)
        check = unitarity_criterion(character_from_weight((1, -1), 3, 1))
        self.assertFalse(check.ok)
        self.assertEqual(check.witness["subset"], [0])

    def test_center(self):
        c = make_character((0, 0), (1, 0), (0, 0), 3, 1)
        self.assertFalse(center_check(c))
        self.assertEqual(unitarity_criterion(c).witness["equation"], "center")

    def test_criterion_matches_balance(self):
        for pi_ord in ((-1, 1, 0), (2, -1, -1), (1, 1, -2), (-2, 0, 2), (0, 0, 0)):
            c = make_character((0, 0, 0), pi_ord, (0, 0, 0), 3, 1)
            self.assertEqual(unitarity_criterion(c).ok, is_balanced(weight_of_character(c), 1).ok, pi_ord)


class DualityTests(TestCase):

    def test_rank_one_twist(self):
        for r in (1, 2):
            self.assertEqual(dual_character(trivial_character(1, 3, r)).pi_ord, (-r, r))

    def test_involution_and_criterion(self):
        for pi_ord in ((-1, 1, 0), (2, -1, -1), (0, 0, 0)):
            c = make_character((0, 1, 0), pi_ord, (1, 0, 0), 3, 1)
            dual = dual_character(c)
            self.assertEqual(dual_character(dual), c)
            self.assertEqual(unitarity_criterion(dual).ok, unitarity_criterion(c).ok)
