"""Partial functions, the cocycle identities and realization of W-type modules."""
import itertools
import random
from unittest import TestCase
from unittest.mock import patch

from config import settings
from algebra.coxeter import ascent_set, enumerate_w, identity, simple_reflection
from algebra.errors import CocycleError, HypothesisError, PreconditionError, ResourceBoundError
from algebra.finite_field import get_field
from algebra.nabla import PartialFunction, SigmaFunction, build_nabla, partial_from_nabla
from algebra.realize import (
    check_partial,
    cocycle_additivity,
    cocycle_instances,
    nabla_from_partial,
    search_partial,
    silvester_realize,
    word_independence,
)
from algebra.weights import enumerate_balanced


def _ones(d: int) -> dict:
    fq = get_field(3)
    return {w: fq.one() for w in enumerate_w(d)}


def _constant_sigma(d: int, value: int) -> SigmaFunction:
    return SigmaFunction(d, {w: value for w in ascent_set(d)})


def _rank_one_partial(value: int, r: int) -> PartialFunction:
    return PartialFunction(1, r, {identity(1): value, simple_reflection(1, 1): -value})


class CheckPartialTests(TestCase):

    def test_partials_of_integrating_functions_pass(self):
        for weight in enumerate_balanced(3, 1):
            check_partial(partial_from_nabla(build_nabla(weight), 1))

    def test_out_of_range(self):
        with self.assertRaises(CocycleError) as raised:
            check_partial(_rank_one_partial(2, 1))
        self.assertEqual(raised.exception.witness["value"], 2)

    def test_antisymmetry(self):
        partial = PartialFunction(1, 1, {identity(1): 1, simple_reflection(1, 1): 1})
        with self.assertRaises(CocycleError):
            check_partial(partial)

    def test_sigma_compatibility(self):
        sigma = SigmaFunction(1, {identity(1): 1})
        with self.assertRaises(CocycleError) as raised:
            check_partial(_rank_one_partial(1, 2), sigma)
        self.assertEqual(raised.exception.witness["sigma"], 1)

    def test_cocycle_failure_names_instance(self):
        # both identities are vacuous below rank three
        d = 3
        values = {w: 0 for w in enumerate_w(d)}
        s_d = simple_reflection(d, d)
        values[identity(d)], values[s_d] = 1, -1
        with self.assertRaises(CocycleError) as raised:
            check_partial(PartialFunction(d, 1, values))
        self.assertIn("defect", raised.exception.witness)
        self.assertIn("w", raised.exception.witness)

    def test_instances_cover_both_identities(self):
        kinds = {label["identity"] for label, _ in cocycle_instances(3)}
        self.assertEqual(kinds, {"commute", "braid"})
        self.assertEqual(sum(1 for _ in cocycle_instances(1)), 0)


class SearchPartialTests(TestCase):

    def test_rank_one_interior_value(self):
        partial = search_partial(SigmaFunction(1, {identity(1): 0}), 2, 1)
        self.assertEqual(partial(identity(1)), 1)
        self.assertEqual(partial(simple_reflection(1, 1)), -1)

    def test_empty_interior(self):
        self.assertIsNone(search_partial(SigmaFunction(1, {identity(1): 0}), 1, 1))

    def test_rank_three_zero(self):
        partial = search_partial(_constant_sigma(3, 1), 1, 3)
        self.assertTrue(all(value == 0 for value in partial.values.values()))

    def test_every_rank_two_sigma(self):
        domain = ascent_set(2)
        for values in itertools.product((-1, 0, 1), repeat=len(domain)):
            sigma = SigmaFunction(2, dict(zip(domain, values)))
            partial = search_partial(sigma, 2, 2)
            self.assertIsNotNone(partial, values)
            check_partial(partial, sigma)

    def test_rank_two_has_no_constraints(self):
        for label, terms in cocycle_instances(2):
            totals = {}
            for c, x in terms:
                totals[x] = totals.get(x, 0) + c
            self.assertTrue(all(total == 0 for total in totals.values()), label)

    def test_rank_bound(self):
        with self.assertRaises(ResourceBoundError):
            search_partial(_constant_sigma(5, 1), 1, 5)

    def test_rank_mismatch(self):
        with self.assertRaises(PreconditionError):
            search_partial(_constant_sigma(2, 1), 1, 3)


class PartialPairTests(TestCase):

    def setUp(self):
        sigma = SigmaFunction(2, dict(zip(ascent_set(2), (-1, 0, 1))))
        self.partial = search_partial(sigma, 2, 2)

    def test_word_independence(self):
        for w in enumerate_w(2):
            for v in enumerate_w(2):
                self.assertIsNone(word_independence(self.partial, w, v))

    def test_additivity(self):
        rng = random.Random(7)
        basis = enumerate_w(2)
        for _ in range(100):
            w, v, x = (rng.choice(basis) for _ in range(3))
            self.assertTrue(cocycle_additivity(self.partial, w, v, x))

    def test_nabla_at_identity(self):
        self.assertEqual(nabla_from_partial(self.partial)(identity(2)), 0)


class RealizeTests(TestCase):

    def test_zero_partial(self):
        partial = PartialFunction(2, 1, {w: 0 for w in enumerate_w(2)})
        c, nabla = silvester_realize((0, 0, 0), _constant_sigma(2, 1), _ones(2), partial)
        self.assertEqual(c.pi_ord, (0, 0, 0))
        self.assertEqual(c.unit_exp, (0, 0, 0))
        self.assertTrue(all(value == 0 for value in nabla.values.values()))

    def test_rank_one(self):
        c, nabla = silvester_realize((0, 0), SigmaFunction(1, {identity(1): -1}), _ones(1),
                                     _rank_one_partial(1, 1))
        self.assertEqual(nabla(identity(1)), 0)
        self.assertEqual(nabla(simple_reflection(1, 1)), -1)
        self.assertEqual(c.pi_ord, (-1, 1))

    def test_every_rank_two_sigma_is_realized(self):
        domain = ascent_set(2)
        for theta in ((0, 0, 0), (0, 1, 0)):
            for values in itertools.product((-1, 0, 1), repeat=len(domain)):
                sigma = SigmaFunction(2, dict(zip(domain, values)))
                c, _ = silvester_realize(theta, sigma, _ones(2), search_partial(sigma, 2, 2))
                self.assertEqual(c.theta_exp, theta)

    def test_eps_hypothesis(self):
        eps = _ones(2)
        eps[identity(2)] = get_field(3).gen_power(1)
        partial = PartialFunction(2, 1, {w: 0 for w in enumerate_w(2)})
        with self.assertRaises(HypothesisError):
            silvester_realize((0, 0, 0), _constant_sigma(2, 1), eps, partial)

    def test_incompatible_sigma(self):
        partial = PartialFunction(2, 1, {w: 0 for w in enumerate_w(2)})
        with self.assertRaises(CocycleError):
            silvester_realize((0, 0, 0), _constant_sigma(2, -1), _ones(2), partial)

    def test_word_independence_checked_from_every_start(self):
        partial = search_partial(_constant_sigma(2, 0), 2, 2)
        with patch("algebra.realize.word_independence", wraps=word_independence) as checked:
            silvester_realize((0, 0, 0), _constant_sigma(2, 0), _ones(2), partial)
        starts = {call.args[1] for call in checked.call_args_list}
        self.assertEqual(starts, set(enumerate_w(2)))

    def test_word_dependence_away_from_identity_is_rejected(self):
        partial = search_partial(_constant_sigma(2, 0), 2, 2)
        e = identity(2)

        def dependent_off_identity(p, w, v):
            return None if w == e else {"w": str(w), "v": str(v)}

        with patch("algebra.realize.word_independence", side_effect=dependent_off_identity):
            with self.assertRaises(CocycleError):
                silvester_realize((0, 0, 0), _constant_sigma(2, 0), _ones(2), partial)

    def test_large_rank_checks_identity_only(self):
        partial = search_partial(_constant_sigma(2, 0), 2, 2)
        with patch.object(settings, "MAX_ENUM_RANK", 1):
            with patch("algebra.realize.word_independence", wraps=word_independence) as checked:
                silvester_realize((0, 0, 0), _constant_sigma(2, 0), _ones(2), partial)
        self.assertEqual({call.args[1] for call in checked.call_args_list}, {identity(2)})
