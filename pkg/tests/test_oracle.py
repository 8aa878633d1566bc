"""Laurent series arithmetic, the Iwasawa decomposition and the brute-force Hecke operators."""
import math
import random
from unittest import TestCase

from algebra.character import make_character, trivial_character
from algebra.coxeter import enumerate_w, identity, simple_reflection
from algebra.errors import DomainError, ParameterMismatchError, PrecisionError, ResourceBoundError
from algebra.finite_field import get_field
from algebra.oracle.compare import compare_closed_form, coset_representatives, hecke_bruteforce
from algebra.oracle.decompose import decompose_with_retry, evaluate_f, iwasawa_decompose
from algebra.oracle.group import (
    constant,
    from_entries,
    identity_element,
    nu,
    perm_matrix,
    s_element,
    u_element,
    u_inverse_element,
)
from algebra.oracle.identities import random_element, run_identity_checks
from algebra.oracle.laurent import LaurentScalar
from algebra.psmod import Generator, operator_matrix
from algebra.scalars import Scalar


class LaurentScalarTests(TestCase):

    def setUp(self):
        self.fq = get_field(3)
        self.one = LaurentScalar.one(self.fq)
        self.x = LaurentScalar.uniformizer(self.fq)

    def test_series_inverse(self):
        a = self.one + self.x
        product = a * a.inverse(6)
        self.assertTrue(product.agrees_with(self.one))
        self.assertEqual(product.prec, 6)

    def test_monomial_inverse_is_exact(self):
        a = LaurentScalar.monomial(self.fq, self.fq.gen_power(1), -2)
        inverse = a.inverse(4)
        self.assertTrue(inverse.is_exact())
        self.assertEqual(inverse.valuation(), 2)
        self.assertTrue((a * inverse - self.one).is_exact_zero())

    def test_precision_truncates(self):
        a = LaurentScalar.make(self.fq, {0: self.fq.one(), 5: self.fq.one()}, prec=3)
        self.assertEqual(set(a.terms), {0})
        self.assertEqual((a - self.one).is_zero_to_precision(), True)

    def test_valuation(self):
        self.assertEqual(LaurentScalar.zero(self.fq).valuation(), math.inf)
        self.assertEqual((self.x * self.x + self.x).valuation(), 1)
        with self.assertRaises(PrecisionError):
            LaurentScalar.make(self.fq, {}, prec=4).valuation()

    def test_errors(self):
        with self.assertRaises(DomainError):
            LaurentScalar.zero(self.fq).inverse(4)
        with self.assertRaises(ParameterMismatchError):
            self.one + LaurentScalar.one(get_field(2))


class GroupTests(TestCase):

    def setUp(self):
        self.fq = get_field(3)

    def test_u_inverse(self):
        for d in (1, 2):
            product = u_element(self.fq, d) * u_inverse_element(self.fq, d)
            self.assertTrue(product.agrees_with(identity_element(self.fq, d)))

    def test_determinants(self):
        minus_one = LaurentScalar.constant(self.fq, -self.fq.one())
        self.assertTrue(s_element(self.fq, 2, 1).determinant().agrees_with(minus_one))
        self.assertEqual(u_element(self.fq, 2).determinant().valuation(), 1)

    def test_permutation_matrix_convention(self):
        w = simple_reflection(2, 2) * simple_reflection(2, 1)
        product = perm_matrix(self.fq, simple_reflection(2, 2)) * perm_matrix(self.fq, simple_reflection(2, 1))
        self.assertTrue(product.agrees_with(perm_matrix(self.fq, w)))


class DecompositionTests(TestCase):

    def setUp(self):
        self.fq = get_field(3)

    def test_iwahori_element(self):
        x = nu(self.fq, 2, 1, constant(self.fq, self.fq.one()))
        found = iwasawa_decompose(x, 8)
        self.assertEqual(found.w, identity(2))
        self.assertTrue(found.recompose().agrees_with(x))

    def test_permutation(self):
        for w in enumerate_w(2):
            found = iwasawa_decompose(perm_matrix(self.fq, w), 8)
            self.assertEqual(found.w, w)
            self.assertTrue(found.p.is_upper_unipotent())

    def test_reflection_conjugated_unipotent(self):
        s = s_element(self.fq, 1, 1)
        for a in self.fq.units():
            x = s * nu(self.fq, 1, 1, constant(self.fq, a)) * s
            found = iwasawa_decompose(x, 8)
            self.assertEqual(found.w, simple_reflection(1, 1))
            self.assertTrue(found.recompose().agrees_with(x))
            self.assertTrue(found.i.in_pro_p_iwahori())

    def test_random_round_trip(self):
        rng = random.Random(11)
        checked = 0
        while checked < 20:
            x = random_element(self.fq, 2, rng)
            if x.determinant().is_exact_zero():
                continue
            found = decompose_with_retry(x, 8)
            self.assertTrue(found.recompose().agrees_with(x))
            self.assertTrue(found.p.is_upper_triangular())
            checked += 1

    def test_singular(self):
        zero = LaurentScalar.zero(self.fq)
        one = LaurentScalar.one(self.fq)
        with self.assertRaises(DomainError):
            iwasawa_decompose(from_entries(self.fq, [[one, one], [zero, zero]]), 8)

    def test_evaluate_f_on_permutations(self):
        c = trivial_character(2, 3, 1)
        for w in enumerate_w(2):
            x = perm_matrix(self.fq, w)
            self.assertEqual(evaluate_f(c, w, x), Scalar.one(c.ctx))
            if w != identity(2):
                self.assertTrue(evaluate_f(c, identity(2), x).is_zero())


class BruteForceTests(TestCase):

    def test_coset_count(self):
        c = trivial_character(1, 3, 1)
        self.assertEqual(len(coset_representatives(c, Generator.s(1))), 3)
        self.assertEqual(len(coset_representatives(c, Generator.u())), 1)

    def test_column_matches_closed_form(self):
        c = make_character((0, 1), (-1, 1), (1, 0), 3, 1)
        closed = operator_matrix(c, Generator.s(1))
        basis = enumerate_w(1)
        for col, w in enumerate(basis):
            column = hecke_bruteforce(c, Generator.s(1), w, 8)
            for row, v in enumerate(basis):
                self.assertEqual(column[v], closed[row][col], (w, v))

    def test_compare_small_grid(self):
        characters = [
            trivial_character(1, 2, 1),
            trivial_character(1, 3, 1),
            make_character((0, 1), (1, -1), (1, 0), 3, 2),
            make_character((0, 1, 0), (0, 0, 0), (0, 0, 0), 3, 1),
        ]
        for c in characters:
            report = compare_closed_form(c, 8)
            self.assertTrue(report.ok, report.mismatches[:3])
            self.assertGreater(report.matches, 0)

    def test_budget(self):
        with self.assertRaises(ResourceBoundError):
            compare_closed_form(trivial_character(3, 2, 1))
        with self.assertRaises(ResourceBoundError):
            compare_closed_form(trivial_character(1, 7, 1))


class IdentityCheckTests(TestCase):

    def test_identities_hold(self):
        for d, q in ((1, 3), (2, 2)):
            for report in run_identity_checks(d, q, samples=10, seed=3, precision=8):
                self.assertTrue(report.ok, (report.name, report.failures[:3]))
                self.assertGreater(report.checked, 0)
