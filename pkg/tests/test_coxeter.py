"""Permutations, lengths, ubar powers and reduced words."""
from unittest import TestCase

from algebra.coxeter import (
    Permutation,
    ascent_set,
    compose,
    enumerate_w,
    identity,
    length,
    longest_element,
    mu,
    parse_permutation,
    reduced_word,
    reduced_words,
    simple_reflection,
    ubar,
    ubar_split,
)
from algebra.errors import PreconditionError, ResourceBoundError, SizeMismatchError


class GroupOpsTests(TestCase):
    """Composition follows (a*b)(x) = a(b(x))."""

    def test_identity_is_neutral(self):
        w = parse_permutation("2 0 1")
        self.assertEqual(compose(identity(2), w), w)
        self.assertEqual(compose(w, identity(2)), w)

    def test_simple_reflection_is_involution(self):
        s1 = simple_reflection(1, 1)
        self.assertTrue((s1 * s1).is_identity())

    def test_ubar_times_s1_is_s2(self):
        self.assertEqual(ubar(2) * simple_reflection(2, 1), simple_reflection(2, 2))

    def test_inverse(self):
        w = parse_permutation("2 0 3 1")
        self.assertTrue((w * w.inverse()).is_identity())

    def test_rank_mismatch(self):
        with self.assertRaises(SizeMismatchError):
            compose(identity(1), identity(2))

    def test_rejects_non_permutation(self):
        with self.assertRaises(PreconditionError):
            Permutation((0, 0, 1))
        with self.assertRaises(PreconditionError):
            parse_permutation("0 x 1")


class LengthTests(TestCase):

    def test_lengths(self):
        self.assertEqual(length(identity(3)), 0)
        self.assertEqual(length(ubar(2)), 2)
        for d in range(1, 5):
            self.assertEqual(length(longest_element(d)), d * (d + 1) // 2)


class UbarTests(TestCase):

    def test_powers(self):
        self.assertTrue(ubar(2, 0).is_identity())
        self.assertEqual(ubar(2, 1).images, (2, 0, 1))
        self.assertTrue(ubar(3, 4).is_identity())
        self.assertEqual(ubar(3, -1) * ubar(3), identity(3))

    def test_mu(self):
        for d in range(1, 4):
            for i in range(d + 1):
                self.assertEqual(mu(ubar(d, i)), i)
        self.assertEqual(mu(simple_reflection(2, 2)), 1)
        self.assertEqual(mu(simple_reflection(2, 1)), 0)

    def test_ubar_split(self):
        for w in enumerate_w(3):
            head, j = ubar_split(w)
            self.assertEqual(head(3), 3)
            self.assertEqual(head * ubar(3, j), w)


class ReducedWordTests(TestCase):

    def test_canonical_words(self):
        self.assertEqual(reduced_word(identity(2)).letters, ())
        self.assertEqual(reduced_word(simple_reflection(1, 1)).letters, (1,))
        self.assertEqual(reduced_word(ubar(2)).letters, (2, 1))

    def test_words_are_reduced_and_evaluate_back(self):
        for w in enumerate_w(3):
            word = reduced_word(w)
            self.assertEqual(len(word), length(w))
            self.assertEqual(word.evaluate(), w)

    def test_all_reduced_words_of_longest_element(self):
        words = reduced_words(longest_element(2))
        self.assertEqual([word.letters for word in words], [(1, 2, 1), (2, 1, 2)])


class EnumerationTests(TestCase):

    def test_sizes(self):
        self.assertEqual(enumerate_w(1), [identity(1), simple_reflection(1, 1)])
        self.assertEqual(len(enumerate_w(2)), 6)
        elements = enumerate_w(3)
        self.assertEqual(len(elements), 24)
        self.assertTrue(elements[0].is_identity())

    def test_ascent_set_is_half_of_w(self):
        self.assertEqual(len(ascent_set(2)), 3)
        self.assertTrue(all(w.has_ascent(2) for w in ascent_set(2)))

    def test_rank_bound(self):
        with self.assertRaises(ResourceBoundError):
            enumerate_w(50)
