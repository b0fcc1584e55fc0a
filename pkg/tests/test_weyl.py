from unittest import TestCase

from segre_puzzles.symcore import ShapeError
from segre_puzzles.weyl import (
    LARGEST,
    all_strings,
    apply_r,
    bruhat_leq,
    check_string,
    descent_path,
    grassmannian,
    length,
    longest_string,
    parse_shape,
    positive_roots,
    string_to_permutation,
)


class ShapeTest(TestCase):

    def test_grassmannian(self):
        shape = parse_shape('2,4')
        self.assertEqual(shape, grassmannian(2, 4))
        self.assertEqual(shape.blocks, (2, 2))
        self.assertEqual(str(shape), '2,4')
        self.assertEqual(longest_string(shape), '1100')

    def test_partial_flag(self):
        shape = parse_shape('1+1+1')
        self.assertEqual(shape.d, 2)
        self.assertEqual(longest_string(shape), '210')
        self.assertEqual(len(all_strings(shape)), 6)
        self.assertEqual(len(positive_roots(shape)), 3)

    def test_invalid(self):
        for text in ('3,2', 'a,b', '0+2', '4'):
            with self.assertRaises(ShapeError):
                parse_shape(text)

    def test_check_string(self):
        shape = grassmannian(1, 3)
        self.assertEqual(check_string('010', shape), '010')
        with self.assertRaises(ShapeError):
            check_string('011', shape)


class StringTest(TestCase):

    def test_all_strings_order(self):
        self.assertEqual(all_strings(grassmannian(1, 3)), ('001', '010', '100'))
        self.assertEqual(len(all_strings(grassmannian(2, 4))), 6)
        self.assertEqual(all_strings(grassmannian(0, 2)), ('00',))

    def test_length(self):
        self.assertEqual(length('0011'), 0)
        self.assertEqual(length('1100'), 4)
        self.assertEqual(length('210'), 3)

    def test_apply_r(self):
        self.assertEqual(apply_r(1, '01'), '10')
        with self.assertRaises(ShapeError):
            apply_r(2, '01')

    def test_descent_path(self):
        self.assertEqual(descent_path('0011'), [2, 3, 1, 2])
        self.assertEqual(descent_path('1100'), [])
        path = descent_path('0011', LARGEST)
        self.assertEqual(len(path), 4)
        current = '1100'
        for step in path:
            current = apply_r(step, current)
        self.assertEqual(current, '0011')

    def test_bruhat(self):
        self.assertTrue(bruhat_leq('01', '10'))
        self.assertFalse(bruhat_leq('10', '01'))
        self.assertTrue(bruhat_leq('0101', '1010'))
        self.assertFalse(bruhat_leq('1001', '0110'))
        self.assertFalse(bruhat_leq('0110', '1001'))

    def test_permutation(self):
        self.assertEqual(string_to_permutation('01'), [1, 2])
        self.assertEqual(string_to_permutation('10'), [2, 1])
        self.assertEqual(string_to_permutation('0101'), [1, 3, 2, 4])
