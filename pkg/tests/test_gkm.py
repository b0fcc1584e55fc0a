from unittest import TestCase

from segre_puzzles import gkm
from segre_puzzles.classes import FixedPointClass
from segre_puzzles.puzzles import puzzle_constant
from segre_puzzles.symcore import connective, kpicture, rf_equals
from segre_puzzles.weyl import all_strings, grassmannian, parse_shape


def _failures(results):
    return [result.name for result in results if result.asserted and not result.passed]


class FormalGroupTest(TestCase):

    def setUp(self):
        self.table = connective(3)
        self.b = self.table.gen('b')

    def test_additivity(self):
        total = gkm.formal_add(gkm.x_of_weight(self.table, 1, 2), gkm.x_of_weight(self.table, 2, 3), self.table)
        self.assertTrue(rf_equals(total, gkm.x_of_weight(self.table, 1, 3)))

    def test_inverse(self):
        inverse = gkm.formal_inverse(gkm.x_of_weight(self.table, 1, 3), self.table)
        self.assertTrue(rf_equals(inverse, gkm.x_of_weight(self.table, 3, 1)))

    def test_weight_coefficients(self):
        t1 = self.table.gen('t1')
        self.assertEqual(gkm.x_of_coefficients(self.table, [0, 1, 0]), self.table.gen('t2'))
        self.assertTrue(rf_equals(gkm.x_of_coefficients(self.table, [2, 0, 0]), 2 * t1 - self.b * t1 ** 2))
        self.assertTrue(rf_equals(gkm.x_of_coefficients(self.table, [1, -1, 0]), gkm.x_of_weight(self.table, 1, 2)))
        self.assertFalse(gkm.x_of_coefficients(self.table, [0, 0, 0]))

    def test_weight_and_its_negative(self):
        weight = gkm.x_of_coefficients(self.table, [2, -1, 1])
        negated = gkm.x_of_coefficients(self.table, [-2, 1, -1])
        self.assertFalse(gkm.formal_add(weight, negated, self.table))

    def test_kappa(self):
        self.assertTrue(rf_equals(gkm.kappa(self.table, 1), self.b))
        self.assertFalse(gkm.kappa_pair(self.table, 1))

    def test_formal_group_results(self):
        self.assertEqual(_failures(gkm.formal_group_results(3)), [])


class ConnectiveClassTest(TestCase):

    def setUp(self):
        self.shape = grassmannian(1, 2)
        self.table = connective(2)

    def test_hand_check(self):
        self.assertEqual(_failures(gkm.hand_check_results()), [])

    def test_top_class(self):
        xq = self.table.gen('xq')
        weight = gkm.x_of_weight(self.table, 2, 1)
        top = gkm.connective_basis(self.shape)['10']
        self.assertTrue(rf_equals(top['10'], weight / (1 - xq ** 2 * (1 - weight))))
        self.assertFalse(top['01'])

    def test_operator_relations(self):
        results = gkm.connective_operator_suite(grassmannian(1, 3), trials=1)
        self.assertTrue(results)
        self.assertEqual(_failures(results), [])


class LocalizationTest(TestCase):

    def test_bindings(self):
        bindings = gkm.localization_bindings(2)
        table = kpicture(2)
        self.assertTrue(rf_equals(bindings['t1'], (1 - table.gen('z1')) / table.gen('b')))
        self.assertTrue(rf_equals(bindings['xq'], table.gen('q')))

    def test_position_parameter(self):
        table = connective(2)
        value = gkm.localize_value(gkm.x_of_weight(table, 2, 1), 2)
        k_table = kpicture(2)
        expected = (1 - k_table.gen('z2') / k_table.gen('z1')) / k_table.gen('b')
        self.assertTrue(rf_equals(value, expected))

    def test_classes_localize(self):
        for text in ('1,2', '1,3'):
            self.assertEqual(_failures(gkm.localization_results(parse_shape(text))), [])

    def test_puzzles_localize(self):
        self.assertEqual(_failures(gkm.puzzle_localization_results(2)), [])

    def test_pieces_localize_at_n4(self):
        results = gkm.piece_localization_results(4)
        self.assertEqual(len(results), 6 * 7)
        self.assertEqual(_failures(results), [])

    def test_piecewise_sum_at_n4(self):
        constants = []
        for nu in all_strings(grassmannian(2, 4)):
            expected = puzzle_constant('1010', '0101', nu)
            self.assertTrue(rf_equals(gkm.localized_puzzle_constant('1010', '0101', nu), expected), nu)
            constants.append(expected)
        self.assertTrue(any(constants))

    def test_piecewise_sum_matches_direct_localization(self):
        direct = gkm.localize_value(puzzle_constant('101', '011', '110', 'connective'), 3)
        self.assertTrue(rf_equals(gkm.localized_puzzle_constant('101', '011', '110'), direct))

    def test_solve_constants_localize(self):
        results = gkm.constant_localization_results('1,2')
        self.assertEqual(len(results), 6)
        self.assertEqual(_failures(results), [])
        self.assertEqual(_failures(gkm.constant_localization_results('1,3')), [])


class GkmTest(TestCase):

    def test_ssm(self):
        self.assertEqual(_failures(gkm.ssm_results(grassmannian(1, 2))), [])

    def test_gkm_and_integrality(self):
        results = gkm.gkm_results(grassmannian(1, 2))
        self.assertEqual(_failures(results), [])
        recorded = [result for result in results if not result.asserted]
        self.assertEqual(len(recorded), 2)

    def test_gkm_detects_a_broken_class(self):
        shape = grassmannian(1, 2)
        table = connective(2)
        top = gkm.connective_chern(shape)['10']['10']
        broken = FixedPointClass(shape, table, {'01': table.zero, '10': top + table.one})
        self.assertEqual(gkm.gkm_failures(broken), [('01', 1, 2), ('10', 1, 2)])
