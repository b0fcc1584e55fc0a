from unittest import TestCase

from segre_puzzles import rmatrices
from segre_puzzles.symcore import SegreError, SymbolicMatrix, q_poly, rf_equals


def create_equation_tests(equation, count):
    class EquationTests(TestCase):

        def test_every_equation_holds(self):
            """Each identity of the family holds symbolically."""
            for index in range(count):
                result = equation(index)
                self.assertTrue(result.passed, '{0} {1}'.format(result.name, result.detail))

        def test_names_are_distinct(self):
            names = [equation(index).name for index in range(count)]
            self.assertEqual(len(set(names)), count)

    return EquationTests


YangBaxterTests = create_equation_tests(rmatrices.ybe_equation, len(rmatrices.YBE_TRIPLES))
BootstrapTests = create_equation_tests(rmatrices.bootstrap_equation, len(rmatrices.BOOTSTRAP))
UnitarityTests = create_equation_tests(rmatrices.unitarity_equation, len(rmatrices.UNITARITY))
EqualParameterTests = create_equation_tests(rmatrices.equal_equation, len(rmatrices.EQUAL))


class DisplayTest(TestCase):

    def setUp(self):
        self.variables = rmatrices.table()
        self.argument = rmatrices.spectral('z2/z1')

    def test_counts(self):
        self.assertEqual(len(rmatrices.YBE_TRIPLES), 24)
        self.assertEqual(len(rmatrices.BOOTSTRAP), 12)
        self.assertEqual(len(rmatrices.UNITARITY), 6)
        self.assertEqual(len(rmatrices.EQUAL), 3)

    def test_shapes(self):
        for pair in rmatrices.COLOR_PAIRS:
            self.assertEqual(rmatrices.build(pair, self.argument).shape, (9, 9))
        self.assertEqual(rmatrices.u_matrix().shape, (3, 9))
        self.assertEqual(rmatrices.d_matrix().shape, (9, 3))

    def test_unknown_pair(self):
        with self.assertRaises(SegreError):
            rmatrices.build('gx', self.argument)

    def test_inverted_pair(self):
        product = rmatrices.build('rg', self.argument) @ rmatrices.build('gr', 1 / self.argument)
        self.assertTrue(product.equals(SymbolicMatrix.identity(self.variables, 9)))

    def test_gr_display_is_the_rhombus_catalog(self):
        q = self.variables.gen('q')
        matrix = rmatrices.build('gr', self.argument / q ** 2)
        one, ten = rmatrices.POSITION['1', '1'], rmatrices.POSITION['10', '10']
        self.assertTrue(rf_equals(matrix.entry(one, one), self.variables.one))
        self.assertTrue(rf_equals(matrix.entry(ten, ten), q_poly(self.variables)))

    def test_rhat_block(self):
        results = rmatrices.verify_rhat_block()
        self.assertEqual(len(results), 3)
        for result in results:
            self.assertTrue(result.passed, result.detail)

    def test_single_color_argument(self):
        """R_{c,c}(w) reads the single-color weights at z = w."""
        for pair in ('gg', 'rr', 'bb'):
            expected = rmatrices.display(pair).substitute({'z': self.argument})
            self.assertTrue(rmatrices.build(pair, self.argument).equals(expected), pair)
            flipped = rmatrices.display(pair).substitute({'z': 1 / self.argument})
            self.assertFalse(rmatrices.build(pair, self.argument).equals(flipped), pair)

    def test_single_numbers(self):
        self.assertTrue(all(result.passed for result in rmatrices.verify_single_number_props()))


class FactorizationTest(TestCase):

    def test_factorization(self):
        results = rmatrices.verify_factorization()
        asserted = [result for result in results if result.asserted]
        self.assertEqual(len(asserted), 3)
        self.assertTrue(all(result.passed for result in asserted))

    def test_rank(self):
        q = rmatrices.table().gen('q')
        self.assertEqual(rmatrices.build('gr', 1 / q ** 2).rank(), 3)

    def test_determinants_are_recorded(self):
        results = rmatrices.determinant_report()
        self.assertEqual(len(results), len(rmatrices.COLOR_PAIRS))
        self.assertFalse(any(result.asserted for result in results))

