from unittest import TestCase

from segre_puzzles import lattice
from segre_puzzles.symcore import SymbolicMatrix, VerificationError, kpicture, q_poly, rf_equals, swap_symbols
from segre_puzzles.weyl import grassmannian, parse_shape


class RhatTest(TestCase):

    def setUp(self):
        self.table = kpicture(2)

    def test_equal_parameters(self):
        self.assertTrue(lattice.rhat(self.table.one, self.table).is_identity())

    def test_single_suite(self):
        results = lattice.verify_single_suite()
        self.assertEqual(len(results), 4)
        self.assertTrue(all(result.passed for result in results))

    def test_unitarity(self):
        spectral = self.table.gen('z2') / self.table.gen('z1')
        product = lattice.rhat(spectral, self.table) @ lattice.rhat(1 / spectral, self.table)
        self.assertTrue(product.equals(SymbolicMatrix.identity(self.table, 4)))


class RestrictionTest(TestCase):
    """S-bar restrictions of Gr(1,2), with e = z2/z1."""

    def setUp(self):
        self.table = kpicture(2)
        self.b = self.table.gen('b')
        self.q = self.table.gen('q')
        self.e = self.table.gen('z2') / self.table.gen('z1')
        self.denominator = q_poly(self.table) - self.q ** 2 * self.e

    def test_values(self):
        self.assertTrue(rf_equals(lattice.restrict('01', '01'), self.table.one))
        self.assertTrue(rf_equals(lattice.restrict('10', '01'), self.table.zero))
        self.assertTrue(rf_equals(
            lattice.restrict('01', '10'), self.b * (1 - self.q ** 2) / self.denominator,
        ))
        self.assertTrue(rf_equals(
            lattice.restrict('10', '10'), self.q * (1 - self.e) / self.denominator,
        ))

    def test_two_methods_agree(self):
        for string, point in (('0101', '1010'), ('0011', '1100'), ('1010', '1010')):
            self.assertTrue(rf_equals(
                lattice.restrict_by_substitution(string, point),
                lattice.restrict_by_wiring(string, point),
            ))

    def test_restriction_suite(self):
        for n in (2, 3):
            results = lattice.verify_restriction_suite(n)
            failures = [result.name for result in results if result.asserted and not result.passed]
            self.assertEqual(failures, [])

    def test_omega(self):
        self.assertEqual(lattice.omega(grassmannian(2, 4)), '0011')


class PartitionFunctionTest(TestCase):

    def test_symmetric_in_stabilizer(self):
        shape = grassmannian(1, 3)
        table = kpicture(3)
        function = lattice.partition_function('010', shape)
        self.assertTrue(rf_equals(function, swap_symbols(function, table, 'x1', 'x2')))

    def test_requires_grassmannian(self):
        with self.assertRaises(VerificationError):
            lattice.partition_function('210', parse_shape('1+1+1'))
