from unittest import TestCase

from segre_puzzles import classes
from segre_puzzles.symcore import VerificationError, kpicture, q_poly, rf_equals
from segre_puzzles.weyl import LARGEST, all_strings, grassmannian, parse_shape


class Grassmannian12Test(TestCase):
    """Gr(1,2) classes and products, with e = z2/z1."""

    def setUp(self):
        self.shape = grassmannian(1, 2)
        self.table = kpicture(2)
        self.b = self.table.gen('b')
        self.q = self.table.gen('q')
        self.e = self.table.gen('z2') / self.table.gen('z1')
        self.denominator = q_poly(self.table) - self.q ** 2 * self.e
        self.basis = classes.build_basis(self.shape)

    def test_basis(self):
        top = self.basis['10']
        bottom = self.basis['01']
        self.assertTrue(rf_equals(top['01'], self.table.zero))
        self.assertTrue(rf_equals(top['10'], self.q * (1 - self.e) / self.denominator))
        self.assertTrue(rf_equals(bottom['01'], self.table.one))
        self.assertTrue(rf_equals(bottom['10'], self.b * (1 - self.q ** 2) / self.denominator))

    def test_square_of_identity_class(self):
        constants = classes.structure_constants('01', '01', self.basis)
        self.assertTrue(rf_equals(constants['01'], self.table.one))
        self.assertTrue(rf_equals(constants['10'], self.b * self.q * (self.q ** 2 - 1) / self.denominator))

    def test_square_of_top_class(self):
        constants = classes.structure_constants('10', '10', self.basis)
        self.assertTrue(rf_equals(constants['01'], self.table.zero))
        self.assertTrue(rf_equals(constants['10'], self.q * (1 - self.e) / self.denominator))

    def test_mixed_product(self):
        constants = classes.structure_constants('10', '01', self.basis)
        self.assertTrue(rf_equals(constants['10'], self.b * (1 - self.q ** 2) / self.denominator))

    def test_unhomogenize(self):
        constants = classes.structure_constants('10', '10', self.basis)
        plain = classes.unhomogenize(constants['10'], '10', '10', '10', self.table)
        self.assertTrue(rf_equals(plain, (1 - self.e) / self.denominator))

    def test_motivic_specialization(self):
        segre = classes.specialize_class(classes.unhomogenized(self.basis)['01'], {'b': 1})
        expected = (1 - self.q ** 2) / (1 - self.q ** 2 * self.e)
        self.assertTrue(rf_equals(segre['10'], expected))

    def test_exchange_relations(self):
        for string in all_strings(self.shape):
            for point in all_strings(self.shape):
                self.assertTrue(classes.exchange_relation_holds(self.basis, string, point, 1))

    def test_bad_index(self):
        with self.assertRaises(VerificationError):
            classes.apply_partial(2, self.basis['01'])


class BasisTest(TestCase):

    def test_diagonal_entries(self):
        shape = grassmannian(2, 4)
        basis = classes.build_basis(shape)
        table = kpicture(4)
        for string in all_strings(shape):
            self.assertTrue(rf_equals(basis[string][string], classes.diagonal_entry(string, table)))

    def test_path_independence(self):
        for text in ('1,3', '1+1+1'):
            shape = parse_shape(text)
            smallest = classes.build_basis(shape)
            largest = classes.build_basis(shape, LARGEST)
            for string, cls in smallest.items():
                self.assertTrue(cls.equals(largest[string]))

    def test_triangularity(self):
        basis = classes.build_basis(grassmannian(1, 3))
        self.assertFalse(basis['010']['001'])
        self.assertFalse(basis['100']['010'])
        self.assertTrue(basis['001']['100'])

    def test_chern_classes(self):
        table = kpicture(2)
        chern = classes.chern_basis(grassmannian(1, 2))
        e = table.gen('z2') / table.gen('z1')
        self.assertTrue(rf_equals(chern['10']['10'], (1 - e) / table.gen('b')))
        self.assertTrue(rf_equals(chern['01']['10'], 1 - table.gen('q') ** 2))
        expected = (q_poly(table) - table.gen('q') ** 2 / e) / table.gen('b')
        self.assertTrue(rf_equals(chern['01']['01'], expected))


class OperatorTest(TestCase):

    def test_operator_suite(self):
        for text in ('1,3', '1+1+1'):
            results = classes.operator_suite(parse_shape(text), trials=2)
            self.assertTrue(results)
            self.assertEqual([result.name for result in results if not result.passed], [])
