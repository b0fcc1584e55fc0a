from unittest import TestCase

from segre_puzzles import config, puzzles
from segre_puzzles.classes import build_basis, structure_constants
from segre_puzzles.symcore import SegreError, kpicture, q_poly, rf_equals
from segre_puzzles.weyl import all_strings, grassmannian


class EnumerationTest(TestCase):

    def test_identity_puzzle(self):
        fillings = puzzles.enumerate_puzzles('01', '01', '01')
        self.assertEqual(len(fillings), 1)
        self.assertTrue(rf_equals(puzzles.fugacity(fillings[0]), kpicture(2).one))

    def test_omega_puzzle(self):
        fillings = puzzles.enumerate_puzzles('0011', '0011', '0011')
        self.assertEqual(len(fillings), 1)
        self.assertTrue(rf_equals(puzzles.fugacity(fillings[0]), kpicture(4).one))

    def test_no_puzzle(self):
        self.assertEqual(puzzles.enumerate_puzzles('01', '10', '01'), [])

    def test_three_puzzles(self):
        fillings = puzzles.enumerate_puzzles('1001', '0011', '1010')
        self.assertEqual(len(fillings), 3)
        self.assertEqual(len({puzzles.render(filling) for filling in fillings}), 3)

    def test_only_puzzle_triangles(self):
        for filling in puzzles.enumerate_puzzles('0101', '0101', '1010'):
            for _, labels in filling.triangles():
                self.assertEqual(puzzles.UP_TRIANGLES[labels], 'unit')


class ConstantTest(TestCase):
    """Gr(1,2) puzzle sums, with e = z2/z1."""

    def setUp(self):
        self.table = kpicture(2)
        self.b = self.table.gen('b')
        self.q = self.table.gen('q')
        self.e = self.table.gen('z2') / self.table.gen('z1')
        self.denominator = q_poly(self.table) - self.q ** 2 * self.e

    def test_square(self):
        self.assertTrue(rf_equals(
            puzzles.puzzle_constant('01', '01', '10'),
            self.b * self.q * (self.q ** 2 - 1) / self.denominator,
        ))
        self.assertTrue(rf_equals(puzzles.puzzle_constant('01', '01', '01'), self.table.one))

    def test_mixed(self):
        self.assertTrue(rf_equals(
            puzzles.puzzle_constant('01', '10', '10'),
            self.b * (1 - self.q ** 2) / self.denominator,
        ))

    def test_empty_grassmannian(self):
        self.assertTrue(rf_equals(puzzles.puzzle_constant('00', '00', '00'), self.table.one))

    def test_against_solve(self):
        shape = grassmannian(1, 3)
        basis = build_basis(shape)
        for lam in all_strings(shape):
            for mu in all_strings(shape):
                solved = structure_constants(lam, mu, basis)
                counted = puzzles.puzzle_constants(shape, lam, mu)
                for nu in all_strings(shape):
                    self.assertTrue(rf_equals(solved[nu], counted[nu]))

    def test_oracle_suite(self):
        results = puzzles.oracle_suite(3)
        self.assertTrue(all(result.passed for result in results))


class CatalogTest(TestCase):

    def test_beta_one_table(self):
        table = kpicture(1)
        q = table.gen('q')
        z = table.gen('z')
        values = puzzles.beta_one_table()
        self.assertTrue(rf_equals(values['beta'], (1 - q ** 2) / (1 - q ** 2 * z)))
        self.assertTrue(rf_equals(values['beta_z'], (1 - q ** 2) * z / (1 - q ** 2 * z)))
        self.assertTrue(rf_equals(values['cross'], q * (1 - z) / (1 - q ** 2 * z)))
        self.assertTrue(rf_equals(values['merge'], q * (q ** 2 - 1) / (1 - q ** 2 * z)))
        self.assertTrue(rf_equals(values['split'], (q ** 2 - 1) * z / (q * (1 - q ** 2 * z))))
        self.assertTrue(rf_equals(values['big_q'], table.one))

    def test_catalog_size(self):
        self.assertEqual(len(puzzles.RHOMBI), 15)
        self.assertEqual(len(puzzles.UP_TRIANGLES), 6)
        self.assertEqual(len(puzzles.DOWN_TRIANGLES), 6)

    def test_certificates(self):
        for picture in (config.PICTURE_K, config.PICTURE_CONNECTIVE):
            self.assertTrue(all(result.passed for result in puzzles.verify_catalog_certificates(picture)))

    def test_connective_entries(self):
        results = puzzles.verify_connective_entries()
        asserted = [result for result in results if result.asserted]
        self.assertEqual(len(asserted), 8)
        for result in asserted:
            self.assertTrue(result.passed, '{0} {1}'.format(result.name, result.detail))

    def test_printed_split_is_recorded(self):
        recorded = [result for result in puzzles.verify_connective_entries() if not result.asserted]
        self.assertEqual([result.name for result in recorded], ['connective split as printed'])
        self.assertFalse(recorded[0].passed)

    def test_positivity_certificate(self):
        filling = puzzles.enumerate_puzzles('01', '01', '10')[0]
        certificate = puzzles.positivity_certificate(filling)
        self.assertEqual(certificate, [(0, 0, ['minus_q', 'P'])])

    def test_positivity_suite(self):
        results = puzzles.positivity_suite(3)
        self.assertTrue(all(result.passed for result in results if result.asserted))


class RenderTest(TestCase):

    def test_round_trip(self):
        for filling in puzzles.enumerate_puzzles('1001', '0011', '1010'):
            self.assertEqual(puzzles.parse(puzzles.render(filling)), filling)

    def test_small_diagram(self):
        filling = puzzles.enumerate_puzzles('01', '01', '01')[0]
        self.assertEqual(len(puzzles.render(filling).splitlines()), 4)

    def test_parse_error(self):
        with self.assertRaises(SegreError):
            puzzles.parse('Z0: 1 0')
