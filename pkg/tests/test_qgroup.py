from unittest import TestCase

from segre_puzzles import qgroup
from segre_puzzles.symcore import SegreError, q_poly, rf_equals


class HopfStructureTest(TestCase):

    def test_coproduct(self):
        self.assertEqual(qgroup.coproduct(('E', 0)), [(('K1', 0), ('E', 0)), (('E', 0), None)])
        self.assertEqual(qgroup.coproduct(('F', 1)), [(None, ('F', 1)), (('F', 1), ('K2inv', 1))])
        self.assertEqual(qgroup.coproduct(('K2', 2)), [(('K2', 2), ('K2', 2))])

    def test_counit(self):
        self.assertEqual(qgroup.counit(('E', 1)), 0)
        self.assertEqual(qgroup.counit(('K1', 1)), 1)

    def test_antipode(self):
        self.assertEqual(qgroup.antipode(('K1', 0)), [(1, (('K1inv', 0),))])
        self.assertEqual(qgroup.antipode(('F', 2)), [(-1, (('F', 2), ('K2', 2)))])

    def test_hopf_axioms(self):
        for color in ('g', 'r', 'b'):
            for result in qgroup.check_hopf(color):
                self.assertTrue(result.passed, result.detail)


class RepresentationTest(TestCase):

    def setUp(self):
        self.variables = qgroup.table()
        self.z = self.variables.gen('z1')

    def test_images(self):
        images = qgroup.rep('g', self.z)
        self.assertEqual(len(images), 18)
        self.assertTrue((images['K1', 0] @ images['K1inv', 0]).is_identity())

    def test_parameters(self):
        values = qgroup.parameters()
        self.assertEqual(len(values), 9)
        expected = q_poly(self.variables) / self.variables.gen('q') ** 2
        self.assertTrue(rf_equals(values[0, 1] * values[1, 0], expected))

    def test_cartan_relations(self):
        for color in ('g', 'r', 'b'):
            results = qgroup.check_algebra_relations(qgroup.rep(color, self.z), color)
            self.assertTrue(results[0].passed, results[0].detail)
            self.assertTrue(results[1].passed, results[1].detail)

    def test_green_relations(self):
        results = qgroup.check_algebra_relations(qgroup.rep('g', self.z), 'g')
        self.assertTrue(results[2].passed, results[2].detail)
        self.assertTrue(results[4].passed, results[4].detail)

    def test_red_commutators(self):
        results = qgroup.check_algebra_relations(qgroup.rep('r', self.z), 'r')
        self.assertTrue(results[4].passed, results[4].detail)

    def test_unknown_color(self):
        with self.assertRaises(SegreError):
            qgroup.rep('x', self.z)
        with self.assertRaises(SegreError):
            qgroup.rbar('gx', self.z)


class IntertwinerTest(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.results = qgroup.check_intertwiners()

    def test_every_intertwiner_holds(self):
        for result in self.results:
            self.assertTrue(result.passed, '{0} {1}'.format(result.name, result.detail))

    def test_counts(self):
        self.assertEqual(len(self.results), 132)

    def test_single_color_pairs_hold(self):
        for pair in qgroup.SINGLE_PAIRS:
            named = [result for result in self.results if result.name.startswith('intertwiner {0} '.format(pair))]
            self.assertEqual(len(named), 12)
            self.assertFalse(any(result.asserted for result in named), pair)
            self.assertTrue(all(result.passed for result in named), pair)

    def test_mixed_pairs_are_asserted(self):
        asserted = [result for result in self.results if result.asserted]
        self.assertEqual(len(asserted), 132 - 36)


class QgroupSuiteTest(TestCase):

    def test_suite_holds(self):
        results = qgroup.qgroup_suite()
        self.assertTrue(results)
        failures = [result.name for result in results if result.asserted and not result.passed]
        self.assertEqual(failures, [])

    def test_serre_relations(self):
        z = qgroup.table().gen('z1')
        for color in ('g', 'r', 'b'):
            results = qgroup.check_algebra_relations(qgroup.rep(color, z), color)
            self.assertEqual(len(results), 7)
            for result in results[5:]:
                self.assertTrue(result.asserted, result.name)
                self.assertTrue(result.passed, '{0} {1}'.format(result.name, result.detail))
