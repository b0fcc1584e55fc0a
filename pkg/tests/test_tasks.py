from unittest import TestCase

from segre_puzzles import config, suites, tasks
from segre_puzzles.reports import EquationResult, SuiteReport, check
from segre_puzzles.symcore import SegreError


class SuiteItemsTest(TestCase):

    def test_rmatrix_suites(self):
        self.assertEqual(len(suites.suite_items(config.SUITE_YBE)), 24)
        self.assertEqual(len(suites.suite_items(config.SUITE_BOOTSTRAP)), 12)
        self.assertEqual(len(suites.suite_items(config.SUITE_UNITARITY)), 6)
        self.assertEqual(len(suites.suite_items(config.SUITE_EQUAL)), 3)

    def test_all_concatenates(self):
        total = sum(len(suites.suite_items(name, 3)) for name in config.SUITES)
        self.assertEqual(len(suites.suite_items(config.SUITE_ALL, 3)), total)

    def test_operator_shapes(self):
        shapes = [str(shape) for shape in suites.operator_shapes(3)]
        self.assertEqual(shapes, ['1,2', '1,3', '2,3', '1+1+1'])

    def test_gkm_items(self):
        labels = [label for label, _ in suites.suite_items(config.SUITE_GKM, 3, ('1,2',))]
        self.assertEqual(labels, [
            'hand check', '1,2', 'solve localization 1,2', 'piece localization n=2', 'piece localization n=3',
            'puzzle localization n=1', 'puzzle localization n=2', 'puzzle localization n=3',
        ])

    def test_unknown(self):
        with self.assertRaises(SegreError):
            suites.suite_items('nothing')


class RunSuiteTest(TestCase):

    def test_in_process(self):
        report = tasks.run_suite(config.SUITE_EQUAL, workers=1)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.results), 3)

    def test_fan_out_keeps_order(self):
        local = tasks.run_suite(config.SUITE_UNITARITY, workers=1)
        fanned = tasks.run_suite(config.SUITE_UNITARITY, workers=2)
        self.assertEqual([result.name for result in fanned.results], [result.name for result in local.results])
        self.assertTrue(fanned.passed)

    def test_task_payload(self):
        payload = tasks.run_suite_item(config.SUITE_EQUAL, 0, config.SUITE_MAX_N, list(config.DEFAULT_GKM_SHAPES))
        self.assertEqual(len(payload), 1)
        self.assertTrue(payload[0]['passed'])


class ReportTest(TestCase):

    def test_recorded_results_do_not_fail(self):
        report = SuiteReport('sample')
        report.extend([check('holds', True), check('noted', False, 'value', asserted=False)])
        self.assertTrue(report.passed)
        self.assertEqual(report.failures, [])
        self.assertEqual(report.as_dict()['total'], 1)

    def test_failure(self):
        report = SuiteReport('sample', [EquationResult('broken', False, 'detail')])
        self.assertFalse(report.passed)
        self.assertEqual(report.failures[0].name, 'broken')
