import json
from io import StringIO
from unittest import TestCase
from unittest.mock import patch

from segre_puzzles import config
from segre_puzzles.cli import run
from segre_puzzles.symcore import kpicture, parse_rational, rf_equals


def run_cli(*argv):
    with patch('sys.stdout', new_callable=StringIO) as stdout, patch('sys.stderr', new_callable=StringIO):
        code = run(list(argv))
    return code, stdout.getvalue()


class ClassVerbTest(TestCase):

    def setUp(self):
        self.table = kpicture(2)
        self.q = self.table.gen('q')
        self.e = self.table.gen('z2') / self.table.gen('z1')

    def test_motivic_class(self):
        code, output = run_cli('--format', 'json', 'class', '--shape', '1,2', '--lambda', '01', '--beta', '1')
        self.assertEqual(code, config.EXIT_OK)
        restrictions = json.loads(output)['restrictions']
        self.assertEqual(restrictions['01'], '1')
        value = parse_rational(restrictions['10'], self.table)
        self.assertTrue(rf_equals(value, (1 - self.q ** 2) / (1 - self.q ** 2 * self.e)))

    def test_text_output(self):
        code, output = run_cli('class', '--shape', '1,2', '--lambda', '10')
        self.assertEqual(code, config.EXIT_OK)
        self.assertIn('restrictions:', output)
        self.assertIn('01: 0', output)

    def test_bad_string(self):
        code, _ = run_cli('class', '--shape', '1,2', '--lambda', '011')
        self.assertEqual(code, config.EXIT_USAGE)

    def test_bad_arguments(self):
        code, _ = run_cli('class', '--shape', '1,2')
        self.assertEqual(code, config.EXIT_USAGE)


class MultiplyVerbTest(TestCase):

    def test_both_methods(self):
        code, output = run_cli(
            '--format', 'json', 'multiply', '--shape', '1,2', '--lambda', '01', '--mu', '01', '--method', 'both',
        )
        self.assertEqual(code, config.EXIT_OK)
        constants = json.loads(output)['constants']
        self.assertEqual(constants['01'], '1')

    def test_unhomogenized(self):
        code, output = run_cli(
            '--format', 'json', 'multiply', '--shape', '1,2', '--lambda', '10', '--mu', '10', '--unhomogenized',
        )
        self.assertEqual(code, config.EXIT_OK)
        table = kpicture(2)
        value = parse_rational(json.loads(output)['constants']['10'], table)
        e = table.gen('z2') / table.gen('z1')
        q = table.gen('q')
        big_q = q ** 2 + table.gen('b') - q ** 2 * table.gen('b')
        self.assertTrue(rf_equals(value, (1 - e) / (big_q - q ** 2 * e)))


class PuzzlesVerbTest(TestCase):

    def test_counts(self):
        code, output = run_cli(
            '--format', 'json', 'puzzles', '--lambda', '1001', '--mu', '0011', '--nu', '1010', '--render',
        )
        self.assertEqual(code, config.EXIT_OK)
        payload = json.loads(output)['1010']
        self.assertEqual(payload['count'], 3)
        self.assertEqual(len(payload['puzzles']), 3)
        self.assertIn('diagram', payload['puzzles'][0])

    def test_mismatched_sides(self):
        code, _ = run_cli('puzzles', '--lambda', '01', '--mu', '0011')
        self.assertEqual(code, config.EXIT_USAGE)


class LatticeVerbTest(TestCase):

    def test_point(self):
        code, output = run_cli('--format', 'json', 'lattice', '--lambda', '01', '--point', '01')
        self.assertEqual(code, config.EXIT_OK)
        payload = json.loads(output)
        self.assertEqual(payload['restrictions'], {'01': '1'})
        self.assertNotIn('partition_function', payload)

    def test_all_points(self):
        code, output = run_cli('--format', 'json', 'lattice', '--lambda', '10')
        self.assertEqual(code, config.EXIT_OK)
        payload = json.loads(output)
        self.assertEqual(payload['restrictions']['01'], '0')
        self.assertIn('partition_function', payload)


class VerifyVerbTest(TestCase):

    def test_passing_suite(self):
        code, output = run_cli('verify', '--suite', 'equal')
        self.assertEqual(code, config.EXIT_OK)
        self.assertIn('suite equal: 3/3 passed', output)

    def test_json_report(self):
        code, output = run_cli('--format', 'json', 'verify', '--suite', 'single-number')
        self.assertEqual(code, config.EXIT_OK)
        report = json.loads(output)
        self.assertTrue(report['passed'])
        self.assertEqual(report['suite'], 'single-number')

    def test_unknown_suite(self):
        code, _ = run_cli('verify', '--suite', 'nothing')
        self.assertEqual(code, config.EXIT_USAGE)
