#!/usr/bin/env python3
"""
Tests for the command line surface, the writers, the table API and the
errata table.
"""

import contextlib
import csv
import io
import math
import sys
import unittest
from pathlib import Path

# Add parent directories to path for importing
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from cauchy_engine import api
from cauchy_engine.cli import _attach_values, cli_main
from cauchy_engine.errata import errata_table
from cauchy_engine.errors import DomainError
from cauchy_engine.writer import format_value, to_csv, write_text


def run_cli(*argv):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestWriter(unittest.TestCase):
    """Test deterministic value formatting and CSV layout."""

    def test_format_value(self):
        self.assertEqual(format_value(0.1), '0.10000000000000001')
        self.assertEqual(format_value(True), 'true')
        self.assertEqual(format_value(False), 'false')
        self.assertEqual(format_value(None), '')
        self.assertEqual(format_value(3), '3')
        self.assertEqual(format_value(float('-inf')), '-inf')

    def test_complex_columns_split(self):
        self.assertEqual(to_csv([{'a': 1.5, 'z': 1 + 2j}]), 'a,z_re,z_im\n1.5,1,2\n')

    def test_empty_table_keeps_header(self):
        self.assertEqual(to_csv([], ['x', 'T']), 'x,T\n')

    def test_column_union(self):
        self.assertEqual(to_csv([{'a': 1}, {'b': 2}]), 'a,b\n1,\n,2\n')

    def test_text_report(self):
        buffer = io.StringIO()
        write_text({'pass': True, 'z': 0.5 - 1j}, buffer)
        self.assertEqual(buffer.getvalue(), 'pass: true\nz: 0.5 -1i\n')


class TestTableApi(unittest.TestCase):
    """Test the table helpers behind the subcommands."""

    def test_frange(self):
        xs = api.frange(1.0, 5.0, 0.5)
        self.assertEqual(len(xs), 9)
        self.assertEqual(xs[0], 1.0)
        self.assertAlmostEqual(xs[-1], 5.0, delta=1e-12)
        with self.assertRaises(DomainError):
            api.frange(1.0, 5.0, 0.0)

    def test_table_summary_first_maximum(self):
        summary = api.table_summary([{'a': 1.0}, {'a': 3.0}, {'a': 3.0}, {'a': None}], 'a')
        self.assertEqual(summary, {'rows': 4, 'max': 3.0, 'worst_row': 1})
        self.assertEqual(api.table_summary([], 'a'), {'rows': 0, 'max': None, 'worst_row': None})

    def test_all_within(self):
        self.assertTrue(api.all_within([{'r': 1e-12}, {'r': None}], 'r', 1e-9))
        self.assertFalse(api.all_within([{'r': 1e-3}], 'r', 1e-9))

    def test_period_table(self):
        rows = api.period_table('additive-S', {'c': 2.0, 'x': 3.0, 'y': 0.0})
        self.assertEqual(rows[0]['T'], 0.5)
        rows = api.period_table('additive-S', {'c': 0.0, 'x': 3.0, 'y': 1.0})
        self.assertEqual(rows[0]['branch'], 'any')
        rows = api.period_table('exponential-C', {'a': 2.0}, form='gf')
        self.assertEqual(rows[0]['T'], float('-inf'))
        self.assertFalse(rows[0]['finite'])

    def test_period_table_errors(self):
        with self.assertRaises(DomainError):
            api.period_table('additive-S', {'c': 1.0})
        with self.assertRaises(DomainError):
            api.period_table('nonsense', {})

    def test_identity_table(self):
        rows = api.identity_table('product', [0.2, 1.1])
        self.assertTrue(api.all_within(rows, 'residual', 1e-9))
        with self.assertRaises(DomainError):
            api.identity_table('nonsense', [0.2])


class TestErrata(unittest.TestCase):
    """Test the published-vs-derived table."""

    def test_all_rows_confirmed(self):
        rows = errata_table()
        self.assertEqual(len(rows), 8)
        self.assertTrue(all(r.confirmed for r in rows))
        self.assertEqual(len({r.key for r in rows}), 8)

    def test_p2_radicand(self):
        row = errata_table()[0]
        self.assertEqual(row.key, 'p2-radicand')
        self.assertEqual((row.printed, row.derived, row.abs_diff), (10.0, 8.0, 2.0))

    def test_extremum_rows(self):
        rows = {r.key: r for r in errata_table()}
        derivative = rows['extremum-derivative']
        self.assertAlmostEqual(abs(derivative.printed - derivative.derived), 3.0 / (2.0 * math.sqrt(5.0)), delta=1e-12)
        critical = rows['extremum-critical-point']
        self.assertAlmostEqual(abs(critical.printed), 0.0, delta=1e-12)
        self.assertAlmostEqual(abs(critical.derived), 0.25, delta=1e-12)

    def test_cosine_constant_sign(self):
        row = {r.key: r for r in errata_table()}['cosine-generalized-constant']
        self.assertAlmostEqual(row.printed, -row.derived, delta=1e-14)


class TestCommandLine(unittest.TestCase):
    """Test subcommands, output formats and exit codes."""

    def test_help(self):
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = cli_main(['--help'])
        self.assertEqual(code, 0)
        self.assertIn('Examples:', buffer.getvalue())

    def test_gamma_neglog(self):
        code, out, _ = run_cli('gamma', '--generator', 'neglog', '--from', '1', '--to', '5', '--step', '0.5')
        self.assertEqual(code, 0)
        rows = csv_rows(out)
        self.assertEqual(len(rows), 9)
        self.assertEqual(list(rows[0]), ['x', 'quadrature', 'closed_form', 'abs_diff'])
        self.assertTrue(all(float(r['abs_diff']) <= 1e-6 for r in rows))

    def test_gamma_overflow(self):
        code, out, err = run_cli('gamma', '--from', '180', '--to', '180', '--step', '1')
        self.assertEqual(code, 1)
        self.assertEqual(out, '')
        self.assertTrue(err.startswith('error: '))
        self.assertEqual(err.count('\n'), 1)

    def test_gamma_custom_needs_expression(self):
        code, _, err = run_cli('gamma', '--generator', 'custom')
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith('error: '))

    def test_gamma_custom_unknown_name(self):
        code, _, _ = run_cli('gamma', '--generator', 'custom', '--expr', 'k*t')
        self.assertEqual(code, 2)
        code, out, _ = run_cli('gamma', '--generator', 'custom', '--expr', 'k*t', '--param', 'k=2',
                               '--from', '2', '--to', '3', '--step', '1')
        self.assertEqual(code, 0)
        self.assertEqual(csv_rows(out)[0]['closed_form'], '')

    def test_identity_pass(self):
        code, out, err = run_cli('identity', '--check', 'pythagoras', '--points', '0.3,1.0,2.2')
        self.assertEqual(code, 0)
        self.assertEqual(err, '')
        self.assertEqual(len(csv_rows(out)), 3)

    def test_trig_text_format(self):
        code, out, _ = run_cli('trig', '--points', '0.5,1.0', '--format', 'text')
        self.assertEqual(code, 0)
        self.assertIn('z: 0.5\n', out)
        self.assertIn('\n\nz: 1\n', out)

    def test_period(self):
        code, out, _ = run_cli('period', '--kind', 'additive-S', '--param', 'c=2', '--at', '3,0')
        self.assertEqual(code, 0)
        self.assertEqual(csv_rows(out)[0]['T'], '0.5')

    def test_period_complex_roots(self):
        code, out, _ = run_cli('period', '--kind', 'additive-C', '--param', 'c=1', '--at', '1,1')
        self.assertEqual(code, 0)
        self.assertIn('T_im', csv_rows(out)[0])

    def test_period_missing_parameter(self):
        code, _, err = run_cli('period', '--kind', 'additive-S', '--param', 'c=1')
        self.assertEqual(code, 1)
        self.assertIn('missing parameter', err)

    def test_period_point(self):
        code, out, _ = run_cli('period', '--kind', 'locus', '--param', 'c=1', '--at', '4')
        self.assertEqual(code, 0)
        self.assertEqual(len(csv_rows(out)), 2)
        self.assertEqual(run_cli('period', '--kind', 'locus', '--param', 'c=1', '--at', '1,2,3')[0], 2)

    def test_verify_pass(self):
        code, out, _ = run_cli('verify', '--f', '2^x', '--period=-1', '--equation', 'S', '--grid=-3:3:25')
        self.assertEqual(code, 0)
        self.assertIn('pass: true', out)
        self.assertIn('classification: CauchyPair(EXPONENTIAL_EQ)', out)

    def test_verify_negative_values_as_separate_arguments(self):
        code, out, _ = run_cli('verify', '--f', '2^x', '--period', '-1', '--equation', 'S',
                               '--grid', '-3:3:25', '--tol', '1e-9')
        self.assertEqual(code, 0)
        self.assertIn('pass: true', out)
        self.assertIn('grid: -3:3:25', out)

    def test_attach_values(self):
        self.assertEqual(_attach_values(['verify', '--grid', '-3:3:25', '--f', '-x', '-vv']),
                         ['verify', '--grid=-3:3:25', '--f=-x', '-vv'])
        self.assertEqual(_attach_values(['--f', '2^x', '--g', '-v']), ['--f', '2^x', '--g', '-v'])
        self.assertEqual(_attach_values(['--g', '--period', '-1']), ['--g', '--period=-1'])

    def test_verify_with_partner_csv(self):
        code, out, _ = run_cli('verify', '--f', 'sin(x)', '--g', 'cos(x)', '--format', 'csv')
        self.assertEqual(code, 0)
        row = csv_rows(out)[0]
        self.assertEqual(row['pass'], 'true')
        self.assertEqual(row['classification'], 'NotCauchyPair')

    def test_verify_period_in_x_and_y(self):
        code, out, _ = run_cli('verify', '--f', 'c*x', '--param', 'c=2', '--period', '1/c - 2*x*y/(x+y)')
        self.assertEqual(code, 0)
        self.assertIn('excluded: 25', out)

    def test_verify_corrupted_period(self):
        code, out, err = run_cli('verify', '--f', '2^x', '--period=-0.99')
        self.assertEqual(code, 1)
        self.assertIn('pass: false', out)
        self.assertIn('verification failed', err)
        residual = float(out.split('max_residual: ')[1].split('\n')[0])
        self.assertGreaterEqual(residual, 1e-3)

    def test_verify_parse_error(self):
        code, out, err = run_cli('verify', '--f', 'log(', '--period=-1')
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('offset 4', err)
        self.assertEqual(err.count('\n'), 1)

    def test_verify_needs_exactly_one_partner(self):
        self.assertEqual(run_cli('verify', '--f', '2^x')[0], 2)
        self.assertEqual(run_cli('verify', '--f', '2^x', '--g', '2^x', '--period=-1')[0], 2)

    def test_usage_errors(self):
        self.assertEqual(run_cli('verify', '--f', '2^x', '--period=-1', '--tol', '0')[0], 2)
        self.assertEqual(run_cli('verify', '--f', '2^x', '--period=-1', '--param', 'x=1')[0], 2)
        self.assertEqual(run_cli('verify', '--f', '2^x', '--period=-1', '--grid', '1:2')[0], 2)
        self.assertEqual(run_cli('nonsense')[0], 2)
        self.assertEqual(run_cli()[0], 2)

    def test_bridge(self):
        code, out, _ = run_cli('bridge', '--f', '2^x', '--period=-1')
        self.assertEqual(code, 0)
        self.assertIn('agree: true', out)

    def test_representer(self):
        code, out, _ = run_cli('representer', '--family', 'exponential', '--kind', 'cosine',
                               '--points', '0,1,2')
        self.assertEqual(code, 0)
        rows = csv_rows(out)
        self.assertEqual([r['T'] for r in rows], ['-inf'] * 3)
        self.assertEqual([r['finite'] for r in rows], ['false'] * 3)

    def test_representer_additive_default_grid(self):
        """The default grid contains x = 0, where f(2x)/(2f(x)) is undefined."""
        code, out, err = run_cli('representer', '--family', 'additive')
        self.assertEqual(code, 0)
        self.assertEqual(err, '')
        rows = csv_rows(out)
        self.assertEqual(len(rows), 25)
        origin = [r for r in rows if r['x'] == '0'][0]
        self.assertEqual(origin['generic'], '')
        self.assertEqual(origin['closed_form'], '1')
        self.assertEqual(origin['period_residual'], '0')

    def test_representer_default_grid(self):
        code, out, _ = run_cli('representer', '--family', 'logarithmic', '--param', 'c=1.5')
        self.assertEqual(code, 0)
        self.assertEqual(len(csv_rows(out)), 25)

    def test_errata(self):
        code, out, _ = run_cli('errata')
        self.assertEqual(code, 0)
        self.assertIn(',10,0,8,0,2,true,', out)
        rows = csv_rows(out)
        self.assertEqual(len(rows), 8)
        self.assertTrue(all(r['confirmed'] == 'true' for r in rows))


def run_tests():
    """Run all tests and return results."""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()

    test_classes = [
        TestWriter,
        TestTableApi,
        TestErrata,
        TestCommandLine,
    ]

    for test_class in test_classes:
        suite.addTests(loader.loadTestsFromTestCase(test_class))

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
