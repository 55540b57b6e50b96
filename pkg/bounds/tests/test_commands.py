import csv
import io
import json
import os
import tempfile

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase


def run(*args):
    out = io.StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--format', 'json'))


def csv_rows(text):
    lines = [line for line in text.splitlines() if not line.startswith('#')]
    return list(csv.DictReader(lines))


class TableCommandTests(SimpleTestCase):

    def test_table1_csv(self):
        text = run('table1')
        self.assertIn('# document=table1', text.splitlines())
        rows = csv_rows(text)
        self.assertEqual(len(rows), 16)
        self.assertEqual(list(rows[0]), ['d', 'k', 'B', 'printed', 'abs_diff'])
        for row in rows:
            self.assertLess(float(row['abs_diff']), 2e-6)

    def test_table1_is_deterministic(self):
        self.assertEqual(run('table1'), run('table1'))

    def test_table2_json(self):
        with self.assertLogs('bounds.reports', level='WARNING') as logs:
            data = run_json('table2')
        self.assertEqual(data['metadata']['document'], 'table2')
        self.assertEqual(len(data['rows']), 16)
        cell = next(row for row in data['rows'] if (row['alpha'], row['k']) == (4, 2))
        self.assertEqual(cell['exponent'], '13/6')
        self.assertIn('printed exponent 13/16', cell['note'])
        for row in data['rows']:
            self.assertLess(row['rel_diff'], 1e-8)
        self.assertEqual(len(logs.output), 2)


class MomentsCommandTests(SimpleTestCase):

    def test_hydrogen_both_spaces(self):
        data = run_json('moments', '--model', 'hydrogenic', '--orders', '1,2',
                        '--space', 'both', '--fisher')
        values = {(row['space'], row['kind'], row['order']): row['value'] for row in data['rows']}
        self.assertAlmostEqual(values[('position', 'moment', 1.0)], 1.5, places=10)
        self.assertAlmostEqual(values[('momentum', 'moment', 2.0)], 1.0, places=10)
        self.assertEqual(values[('momentum', 'fisher', 2.0)], 12.0)
        self.assertEqual(data['metadata']['q'], 2)

    def test_entropic(self):
        data = run_json('moments', '--model', 'exponential', '--d', '3',
                        '--orders', '', '--entropic', '2')
        self.assertEqual(len(data['rows']), 1)
        self.assertAlmostEqual(data['rows'][0]['value'] * 64 * 3.141592653589793, 1.0,
                               places=10)

    def test_divergent_moment(self):
        with self.assertRaises(CommandError) as ctx:
            run('moments', '--model', 'hydrogenic', '--orders', '-3')
        self.assertEqual(ctx.exception.returncode, 3)


class CheckCommandTests(SimpleTestCase):

    def test_satisfied(self):
        data = run_json('checkbound', 'thakkar_lower', '--model', 'hydrogenic', '--k', '1')
        row, = data['rows']
        self.assertEqual(row['id'], 'thakkar_lower')
        self.assertEqual(row['direction'], 'lhs_ge_rhs')
        self.assertTrue(row['satisfied'])
        self.assertTrue(row['valid'])

    def test_domain_error_exit_code_and_json(self):
        out = io.StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('checkbound', 'negative_order', '--model', 'hydrogenic',
                         '--alpha', '1', '--k', '-1', '--format', 'json', stdout=out)
        self.assertEqual(ctx.exception.returncode, 3)
        error = json.loads(out.getvalue())['error']
        self.assertEqual(error['exit_code'], 3)
        self.assertIn('window', error['message'])

    def test_invalid_model_parameter(self):
        with self.assertRaises(CommandError) as ctx:
            run('checkbound', 'cramer_rao', '--model', 'gaussian', '--a', '-1')
        self.assertEqual(ctx.exception.returncode, 3)

    def test_missing_model(self):
        with self.assertRaises(CommandError) as ctx:
            run('checkbound', 'cramer_rao')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_unknown_id(self):
        with self.assertRaises(CommandError) as ctx:
            run('checkbound', 'no_such_bound', '--model', 'hydrogenic')
        self.assertEqual(ctx.exception.returncode, 2)


class SweepCommandTests(SimpleTestCase):

    def test_oscillator_sweep(self):
        rows = csv_rows(run('sweep', 'heisenberg_general', '--model', 'ho1d', '--n', '1..4',
                            '--q', '1', '--alpha', '2', '--k', '2'))
        self.assertEqual([row['N'] for row in rows], ['1', '2', '3', '4'])
        self.assertTrue(all(row['satisfied'] == 'true' for row in rows))
        self.assertTrue(all(row['q'] == '1' for row in rows))

    def test_holes_do_not_abort(self):
        data = run_json('sweep', 'fisher_product_N', '--model', 'exponential', '--n', '1,2')
        self.assertEqual(len(data['rows']), 2)
        self.assertFalse(any(row['valid'] for row in data['rows']))
        self.assertIsNone(data['rows'][0]['lhs'])


class OracleCommandTests(SimpleTestCase):

    def test_minimizer(self):
        row, = run_json('oracle', 'F', '--d', '3', '--alpha', '2', '--k', '2')['rows']
        self.assertEqual(row['kind'], 'F')
        self.assertLess(row['discrepancy'], 1e-7)

    def test_maximizer_needs_negative_k(self):
        with self.assertRaises(CommandError) as ctx:
            run('oracle', 'G', '--k', '2')
        self.assertEqual(ctx.exception.returncode, 3)


class TabulatedRoundTripTests(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def test_export_then_measure(self):
        path = self.path('hydrogen.csv')
        run('exportdensity', '--model', 'hydrogenic', '--rmax', '30', '--out', path)
        with open(path, encoding='utf-8') as stream:
            head = stream.read().splitlines()[:4]
        self.assertEqual(head, ['# d=3', '# N=1', '# space=position', 'r,rho'])
        data = run_json('moments', '--file', path, '--orders', '1')
        self.assertAlmostEqual(data['rows'][0]['value'], 1.5, delta=2e-3)
        self.assertEqual(data['rows'][0]['method'], 'quadrature')

    def test_missing_momentum_side(self):
        with self.assertRaises(CommandError) as ctx:
            run('exportdensity', '--model', 'exponential', '--space', 'momentum')
        self.assertEqual(ctx.exception.returncode, 3)

    def test_tabulated_file_has_no_momentum_moments(self):
        path = self.path('hydrogen.csv')
        run('exportdensity', '--model', 'hydrogenic', '--rmax', '30', '--out', path)
        with self.assertRaises(CommandError) as ctx:
            run('moments', '--file', path, '--space', 'momentum')
        self.assertEqual(ctx.exception.returncode, 3)

    def test_malformed_file(self):
        path = self.path('bad.csv')
        with open(path, 'w', encoding='utf-8') as stream:
            stream.write('# d=3\nr,rho\n0,abc\n')
        with self.assertRaises(CommandError) as ctx:
            run('moments', '--file', path)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_binary_file(self):
        path = self.path('binary.csv')
        with open(path, 'wb') as stream:
            stream.write(b'\xff\xfe# d=3\nr,rho\n')
        with self.assertRaises(CommandError) as ctx:
            run('moments', '--file', path)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_unwritable_output(self):
        with self.assertRaises(CommandError) as ctx:
            run('table1', '--out', self.path('missing/dir/table.csv'))
        self.assertEqual(ctx.exception.returncode, 2)
