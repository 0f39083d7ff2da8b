import csv
import io
import json
import tempfile
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from apps.census.models import CensusEntry

from .cli import ExitCode
from .forms import CliConfigForm, OutputFormat


def fixture_path(name):
    return str(Path(settings.PAPER_FIXTURE_DIR) / name)


def run_command(*args, **options):
    stdout = io.StringIO()
    call_command(*args, stdout=stdout, **options)
    return stdout.getvalue()


class CliConfigFormTests(SimpleTestCase):

    def test_defaults(self):
        form = CliConfigForm({'polyhedron': 'oct', 'count': '2'})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['format'], OutputFormat.TEXT)
        self.assertEqual(form.cleaned_data['jobs'], settings.CENSUS_DEFAULT_JOBS)
        self.assertEqual(form.cleaned_data['seed'], settings.CENSUS_DEFAULT_SEED)

    def test_first_error_names_flag(self):
        form = CliConfigForm({'polyhedron': 'cube', 'count': '2'})
        self.assertFalse(form.is_valid())
        self.assertTrue(form.first_error().startswith('--polyhedron:'))

    def test_required_flags(self):
        form = CliConfigForm({}, required=('input',))
        self.assertFalse(form.is_valid())
        self.assertIn('input', form.errors)

    def test_positive_chi_rejected(self):
        self.assertFalse(CliConfigForm({'chi': '2'}).is_valid())


class CensusCommandTests(SimpleTestCase):

    def test_csv_rows(self):
        output = run_command('census', polyhedron='oct', count='2', cusps='4', format='csv')
        rows = list(csv.reader(io.StringIO(output)))
        self.assertEqual(rows[0], ['signature', 'cusps', 'distribution'])
        self.assertEqual(sorted(row[2] for row in rows[1:]), ['1,1,2,8', '2,2,4,4'])

    def test_text_records(self):
        output = run_command('census', polyhedron='oct', count='2', cusps='4')
        for line in output.splitlines():
            signature, cusps, distribution = line.split('\t')
            self.assertTrue(signature.startswith('oct2:'))
            self.assertEqual(cusps, '4')

    def test_jobs_do_not_change_output(self):
        options = {'polyhedron': 'oct', 'count': '2', 'cusps': '4', 'format': 'structured'}
        serial = run_command('census', jobs='1', **options)
        parallel = run_command('census', jobs='8', **options)
        self.assertEqual(len(json.loads(serial)['classes']), 2)
        self.assertEqual(serial, parallel)

    def test_bad_flag_is_usage_error(self):
        with self.assertRaises(CommandError) as caught:
            run_command('census', polyhedron='oct', count='0')
        self.assertEqual(caught.exception.returncode, ExitCode.USAGE)
        self.assertIn('--count', str(caught.exception))

    def test_missing_flag_is_usage_error(self):
        with self.assertRaises(CommandError) as caught:
            run_command('census', polyhedron='oct')
        self.assertEqual(caught.exception.returncode, ExitCode.USAGE)

    def test_resource_limit(self):
        with self.assertRaises(CommandError) as caught:
            run_command('census', polyhedron='oct', count='4')
        self.assertEqual(caught.exception.returncode, ExitCode.RESOURCE_LIMIT)

    def test_structured_output_round_trips_through_invariants(self):
        with tempfile.TemporaryDirectory() as directory:
            export = Path(directory) / 'census.json'
            run_command('census', polyhedron='oct', count='2', cusps='4', format='structured',
                        output=str(export))
            document = json.loads(export.read_text())
            self.assertEqual(len(document['classes']), 2)
            first = run_command('invariants', input=str(export), format='structured')
            again = run_command('invariants', input=str(export), format='structured')
        self.assertEqual(first, again)
        records = json.loads(first)['records']
        self.assertEqual([r['signature'] for r in records],
                         [c['signature'] for c in document['classes']])
        for record in records:
            self.assertEqual(record['h1'], 'Z^4')
            self.assertTrue(record['volume'].startswith('7.32'))


class CensusSaveTests(TestCase):

    def test_save_is_idempotent(self):
        run_command('census', polyhedron='oct', count='2', cusps='4', save=True)
        run_command('census', polyhedron='oct', count='2', cusps='4', save=True)
        self.assertEqual(CensusEntry.objects.count(), 2)
        self.assertEqual(set(CensusEntry.objects.values_list('homology', flat=True)), {'Z^4'})


class SignatureCommandTests(SimpleTestCase):

    def test_stable_signature(self):
        first = run_command('signature', input=fixture_path('gluing_i.json'))
        second = run_command('signature', input=fixture_path('gluing_i.json'), trials='50', seed='3')
        self.assertEqual(first, second)
        self.assertEqual(len(first.splitlines()), 1)

    def test_missing_file_names_path(self):
        with self.assertRaises(CommandError) as caught:
            run_command('signature', input='/nonexistent/gluing.json')
        self.assertEqual(caught.exception.returncode, ExitCode.USAGE)
        self.assertIn('/nonexistent/gluing.json', str(caught.exception))


class BoundsCommandTests(SimpleTestCase):

    def test_four_cusps(self):
        output = run_command('bounds', cusps='4')
        rows = dict(line.split() for line in output.splitlines())
        self.assertEqual(rows['4V3'], '4.059766425639')
        self.assertTrue(rows['2V8'].startswith('7.327724753'))
        self.assertTrue(rows['2V3'].startswith('2.02'))

    def test_chi_row(self):
        output = run_command('bounds', chi='-4', format='structured')
        document = json.loads(output)
        self.assertEqual(document['V8/2*|-4|'], document['2V8'])


class VerifyPaperCommandTests(SimpleTestCase):

    def test_passes(self):
        output = run_command('verify_paper')
        self.assertTrue(output.endswith('overall: pass\n'))

    def test_structured_report(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'report.json'
            run_command('verify_paper', format='structured', output=str(path), jobs='2')
            report = json.loads(path.read_text())
        self.assertTrue(report['overall'])
        self.assertEqual(
            {check['claim_id'] for check in report['checks'] if check['status'] == 'asserted'},
            {'homeomorphic-gluings'},
        )
