"""
Volume constants and closed-form lower bounds.

Usage:
    python manage.py bounds --cusps 4
    python manage.py bounds --chi -4 --format csv
"""
from django.core.management.base import BaseCommand

from apps.core.mixins import CliCommandMixin


class Command(CliCommandMixin, BaseCommand):
    help = 'Print V3, V8, n*V3 and (V8/2)*|chi|'
    subcommand = 'bounds'

    def add_arguments(self, parser):
        parser.add_argument('--cusps', help='Cusp count n for the n*V3 bound')
        parser.add_argument('--chi', help='Non-positive boundary Euler characteristic')
        self.add_common_arguments(parser, jobs=False)
