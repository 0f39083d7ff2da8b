"""
Cusps, first homology and volume of the gluings in a file.

Usage:
    python manage.py invariants --in census.json --format structured
"""
from django.core.management.base import BaseCommand

from apps.core.mixins import CliCommandMixin


class Command(CliCommandMixin, BaseCommand):
    help = 'Compute invariants of a gluing file or a structured census export'
    subcommand = 'invariants'
    required_flags = ('input',)

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', help='Gluing document or census export')
        self.add_common_arguments(parser)
