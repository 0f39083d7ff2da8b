"""
Canonical signature of each gluing in a file.

Usage:
    python manage.py signature --in gluing_i.json
    python manage.py signature --in gluing_i.json --trials 1000 --seed 7
"""
from django.core.management.base import BaseCommand

from apps.core.mixins import CliCommandMixin


class Command(CliCommandMixin, BaseCommand):
    help = 'Print canonical signatures, optionally checking them under random relabelings'
    subcommand = 'signature'
    required_flags = ('input',)

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', help='Gluing document or census export')
        parser.add_argument('--trials', help='Random relabelings to check (default: 0)')
        parser.add_argument('--seed', help='Seed for the relabelings (default: CENSUS_DEFAULT_SEED)')
        self.add_common_arguments(parser, format=False, jobs=False)
