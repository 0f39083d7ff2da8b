"""
Enumerate accepted gluings of regular ideal polyhedra.

Usage:
    python manage.py census --polyhedron oct --count 2 --cusps 4 --format csv
    python manage.py census --polyhedron tet --count 3 --jobs 4 --save
"""
from django.core.management.base import BaseCommand

from apps.core.mixins import CliCommandMixin


class Command(CliCommandMixin, BaseCommand):
    help = 'List the isomorphism classes of accepted gluings'
    subcommand = 'census'
    required_flags = ('polyhedron', 'count')

    def add_arguments(self, parser):
        parser.add_argument('--polyhedron', help='tet or oct')
        parser.add_argument('--count', help='Number of polyhedra')
        parser.add_argument('--cusps', help='Keep only classes with this many cusps')
        parser.add_argument('--save', action='store_true', help='Store the classes with their invariants')
        self.add_common_arguments(parser)
