"""
Run every registered classification check.

Exits 0 when all checks pass, 1 otherwise; the report is written either way.

Usage:
    python manage.py verify_paper
    python manage.py verify_paper --format structured --out report.json --jobs 4
"""
from django.core.management.base import BaseCommand

from apps.core.mixins import CliCommandMixin


class Command(CliCommandMixin, BaseCommand):
    help = 'Verify the two-octahedron four-cusp classification against the census'
    subcommand = 'verify_paper'

    def add_arguments(self, parser):
        self.add_common_arguments(parser)
