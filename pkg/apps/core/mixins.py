"""
Shared plumbing for the management commands.
"""
import logging

from django.core.management.base import CommandError

from .cli import CliConfig, CliError, ExitCode, run
from .forms import CliConfigForm

logger = logging.getLogger(__name__)


class CliCommandMixin:
    """
    Validate flags with ``CliConfigForm`` and hand them to ``run``.

    Usage:
        class Command(CliCommandMixin, BaseCommand):
            subcommand = 'census'
            required_flags = ('polyhedron', 'count')
    """
    subcommand = None
    required_flags = ()

    def add_common_arguments(self, parser, *, format=True, jobs=True, output=True):
        if format:
            parser.add_argument('--format', help='text, structured or csv (default: text)')
        if jobs:
            parser.add_argument('--jobs', help='Worker processes (default: CENSUS_DEFAULT_JOBS)')
        if output:
            parser.add_argument('--out', dest='output', help='Write to this file instead of stdout')

    def handle(self, *args, **options):
        data = {
            name: value for name, value in options.items()
            if name in CliConfigForm.base_fields and value is not None
        }
        form = CliConfigForm(data, required=self.required_flags)
        if not form.is_valid():
            raise CommandError(form.first_error(), returncode=ExitCode.USAGE)
        config = CliConfig.from_form(self.subcommand, form)
        logger.debug(f'{self.subcommand}: {config}')
        try:
            run(config, self.stdout)
        except CliError as exc:
            raise CommandError(str(exc), returncode=exc.code)
