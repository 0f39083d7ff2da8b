"""
Command-line dispatch.

Each management command validates its flags through ``CliConfigForm``,
freezes them into a ``CliConfig`` and calls ``run``. Failures come back as
exit codes so the commands only translate them.
"""
import logging
import random
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Callable, Dict, Optional, TextIO

from django.core.exceptions import ValidationError
from django.db import models

from apps.census.services import CensusQuery, ResourceLimitError, run_census, store_entries
from apps.census.signature import canonical_signature
from apps.gluing.complex import relabel
from apps.gluing.fileformat import read_gluings
from apps.hypervol.services import volume_table
from apps.invariants.services import compute_records, records_by_signature
from apps.paperverify.services import VerificationContext, build_report, render_json, render_text
from apps.polyhedra.models import PolyhedronKind

from .forms import CliConfigForm, OutputFormat
from .rendering import render_bounds, render_census, render_records

logger = logging.getLogger(__name__)


class Subcommand(models.TextChoices):
    CENSUS = 'census', 'Census'
    INVARIANTS = 'invariants', 'Invariants'
    SIGNATURE = 'signature', 'Signature'
    VERIFY_PAPER = 'verify_paper', 'Verify classification'
    BOUNDS = 'bounds', 'Volume bounds'


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    USAGE = 2
    RESOURCE_LIMIT = 3


@dataclass(frozen=True)
class CliConfig:
    subcommand: Subcommand
    kind: Optional[PolyhedronKind] = None
    count: Optional[int] = None
    cusp_filter: Optional[int] = None
    format: OutputFormat = OutputFormat.TEXT
    jobs: int = 1
    seed: int = 0
    trials: int = 0
    chi: Optional[int] = None
    input: Optional[Path] = None
    output: Optional[Path] = None
    save: bool = False

    @classmethod
    def from_form(cls, subcommand, form: CliConfigForm) -> 'CliConfig':
        data = form.cleaned_data
        return cls(
            subcommand=Subcommand(subcommand),
            kind=PolyhedronKind(data['polyhedron']) if data.get('polyhedron') else None,
            count=data.get('count'),
            cusp_filter=data.get('cusps'),
            format=OutputFormat(data['format']),
            jobs=data['jobs'],
            seed=data['seed'],
            trials=data['trials'],
            chi=data.get('chi'),
            input=Path(data['input']) if data.get('input') else None,
            output=Path(data['output']) if data.get('output') else None,
            save=bool(data.get('save')),
        )


class CliError(Exception):
    """A failure with its exit code and a message for stderr."""

    def __init__(self, message: str, code: ExitCode):
        super().__init__(message)
        self.code = code


def _census(config: CliConfig) -> str:
    query = CensusQuery(config.kind, config.count, config.cusp_filter)
    classes, _ = run_census(query, config.jobs)
    if config.save:
        records = records_by_signature(compute_records([c.complex for c in classes], config.jobs))
        created = store_entries(classes, records)
        logger.info(f'Saved {len(classes)} classes ({created} new)')
    return render_census(classes, config.format)


def _invariants(config: CliConfig) -> str:
    complexes = read_gluings(config.input)
    return render_records(compute_records(complexes, config.jobs), config.format)


def _signature(config: CliConfig) -> str:
    rng = random.Random(config.seed)
    lines = []
    for complex_ in read_gluings(config.input):
        signature = canonical_signature(complex_)
        for trial in range(config.trials):
            permutation = list(range(complex_.count))
            rng.shuffle(permutation)
            rotations = [rng.choice(complex_.template.rotations) for _ in range(complex_.count)]
            moved = canonical_signature(relabel(complex_, permutation, rotations))
            if moved != signature:
                raise CliError(
                    f'Trial {trial} changed the signature: {signature.text} -> {moved.text}',
                    ExitCode.VERIFICATION_FAILED,
                )
        lines.append(signature.text)
    return '\n'.join(lines) + '\n'


def _bounds(config: CliConfig) -> str:
    chi_values = () if config.chi is None else (config.chi,)
    return render_bounds(volume_table(config.cusp_filter, chi_values), config.format)


def _verify_paper(config: CliConfig) -> str:
    report = build_report(VerificationContext(jobs=config.jobs))
    text = render_json(report) if config.format == OutputFormat.STRUCTURED else render_text(report)
    if not report.overall:
        raise CliError(text, ExitCode.VERIFICATION_FAILED)
    return text


HANDLERS: Dict[Subcommand, Callable[[CliConfig], str]] = {
    Subcommand.CENSUS: _census,
    Subcommand.INVARIANTS: _invariants,
    Subcommand.SIGNATURE: _signature,
    Subcommand.VERIFY_PAPER: _verify_paper,
    Subcommand.BOUNDS: _bounds,
}


def _emit(config: CliConfig, text: str, stdout: TextIO) -> None:
    if config.output is None:
        stdout.write(text)
        return
    try:
        config.output.write_text(text, encoding='utf-8')
    except OSError as exc:
        raise CliError(f'Cannot write {config.output}: {exc.strerror}', ExitCode.USAGE)


def run(config: CliConfig, stdout: TextIO) -> ExitCode:
    """
    Execute one subcommand and write its output.

    Raises ``CliError`` for every non-zero outcome; a failed verification
    still writes its report before raising.
    """
    try:
        text = HANDLERS[config.subcommand](config)
    except ResourceLimitError as exc:
        raise CliError(exc.messages[0], ExitCode.RESOURCE_LIMIT)
    except ValidationError as exc:
        raise CliError(exc.messages[0], ExitCode.USAGE)
    except CliError as exc:
        if exc.code == ExitCode.VERIFICATION_FAILED and config.subcommand == Subcommand.VERIFY_PAPER:
            _emit(config, str(exc), stdout)
            raise CliError('Verification failed', exc.code)
        raise
    _emit(config, text, stdout)
    return ExitCode.OK
