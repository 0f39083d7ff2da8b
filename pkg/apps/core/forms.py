"""
Option validation shared by the management commands.
"""
from django import forms
from django.conf import settings
from django.db import models

from apps.polyhedra.models import PolyhedronKind


class OutputFormat(models.TextChoices):
    TEXT = 'text', 'Text'
    STRUCTURED = 'structured', 'Structured (JSON)'
    CSV = 'csv', 'CSV'


class CliConfigForm(forms.Form):
    """Flags of every subcommand; fields a subcommand does not use stay empty."""

    polyhedron = forms.ChoiceField(choices=PolyhedronKind.choices, required=False)
    count = forms.IntegerField(min_value=1, required=False)
    cusps = forms.IntegerField(min_value=1, required=False)
    format = forms.ChoiceField(choices=OutputFormat.choices, required=False)
    jobs = forms.IntegerField(min_value=1, required=False)
    seed = forms.IntegerField(min_value=0, required=False)
    trials = forms.IntegerField(min_value=0, required=False)
    chi = forms.IntegerField(max_value=0, required=False)
    input = forms.CharField(required=False, strip=False)
    output = forms.CharField(required=False, strip=False)
    save = forms.BooleanField(required=False)

    def __init__(self, *args, required=(), **kwargs):
        super().__init__(*args, **kwargs)
        for name in required:
            self.fields[name].required = True

    def clean_format(self):
        return self.cleaned_data['format'] or OutputFormat.TEXT

    def clean_jobs(self):
        return self.cleaned_data['jobs'] or settings.CENSUS_DEFAULT_JOBS

    def clean_seed(self):
        seed = self.cleaned_data['seed']
        return settings.CENSUS_DEFAULT_SEED if seed is None else seed

    def clean_trials(self):
        return self.cleaned_data['trials'] or 0

    def first_error(self) -> str:
        """'--flag: message' for the first invalid flag."""
        name, errors = next(iter(self.errors.items()))
        return f'--{name}: {errors[0]}'
