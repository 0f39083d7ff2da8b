"""
Census models.
"""
from django.db import models

from apps.polyhedra.models import PolyhedronKind


class CensusEntry(models.Model):
    """
    One accepted isomorphism class from a census run.
    Keyed by (kind, count, signature) so re-saving a census is idempotent.
    """
    kind = models.CharField(max_length=3, choices=PolyhedronKind.choices)
    count = models.PositiveSmallIntegerField()
    signature = models.CharField(max_length=255)
    cusp_count = models.PositiveSmallIntegerField()
    distribution = models.CharField(
        max_length=100,
        help_text='Vertices per cusp, ascending and comma separated'
    )
    homology = models.CharField(max_length=100, blank=True)
    volume = models.FloatField(null=True, blank=True)
    gluing = models.JSONField()
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ['kind', 'count', 'signature']
        verbose_name_plural = 'Census entries'
        constraints = [
            models.UniqueConstraint(
                fields=['kind', 'count', 'signature'],
                name='unique_census_signature',
            ),
        ]

    def __str__(self):
        return self.signature
