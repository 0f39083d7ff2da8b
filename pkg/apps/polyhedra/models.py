"""
Polyhedron kinds shared by the census, its storage and the command line.
"""
from django.db import models


class PolyhedronKind(models.TextChoices):
    TETRAHEDRON = 'tet', 'Tetrahedron'
    OCTAHEDRON = 'oct', 'Octahedron'
