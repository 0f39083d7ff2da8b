from django.apps import AppConfig


class PolyhedraConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.polyhedra'
    verbose_name = 'Polyhedra'
