from django.apps import AppConfig


class InvariantsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.invariants'
    verbose_name = 'Invariants'
