from django.apps import AppConfig


class HypervolConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.hypervol'
    verbose_name = 'Hyperbolic volumes'
