from django.apps import AppConfig


class GluingConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.gluing'
    verbose_name = 'Gluings'
