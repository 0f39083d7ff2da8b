from django.apps import AppConfig


class PaperverifyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.paperverify'
    verbose_name = 'Classification checks'
