from django.apps import AppConfig


class RegistryConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.registry'
    verbose_name = 'Check Registry'

    def ready(self):
        """Discover and register all checks when Django starts."""
        from .check_registry import registry
        registry.autodiscover()
