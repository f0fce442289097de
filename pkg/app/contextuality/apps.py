from django.apps import AppConfig


class ContextualityConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'contextuality'
    verbose_name = 'Strong contextuality'
