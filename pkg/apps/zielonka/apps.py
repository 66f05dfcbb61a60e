from django.apps import AppConfig


class ZielonkaConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.zielonka'
