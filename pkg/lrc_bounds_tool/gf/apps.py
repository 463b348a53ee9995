from django.apps import AppConfig


class GfConfig(AppConfig):
    name = "gf"
