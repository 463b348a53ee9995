from django.apps import AppConfig


class ConstructConfig(AppConfig):
    name = "construct"
