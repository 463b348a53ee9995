from django.apps import AppConfig


class MatgfConfig(AppConfig):
    name = "matgf"
