from django.apps import AppConfig


class LinearcodeConfig(AppConfig):
    name = "linearcode"
