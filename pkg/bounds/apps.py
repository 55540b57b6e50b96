from django.apps import AppConfig


class BoundsConfig(AppConfig):
    name = 'bounds'
    verbose_name = 'Uncertainty-relation bounds'
