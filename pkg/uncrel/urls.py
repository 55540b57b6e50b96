"""uncrel URL Configuration

Everything is served by the bounds app under ``api/``.
"""
from django.urls import include, path

urlpatterns = [
    path('api/', include('bounds.urls')),
]
