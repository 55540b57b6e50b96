import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'uncrel.settings')
django.setup()
