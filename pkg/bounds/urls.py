from django.urls import path

from .views import CheckView, ConstantView, OracleView, Table1View, Table2View
from .yasg import urlpatterns as swagger_urls

app_name = 'bounds'

urlpatterns = [
    path('constants/table1/', Table1View.as_view(), name='table1'),
    path('constants/table2/', Table2View.as_view(), name='table2'),
    path('constants/evaluate/', ConstantView.as_view(), name='constant'),
    path('oracle/', OracleView.as_view(), name='oracle'),
    path('check/<str:ineq>/', CheckView.as_view(), name='check'),
]

urlpatterns += swagger_urls
