from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from . import constants, inequalities, reports
from .exceptions import UncrelError
from .serializers import (CheckParamsSerializer, ConstantQuerySerializer,
                          ConstantValueSerializer, DensitySpecSerializer,
                          OracleQuerySerializer, validated)


class DocumentView(APIView):
    """Read-only view answering GET with a report document or an error object."""

    def document(self, request, **kwargs):
        raise NotImplementedError

    def get(self, request, **kwargs):
        try:
            return Response(self.document(request, **kwargs))
        except UncrelError as exc:
            return Response(reports.error_data(exc), status=status.HTTP_400_BAD_REQUEST)


class Table1View(DocumentView):
    """B(d,k) for d, k = 1..4"""

    def document(self, request):
        return reports.table1_document().as_data()


class Table2View(DocumentView):
    """Three-dimensional electronic Heisenberg-like coefficients"""

    def document(self, request):
        return reports.table2_document().as_data()


class ConstantView(DocumentView):
    """Evaluate one named constant"""

    def document(self, request):
        params = dict(validated(ConstantQuerySerializer(data=request.query_params)))
        name = params.pop('name')
        value = constants.evaluate(name, **params)
        return {'name': name, **params, **ConstantValueSerializer(value).data}


class OracleView(DocumentView):
    """Extremal constant reconstructed numerically"""

    def document(self, request):
        params = validated(OracleQuerySerializer(data=request.query_params))
        return reports.oracle_document(params['mode'], params['d'], params['alpha'],
                                       params['k']).as_data()


class CheckView(DocumentView):
    """One catalog inequality on a model density pair"""

    def document(self, request, ineq):
        query = request.query_params
        params = validated(CheckParamsSerializer(data={
            'id': ineq, **{key: query[key] for key in ('alpha', 'k', 'variant')
                           if key in query}}))
        spec = DensitySpecSerializer(data=query)
        validated(spec)
        pair = spec.save()
        cfg = pair.config(constants.SystemConfig(d=pair.d, N=pair.N,
                                                 q=spec.validated_data['q']))
        report = inequalities.check(params['id'], pair, cfg, alpha=params['alpha'],
                                    k=params['k'], variant=params['variant'])
        return reports.reports_document('check', [report],
                                        metadata={'id': params['id']}).as_data()
