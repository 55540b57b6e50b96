from bounds.reports import oracle_document
from bounds.serializers import OracleQuerySerializer, validated

from ._base import BoundsCommand


class Command(BoundsCommand):
    help = 'Numerically reconstructed extremal constants against their closed forms.'

    def add_arguments(self, parser):
        parser.add_argument('mode', choices=('F', 'G', 'grid'))
        super().add_arguments(parser)
        parser.add_argument('--d', type=int, default=3)
        parser.add_argument('--alpha', type=float, default=2.0)
        parser.add_argument('--k', type=float, default=None)

    def build(self, **options):
        k = options['k']
        if k is None:
            k = -1.0 if options['mode'] == 'G' else 2.0
        params = validated(OracleQuerySerializer(data={
            'mode': options['mode'], 'd': options['d'],
            'alpha': options['alpha'], 'k': k}))
        return oracle_document(params['mode'], params['d'], params['alpha'], params['k'])
