from bounds import inequalities
from bounds.reports import reports_document
from bounds.serializers import CheckParamsSerializer, validated

from ._base import BoundsCommand


class Command(BoundsCommand):
    help = 'Evaluate one catalog inequality on a density pair.'

    def add_arguments(self, parser):
        parser.add_argument('id', help=', '.join(sorted(inequalities.CATALOG)))
        super().add_arguments(parser)
        self.add_model_arguments(parser)
        parser.add_argument('--alpha', type=float, default=None)
        parser.add_argument('--k', type=float, default=None)
        parser.add_argument('--variant', default=None)

    def build(self, **options):
        params = validated(CheckParamsSerializer(data={
            key: options[key] for key in ('id', 'alpha', 'k', 'variant')}))
        pair, cfg = self.pair_from_options(options)
        report = inequalities.check(params['id'], pair, cfg, alpha=params['alpha'],
                                    k=params['k'], variant=params['variant'])
        return reports_document('check', [report], metadata={'id': params['id']})
