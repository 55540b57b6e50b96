from bounds import densities, inequalities
from bounds.constants import SystemConfig
from bounds.reports import reports_document
from bounds.serializers import (CheckParamsSerializer, DensitySpecSerializer,
                                validated)

from ._base import BoundsCommand, int_range


class Command(BoundsCommand):
    help = 'Evaluate one catalog inequality over a fleet of densities ordered by N.'

    def add_arguments(self, parser):
        parser.add_argument('id', help=', '.join(sorted(inequalities.CATALOG)))
        super().add_arguments(parser)
        parser.add_argument('--model', choices=('gaussian', 'hydrogenic', 'exponential',
                                                'ho1d', 'fleet'), default='fleet')
        parser.add_argument('--n', type=int_range, default=[1],
                            help='particle counts, e.g. 1..20')
        parser.add_argument('--d', type=int, default=3)
        parser.add_argument('--a', type=float, default=1.0)
        parser.add_argument('--Z', type=int_range, default=[1])
        parser.add_argument('--lam', type=float, default=1.0)
        parser.add_argument('--q', type=int, default=2)
        parser.add_argument('--alpha', type=float, default=None)
        parser.add_argument('--k', type=float, default=None)
        parser.add_argument('--variant', default=None)

    def fleet(self, options):
        model = options['model']
        if model == 'fleet':
            return densities.default_fleet()
        if model == 'hydrogenic':
            specs = [{'model': model, 'Z': z} for z in options['Z']]
        else:
            specs = [{'model': model, 'd': options['d'], 'a': options['a'],
                      'lam': options['lam'], 'N': n, 'q': options['q']}
                     for n in options['n']]
        fleet = []
        for data in specs:
            spec = DensitySpecSerializer(data=data)
            validated(spec)
            fleet.append(spec.save())
        return fleet

    def build(self, **options):
        params = validated(CheckParamsSerializer(data={
            key: options[key] for key in ('id', 'alpha', 'k', 'variant')}))
        fleet = self.fleet(options)
        template = SystemConfig(d=fleet[0].d, q=options['q'])
        reports = inequalities.sweep(params['id'], fleet, template,
                                     alpha=params['alpha'], k=params['k'],
                                     variant=params['variant'])
        return reports_document('sweep', reports,
                                metadata={'id': params['id'], 'model': options['model'],
                                          'q': options['q']})
