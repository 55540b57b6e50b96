from bounds import densities
from bounds.exceptions import PreconditionError
from bounds.reports import tabulated_text

from ._base import BoundsCommand


class Command(BoundsCommand):
    help = 'Write a model density in the tabulated CSV format.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_model_arguments(parser)
        parser.add_argument('--space', choices=densities.SPACES, default=densities.POSITION)
        parser.add_argument('--points', type=int, default=400)
        parser.add_argument('--rmax', type=float, default=None)

    def handle(self, *args, **options):
        options['format'] = 'csv'
        return super().handle(*args, **options)

    def build(self, **options):
        pair, _ = self.pair_from_options(options)
        density = pair.position if options['space'] == densities.POSITION else pair.momentum
        if density is None:
            raise PreconditionError(f'{pair.label} has no {options["space"]} density')
        return _Tabulated(tabulated_text(density, n=options['points'],
                                         r_max=options['rmax']))


class _Tabulated:
    def __init__(self, text):
        self.text = text

    def render(self, fmt):
        return self.text
