from bounds import densities
from bounds.exceptions import PreconditionError
from bounds.reports import moments_document

from ._base import BoundsCommand, float_list


class Command(BoundsCommand):
    help = 'Radial moments, entropic moments and Fisher information of a density.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_model_arguments(parser)
        parser.add_argument('--orders', type=float_list, default=[0.0, 2.0],
                            help='comma-separated moment orders alpha')
        parser.add_argument('--entropic', type=float_list, default=[],
                            help='comma-separated entropic exponents m')
        parser.add_argument('--fisher', action='store_true')
        parser.add_argument('--space', choices=('position', 'momentum', 'both'),
                            default='position')

    def build(self, **options):
        pair, cfg = self.pair_from_options(options)
        space = options['space']
        sides = {}
        if space in (densities.POSITION, 'both'):
            sides[densities.POSITION] = pair.position
        if space in (densities.MOMENTUM, 'both'):
            sides[densities.MOMENTUM] = pair.momentum
        if space != 'both' and sides[space] is None:
            raise PreconditionError(f'{pair.label} has no {space} density')
        return moments_document(sides, orders=options['orders'],
                                entropic=options['entropic'],
                                fisher=options['fisher'], cfg=cfg)
