from bounds.reports import table2_document

from ._base import BoundsCommand


class Command(BoundsCommand):
    help = ('Three-dimensional electronic Heisenberg-like coefficients for '
            'alpha, k = 1..4 with N-exponents and closed forms.')

    def build(self, **options):
        return table2_document()
