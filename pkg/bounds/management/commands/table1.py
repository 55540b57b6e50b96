from bounds.reports import table1_document

from ._base import BoundsCommand


class Command(BoundsCommand):
    help = 'Daubechies rigour factor B(d,k) for d, k = 1..4 next to the printed table.'

    def build(self, **options):
        return table1_document()
