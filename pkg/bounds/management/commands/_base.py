"""Shared plumbing of the bounds management commands."""
import logging

from django.core.management.base import BaseCommand, CommandError

from bounds import densities
from bounds.constants import SystemConfig
from bounds.exceptions import FormatError, UncrelError
from bounds.reports import FORMATS, error_json, read_tabulated
from bounds.serializers import MODELS, DensitySpecSerializer, validated

logger = logging.getLogger('bounds.commands')


def float_list(text):
    try:
        return [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise FormatError(f'expected a comma-separated list of numbers, got {text!r}') from None


def int_range(text):
    """``'1..20'`` or ``'5'`` or ``'1,2,8'`` as a list of integers."""
    try:
        if '..' in text:
            lo, _, hi = text.partition('..')
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise FormatError(f'empty range {text!r}')
            return list(range(lo, hi + 1))
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise FormatError(f'expected an integer range like 1..20, got {text!r}') from None


class BoundsCommand(BaseCommand):
    """A command that produces a ReportDocument.

    Subclasses implement ``build(**options)``; errors map onto exit codes
    2 (format), 3 (domain) and 4 (convergence).
    """
    requires_system_checks = []
    requires_migrations_checks = False

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=FORMATS, default='csv')
        parser.add_argument('--out', default=None, help='output path (default stdout)')

    def add_model_arguments(self, parser):
        parser.add_argument('--model', choices=MODELS)
        parser.add_argument('--d', type=int, default=3)
        parser.add_argument('--a', type=float, default=1.0)
        parser.add_argument('--Z', type=float, default=1.0)
        parser.add_argument('--lam', type=float, default=1.0)
        parser.add_argument('--N', type=float, default=1.0)
        parser.add_argument('--q', type=int, default=2)
        parser.add_argument('--file', default=None, help='tabulated position density')
        parser.add_argument('--position', default=None, help='tabulated position density')
        parser.add_argument('--momentum', default=None, help='tabulated momentum density')

    def build(self, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        fmt = options['format']
        try:
            document = self.build(**options)
            self.emit(document.render(fmt), options['out'])
        except UncrelError as exc:
            logger.debug('%s failed: %s', self.__module__, exc.message)
            if fmt == 'json':
                self.stdout.write(error_json(exc), ending='')
            raise CommandError(exc.message, returncode=exc.exit_code) from exc

    def emit(self, text, out):
        if out is None:
            self.stdout.write(text, ending='')
            return
        try:
            with open(out, 'w', encoding='utf-8') as stream:
                stream.write(text)
        except OSError as exc:
            raise FormatError(f'cannot write {out}: {exc.strerror}', path=out) from None

    def pair_from_options(self, options):
        """(DensityPair, SystemConfig) from model flags or tabulated files."""
        position_path = options.get('file') or options.get('position')
        if position_path:
            position, cfg = read_tabulated(position_path, q=options['q'],
                                           space=densities.POSITION)
            momentum = None
            if options.get('momentum'):
                momentum, _ = read_tabulated(options['momentum'], q=options['q'],
                                             space=densities.MOMENTUM)
            pair = densities.DensityPair(position=position, momentum=momentum,
                                         label=position.label)
            return pair, cfg
        if options.get('momentum'):
            raise FormatError('--momentum needs --position')
        if not options.get('model'):
            raise FormatError('give --model or --file/--position')
        spec = DensitySpecSerializer(data={
            key: options[key] for key in ('model', 'd', 'a', 'Z', 'lam', 'N', 'q')})
        validated(spec)
        pair = spec.save()
        return pair, pair.config(SystemConfig(d=pair.d, N=pair.N, q=options['q']))
