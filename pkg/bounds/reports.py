"""Report documents and tabulated-density files.

A :class:`ReportDocument` is what every command and API view produces:
ordered metadata, ordered columns and rows of plain values. It renders to
CSV (metadata as ``# key=value`` comment lines) or JSON, with numbers kept
to the configured number of significant digits.
"""
import csv
import io
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from rest_framework.renderers import JSONRenderer

from . import __version__, conf, constants, densities, varoracle
from .exceptions import FormatError
from .functionals import entropic_moment, fisher_information, radial_moment
from .serializers import (BoundReportSerializer, ExtremalConstantSerializer,
                          MomentValueSerializer)

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json')


def format_number(value, digits=None):
    digits = digits or int(conf.get('SIGNIFICANT_DIGITS'))
    return f'{value:.{digits}g}'


def _plain(value, digits):
    """Value as written to a document: floats rounded, NaN as None."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return None
        return float(format_number(value, digits))
    if isinstance(value, np.integer):
        return int(value)
    return value


def _cell(value, digits):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format_number(value, digits)
    return str(value)


@dataclass
class ReportDocument:
    kind: str
    columns: tuple
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        quad = conf.get('QUADRATURE')
        base = {
            'tool': f'uncrel {__version__}',
            'document': self.kind,
            'rel_tol': quad['REL_TOL'],
            'abs_tol': quad['ABS_TOL'],
        }
        base.update(self.metadata)
        self.metadata = base

    @property
    def digits(self):
        return int(conf.get('SIGNIFICANT_DIGITS'))

    def add(self, **values):
        unknown = set(values) - set(self.columns)
        if unknown:
            raise FormatError(f'unknown columns {sorted(unknown)} for {self.kind}')
        self.rows.append(values)

    def as_data(self):
        digits = self.digits
        return {
            'metadata': {key: _plain(value, digits) for key, value in self.metadata.items()},
            'columns': list(self.columns),
            'rows': [{column: _plain(row.get(column), digits) for column in self.columns}
                     for row in self.rows],
        }

    def to_json(self):
        body = JSONRenderer().render(self.as_data(), renderer_context={'indent': 2})
        return body.decode('utf-8') + '\n'

    def to_csv(self):
        data = self.as_data()
        out = io.StringIO()
        for key, value in data['metadata'].items():
            out.write(f'# {key}={_cell(value, self.digits)}\n')
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(self.columns)
        for row in data['rows']:
            writer.writerow([_cell(row[column], self.digits) for column in self.columns])
        return out.getvalue()

    def render(self, fmt='csv'):
        if fmt not in FORMATS:
            raise FormatError(f'unknown output format {fmt!r}')
        return self.to_json() if fmt == 'json' else self.to_csv()


def error_data(exc):
    return {'error': exc.as_dict()}


def error_json(exc):
    body = JSONRenderer().render(error_data(exc), renderer_context={'indent': 2})
    return body.decode('utf-8') + '\n'


# Tabulated density files

def parse_tabulated(text):
    """Header dict and (r, rho) array of a tabulated-density CSV text."""
    header = {}
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith('#'):
            for token in line[1:].replace(',', ' ').split():
                if '=' in token:
                    key, _, value = token.partition('=')
                    header[key.strip()] = value.strip()
            continue
        fields = [part.strip() for part in line.split(',')]
        if fields == ['r', 'rho']:
            continue
        if len(fields) != 2:
            raise FormatError(f'line {lineno}: expected two columns r,rho', line=lineno)
        try:
            rows.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise FormatError(f'line {lineno}: not a number: {line!r}', line=lineno) from None
    if not rows:
        raise FormatError('tabulated density has no samples')
    return header, np.asarray(rows, dtype=float)


def header_config(header, d=None, N=None, q=2):
    try:
        d = int(header['d']) if d is None else d
    except KeyError:
        raise FormatError('tabulated density header needs d=<int>') from None
    except ValueError:
        raise FormatError(f'bad dimension in header: {header["d"]!r}') from None
    try:
        N = float(header.get('N', 1.0)) if N is None else N
    except ValueError:
        raise FormatError(f'bad particle count in header: {header["N"]!r}') from None
    return constants.SystemConfig(d=d, N=N, q=q)


def read_tabulated(path, q=2, space=None):
    try:
        with open(path, encoding='utf-8') as stream:
            text = stream.read()
    except OSError as exc:
        raise FormatError(f'cannot read {path}: {exc.strerror}', path=path) from None
    except UnicodeDecodeError as exc:
        raise FormatError(f'{path} is not UTF-8 text: {exc.reason} at byte {exc.start}',
                          path=path) from None
    header, samples = parse_tabulated(text)
    cfg = header_config(header, q=q)
    space = space or header.get('space', densities.POSITION)
    if space not in densities.SPACES:
        raise FormatError(f'bad space in header: {space!r}')
    density = densities.load_tabulated(cfg, samples, space=space, label=str(path))
    return density, cfg


def tabulated_text(density, n=400, r_max=None):
    samples = densities.sample_grid(density, n=n, r_max=r_max)
    lines = [f'# d={density.d}', f'# N={format_number(density.N)}',
             f'# space={density.space}', 'r,rho']
    lines += [f'{format_number(r, 17)},{format_number(rho, 17)}' for r, rho in samples]
    return '\n'.join(lines) + '\n'


def write_tabulated(density, path, n=400, r_max=None):
    with open(path, 'w', encoding='utf-8') as stream:
        stream.write(tabulated_text(density, n=n, r_max=r_max))


# Documents

def table1_document():
    doc = ReportDocument('table1', ('d', 'k', 'B', 'printed', 'abs_diff'))
    for k in range(1, 5):
        for d in range(1, 5):
            value = constants.B_daubechies(d, k)
            printed = constants.TABLE1_PRINTED[(d, k)]
            doc.add(d=d, k=k, B=value, printed=printed, abs_diff=abs(value - printed))
    return doc


def table2_document():
    doc = ReportDocument(
        'table2', ('alpha', 'k', 'coefficient', 'exponent', 'closed_form',
                   'rel_diff', 'printed_exponent', 'note'),
        metadata={'d': 3, 'q': 2})
    for alpha in range(1, 5):
        for k in range(1, 5):
            coefficient = constants.table2_coefficient(alpha, k)
            closed = constants.table2_closed_form(alpha, k)
            exponent = constants.heisenberg_exponent_fraction(3, alpha, k)
            printed = constants.TABLE2_PRINTED_EXPONENTS[(alpha, k)]
            notes = []
            if printed != exponent:
                logger.warning('electronic table cell (alpha=%s, k=%s): printed exponent %s, '
                               'generalized relation gives %s', alpha, k, printed, exponent)
                notes.append(f'printed exponent {printed}')
            coefficient_note = constants.TABLE2_PRINTED_COEFFICIENT_NOTES.get((alpha, k))
            if coefficient_note:
                logger.warning('electronic table cell (alpha=%s, k=%s): %s',
                               alpha, k, coefficient_note)
                notes.append(coefficient_note)
            doc.add(alpha=alpha, k=k, coefficient=coefficient, exponent=exponent,
                    closed_form=closed, rel_diff=abs(coefficient - closed) / closed,
                    printed_exponent=printed, note='; '.join(notes))
    return doc


MOMENT_COLUMNS = ('space', 'kind', 'order', 'value', 'method', 'est_error', 'convention')


def moments_document(density_by_space, orders=(), entropic=(), fisher=False, cfg=None):
    """Moments of one or both sides of a pair, keyed by space name."""
    metadata = {}
    if cfg is not None:
        metadata.update(d=cfg.d, N=cfg.N, q=cfg.q)
    doc = ReportDocument('moments', MOMENT_COLUMNS, metadata=metadata)
    for space, density in density_by_space.items():
        if density is None:
            continue
        doc.metadata[f'{space}_label'] = density.label
        doc.metadata[f'{space}_N'] = density.N
        values = [radial_moment(density, order) for order in orders]
        values += [entropic_moment(density, m) for m in entropic]
        if fisher:
            values.append(fisher_information(density))
        for value in values:
            doc.add(space=space, **MomentValueSerializer(value).data)
    return doc


REPORT_COLUMNS = tuple(BoundReportSerializer().fields)


def reports_document(kind, reports, metadata=None):
    doc = ReportDocument(kind, REPORT_COLUMNS, metadata=dict(metadata or {}))
    for report in reports:
        doc.add(**BoundReportSerializer(report).data)
    return doc


ORACLE_COLUMNS = tuple(ExtremalConstantSerializer().fields)


def oracle_document(mode, d=None, alpha=None, k=None):
    if mode == 'grid':
        rows = varoracle.oracle_grid()
    elif mode == 'F':
        rows = [varoracle.extremal_F(d, alpha, k)]
    elif mode == 'G':
        rows = [varoracle.extremal_G(d, alpha, k)]
    else:
        raise FormatError(f'unknown oracle mode {mode!r}')
    doc = ReportDocument('oracle', ORACLE_COLUMNS, metadata={'mode': mode})
    for row in rows:
        doc.add(**ExtremalConstantSerializer(row).data)
    return doc
