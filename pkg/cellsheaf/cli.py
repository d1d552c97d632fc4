# -*- coding: utf-8 -*-
# Copyright 2026 The cellsheaf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.


""" The `cellsheaf` command line.  Every subcommand reads one or more text
    documents, prints a line oriented report and returns the exit status:
    0 on success, 1 when an input fails validation and 2 on usage, parse or
    format version errors.
"""

import argparse
import os
import sys

from cellsheaf import VERSION_STRING, reports
from cellsheaf.applications import (
    evasion_cosheaf, evasion_path_analysis, evasion_sets, forced_section_count, forcing,
    nc_duality_check, network_coding_sheaf, routing_decomposition, sensing_les, sensing_sheaf,
    sheaf_homology_check)
from cellsheaf.barcodes import zigzag_decompose
from cellsheaf.derived import (
    DERIVED_FUNCTORS, check_comparison, compactly_supported_via_P, derived_functor,
    equivalence_P, hypercohomology, resolve, verdier_dual)
from cellsheaf.derived.resolutions import INJECTIVE, PROJECTIVE
from cellsheaf.exceptions import (
    CycleDetected, DocumentValidationError, IncompatibleShapes, InconsistentCapacity,
    InvalidField, NotCellularMap, NotExact, NotInjective, NotPathComplex, NotRouting,
    NotSimplicial, ParseError, RedundantCover, ShapeMismatch, UnknownElement,
    UnsupportedFormatVersion)
from cellsheaf.formats import parse_file, serialize
from cellsheaf.functors import pullback, pushforward, pushforward_compact, pushforward_open
from cellsheaf.homology import (
    BOREL_MOORE, COMPACT, ORDINARY, betti_numbers, cech_data_from_cosheaf, cech_homology,
    homology)
from cellsheaf.logger import logger, set_debug
from cellsheaf.pairing import coend
from cellsheaf.sheaves.base import validate_representation
from cellsheaf.topology.cells import validate_complex
from cellsheaf.topology.maps import validate_map

USAGE_ERRORS = (ParseError, UnsupportedFormatVersion, InvalidField, OSError)

INVALID_INPUT_ERRORS = (
    CycleDetected,
    IncompatibleShapes,
    InconsistentCapacity,
    NotCellularMap,
    NotExact,
    NotInjective,
    NotPathComplex,
    NotRouting,
    NotSimplicial,
    RedundantCover,
    ShapeMismatch,
    UnknownElement,
)

PUSH_FUNCTORS = {
    'star': pullback,
    'lower-star': pushforward,
    'dagger': pushforward_open,
    'shriek': pushforward_compact,
}


def validation_of(doc):
    """ The full validation report of a parsed document body """
    body = doc.body
    if doc.kind == 'complex':
        return validate_complex(body)
    if doc.kind in ('sheaf', 'cosheaf'):
        return validate_complex(body.complex).merged(validate_representation(body))
    if doc.kind == 'map':
        return validate_complex(body.source) \
            .merged(validate_complex(body.target)) \
            .merged(validate_map(body))
    if doc.kind == 'nerve':
        return validate_complex(body.complex)
    return validate_complex(body.complex())


def _load(args, path, kinds=None):
    doc = parse_file(path, field=args.field, environ=args.environ)
    if kinds is not None and doc.kind not in kinds:
        raise ParseError('{} expects a {} document, found {}'.format(
            args.command, ' or '.join(kinds), doc.kind), line=1)
    return doc


def _load_valid(args, path, kinds=None):
    doc = _load(args, path, kinds)
    report = validation_of(doc)
    if not report.ok:
        raise DocumentValidationError('{} is not valid'.format(path), report)
    return doc


def _emit(args, report):
    args.out.write(reports.render(report, args.format))


def _require_on(rep, complex_, role):
    if rep.complex != complex_:
        raise ShapeMismatch('the {} must live on the {} of the map'.format(rep.kind, role))


def cmd_validate(args):
    doc = _load(args, args.document)
    report = validation_of(doc)
    _emit(args, reports.validation_report(doc.kind, report))
    return 0 if report.ok else 1


def cmd_cohomology(args):
    sheaf = _load_valid(args, args.document, ('sheaf',)).body
    flavor = COMPACT if args.compact else ORDINARY
    dims = dict(enumerate(betti_numbers(sheaf, flavor)))
    labels = reports.graded_labels('H', dims, False, '_c' if args.compact else '')
    _emit(args, reports.groups_report('cohomology', labels))
    return 0


def cmd_homology(args):
    cosheaf = _load_valid(args, args.document, ('cosheaf',)).body
    flavor = BOREL_MOORE if args.bm else ORDINARY
    dims = dict(enumerate(betti_numbers(cosheaf, flavor)))
    labels = reports.graded_labels('H', dims, True, '^BM' if args.bm else '')
    _emit(args, reports.groups_report('homology', labels))
    return 0


def cmd_cech(args):
    data = cech_data_from_cosheaf(_load_valid(args, args.document, ('cosheaf',)).body)
    dims = {n: cech_homology(data, n) for n in range(data.nerve.dimension + 1)}
    _emit(args, reports.groups_report('cech', reports.graded_labels('H', dims, True),
                                      title='Cech homology'))
    return 0


def cmd_push(args):
    f = _load_valid(args, args.map, ('map',)).body
    rep = _load_valid(args, args.document, ('sheaf', 'cosheaf')).body
    if args.functor == 'star':
        _require_on(rep, f.target, 'target')
    else:
        _require_on(rep, f.source, 'source')

    result = PUSH_FUNCTORS[args.functor](f, rep)
    if args.target_only:
        _emit(args, reports.stalks_report(args.functor, result))
    else:
        args.out.write(serialize(result))
    return 0


def cmd_barcode(args):
    rep = _load_valid(args, args.document, ('sheaf', 'cosheaf')).body
    _emit(args, reports.barcode_report(zigzag_decompose(rep)))
    return 0


def cmd_resolve(args):
    rep = _load_valid(args, args.document, ('sheaf', 'cosheaf')).body
    resolution = resolve(rep, args.kind).check()
    logger.debug('resolution of length %s', resolution.length())
    _emit(args, reports.complex_report('resolve', resolution.elementary))
    return 0


def cmd_derived(args):
    rep = _load_valid(args, args.document, ('sheaf', 'cosheaf')).body
    dims = derived_functor(args.functor, rep)
    if args.degree is not None:
        dims = {args.degree: dims.get(args.degree, 0)}

    homological = args.functor.startswith('L')
    labels = reports.graded_labels(args.functor[0], dims, homological)
    _emit(args, reports.groups_report('derived', labels, title=args.functor,
                                      functor=args.functor))
    return 0


def cmd_equivalence(args):
    sheaf = _load_valid(args, args.document, ('sheaf',)).body
    direct = dict(enumerate(betti_numbers(sheaf, COMPACT)))
    via_P = compactly_supported_via_P(sheaf)
    degrees = sorted(set(direct) | set(via_P))
    agree = all(direct.get(i, 0) == via_P.get(i, 0) for i in degrees)

    labels = reports.graded_labels('H', {i: via_P.get(i, 0) for i in degrees}, False, '_c')
    ok = agree and check_comparison(sheaf)
    _emit(args, reports.complex_report('equivalence', equivalence_P(sheaf), labels, ok))
    return 0 if ok else 1


def cmd_verdier(args):
    sheaf = _load_valid(args, args.document, ('sheaf',)).body
    dual = verdier_dual(sheaf)
    labels = reports.graded_labels('H', hypercohomology(dual), False)
    _emit(args, reports.complex_report('verdier', dual, labels))
    return 0


def cmd_coend(args):
    cosheaf = _load_valid(args, args.cosheaf, ('cosheaf',)).body
    sheaf = _load_valid(args, args.sheaf, ('sheaf',)).body
    _emit(args, reports.groups_report('coend', [('dim', coend(cosheaf, sheaf).dim)]))
    return 0


def cmd_netcode(args):
    graph = _load_valid(args, args.document, ('graph',)).body
    if args.action == 'decompose':
        _emit(args, reports.routing_report(routing_decomposition(graph)))
        return 0

    sheaf = network_coding_sheaf(graph)
    _emit(args, reports.netcode_report(nc_duality_check(sheaf), sheaf_homology_check(sheaf)))
    return 0


def cmd_sense(args):
    if args.action == 'path':
        rep = _load_valid(args, args.document, ('sheaf', 'cosheaf')).body
        verdict = evasion_path_analysis(rep)
        _emit(args, reports.barcode_report(verdict.barcode, verdict))
        return 0

    nerve = _load_valid(args, args.document, ('nerve',)).body
    _, iota = sensing_sheaf(nerve)
    if args.action == 'les':
        les = sensing_les(iota)
        unknown = forcing(les, args.known) if args.known else None
        _emit(args, reports.sequence_report(les, forced_section_count(les), unknown))
        return 0

    evasion = evasion_cosheaf(iota)
    groups = [('H_0(evasion)', homology(evasion, 0).dim)]
    _emit(args, reports.evasion_report(evasion_sets(nerve), groups))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--field',
        default=None,
        help='Field to compute over, Q or F<p>. Overrides the FIELD environment '
             'variable and the document')
    common.add_argument(
        '--format',
        choices=reports.FORMATS,
        default=reports.TEXT,
        help='Report format. default: `text`')
    common.add_argument('--debug', action='store_true', help='Log debug messages')

    parser = argparse.ArgumentParser(
        prog='cellsheaf',
        description='Exact computations with cellular sheaves and cosheaves')
    parser.add_argument('--version', action='version', version=VERSION_STRING)

    sub = parser.add_subparsers(dest='command', required=True)

    def command(name, func, help_text):
        result = sub.add_parser(name, parents=[common], help=help_text)
        result.set_defaults(func=func)
        return result

    v = command('validate', cmd_validate, 'Check a document against the cell complex, '
                'map and commutativity invariants')
    v.add_argument('document')

    c = command('cohomology', cmd_cohomology, 'Sheaf cohomology')
    c.add_argument('document')
    c.add_argument('--compact', action='store_true', help='Compactly supported cohomology')

    h = command('homology', cmd_homology, 'Cosheaf homology')
    h.add_argument('document')
    h.add_argument('--bm', action='store_true', help='Borel-Moore homology')

    ch = command('cech', cmd_cech, 'Cech homology of a cosheaf on a cover nerve')
    ch.add_argument('document')

    p = command('push', cmd_push, 'Pull back or push forward along a map')
    p.add_argument('document')
    p.add_argument('--map', required=True, help='Path to a map document')
    p.add_argument('--functor', required=True, choices=sorted(PUSH_FUNCTORS))
    p.add_argument('--target-only', action='store_true',
                   help='Print only the stalk dimensions of the result')

    b = command('barcode', cmd_barcode, 'Zigzag barcode of a representation on a path')
    b.add_argument('document')

    r = command('resolve', cmd_resolve, 'Canonical elementary resolution')
    r.add_argument('document')
    r.add_argument('--kind', required=True, choices=[INJECTIVE, PROJECTIVE])

    d = command('derived', cmd_derived, 'Derived functor through a resolution')
    d.add_argument('document')
    d.add_argument('--functor', required=True, choices=DERIVED_FUNCTORS)
    d.add_argument('--degree', type=int, default=None, help='Report a single degree')

    e = command('equivalence', cmd_equivalence,
                'Complex of elementary projectives attached to a sheaf')
    e.add_argument('document')

    vd = command('verdier', cmd_verdier, 'Verdier dual of a sheaf')
    vd.add_argument('document')

    co = command('coend', cmd_coend, 'Dimension of the tensor pairing of a cosheaf and a sheaf')
    co.add_argument('cosheaf')
    co.add_argument('sheaf')

    n = command('netcode', cmd_netcode, 'Network coding duality and routing decomposition')
    n.add_argument('action', choices=['check', 'decompose'])
    n.add_argument('document')

    s = command('sense', cmd_sense, 'Sensor evasion analyses')
    s.add_argument('action', choices=['les', 'evade', 'path'])
    s.add_argument('document')
    s.add_argument('--known', type=int, nargs='*', default=None,
                   help='Component counts of the known evasion sets')

    return parser


def main(argv=None, out=None, environ=None):
    args = build_parser().parse_args(argv)
    args.out = out or sys.stdout
    args.environ = os.environ if environ is None else environ
    set_debug(args.debug)

    try:
        return args.func(args)
    except USAGE_ERRORS as e:
        logger.error('%s', e)
        return 2
    except DocumentValidationError as e:
        logger.error('%s', e)
        for line in e.report.describe():
            logger.error('  %s', line)
        return 1
    except INVALID_INPUT_ERRORS as e:
        logger.error('%s: %s', type(e).__name__, e)
        return 1
