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



""" Turns text documents into core objects.

    Parsing checks the grammar and the record types.  Whether the result is
    a valid complex, sheaf or map is left to the validators, so that a
    `validate` run can report every violation.
"""

from collections import namedtuple

import marshmallow as ma

from cellsheaf.applications.netcode import CodedGraph
from cellsheaf.applications.sensing import SensorNerve
from cellsheaf.config import check_format_version, resolve_field
from cellsheaf.exceptions import IncompatibleShapes, ParseError
from cellsheaf.formats.lexer import lex
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.logger import logger
from cellsheaf.schemas.records import RECORDS
from cellsheaf.sheaves.base import CellCosheaf, CellSheaf
from cellsheaf.topology.cells import CellComplex
from cellsheaf.topology.maps import CellularMap, PosetMap

Document = namedtuple('Document', ['kind', 'version', 'field', 'body'])

HEADER = ('kind', 'format', 'field')

ALLOWED = {
    'complex': ('cell', 'cover'),
    'sheaf': ('cell', 'cover', 'stalk', 'map'),
    'cosheaf': ('cell', 'cover', 'stalk', 'map'),
    'map': ('begin', 'end', 'cell', 'cover', 'assign', 'cellular'),
    'nerve': ('ambient', 'sensor', 'simplex'),
    'graph': ('vertex', 'edge', 'coding'),
}

Loaded = namedtuple('Loaded', ['line', 'keyword', 'data', 'section'])


def load_record(record):
    """ Name the positional arguments and load them through the schema """
    if record.keyword not in RECORDS:
        raise ParseError('unknown record `{}`'.format(record.keyword), line=record.line)

    (schema, names, variadic) = RECORDS[record.keyword]
    args = list(record.args)
    data = {}
    if variadic:
        data[names[-1]] = args[len(names) - 1:]
        args = args[:len(names) - 1]
        names = names[:-1]
    if len(args) > len(names):
        raise ParseError('`{}` takes {} positional arguments, got {}'.format(
            record.keyword, len(names), len(args)), line=record.line)

    data.update(zip(names, args))
    for (key, value) in record.options.items():
        if key in data:
            raise ParseError('`{}` given twice'.format(key), line=record.line)
        data[key] = value

    try:
        return schema().load(data)
    except ma.ValidationError as e:
        raise ParseError('invalid `{}` record: {}'.format(record.keyword, e.messages),
                         line=record.line)


def load_records(text):
    """ :returns: (header dict, list of Loaded body records) """
    header, body = {}, []
    section = None
    for record in lex(text):
        data = load_record(record)
        keyword = record.keyword
        if keyword in HEADER:
            if body:
                raise ParseError('`{}` must precede the body'.format(keyword), line=record.line)
            if keyword in header:
                raise ParseError('`{}` given twice'.format(keyword), line=record.line)
            header[keyword] = data
            continue

        if keyword == 'begin':
            if section is not None:
                raise ParseError('section `{}` is still open'.format(section), line=record.line)
            section = data['section']
        elif keyword == 'end':
            if section != data['section']:
                raise ParseError('`end {}` closes no open section'.format(data['section']),
                                 line=record.line)
            section = None
        body.append(Loaded(record.line, keyword, data, section))

    if section is not None:
        raise ParseError('section `{}` is never closed'.format(section))
    if 'kind' not in header:
        raise ParseError('document has no `kind` record', line=1)
    return header, body


def _matrix(field, loaded, cols):
    rows = loaded.data['rows']
    try:
        return Matrix.from_rows(field, rows, cols)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(str(e), line=loaded.line)
    except IncompatibleShapes as e:
        raise ParseError(str(e), line=loaded.line)


def _complex(records):
    cells = [(r.data['id'], r.data['dim'], r.data['compact'])
             for r in records if r.keyword == 'cell']
    covers = [(r.data['face'], r.data['coface'], r.data['sign'])
              for r in records if r.keyword == 'cover']
    return CellComplex.from_records(cells, covers)


def _representation(kind, records, field):
    cls = CellSheaf if kind == 'sheaf' else CellCosheaf
    complex_ = _complex(records)
    stalks = {}
    for r in records:
        if r.keyword == 'stalk':
            complex_.check_cell(r.data['cell'])
            stalks[r.data['cell']] = r.data['dim']

    maps = {}
    for r in records:
        if r.keyword != 'map':
            continue
        pair = (r.data['face'], r.data['coface'])
        source = pair[0] if cls.covariant else pair[1]
        maps[pair] = _matrix(field, r, stalks.get(source, 0))
    return cls(complex_, stalks, maps, field)


def _map(records):
    source = _complex([r for r in records if r.section == 'source'])
    target = _complex([r for r in records if r.section == 'target'])
    assigns = [r.data for r in records if r.keyword == 'assign']
    assignment = {a['cell']: a['image'] for a in assigns}
    cellular = [r.data['value'] for r in records if r.keyword == 'cellular']
    if cellular and cellular[-1]:
        return CellularMap(source, target, assignment,
                           {a['cell']: a['fiber_compact'] for a in assigns})
    return PosetMap(source, target, assignment)


def _nerve(records, field):
    ambient = [r.data['dim'] for r in records if r.keyword == 'ambient']
    if len(ambient) != 1:
        raise ParseError('a nerve needs exactly one `ambient` record')

    simplices = [r.data['vertices'] for r in records if r.keyword == 'simplex']
    covectors = {}
    for r in records:
        if r.keyword == 'sensor':
            covectors[r.data['vertex']] = r.data['covectors']
            simplices.append([r.data['vertex']])
    for r in records:
        if r.keyword == 'sensor' and any(len(c) != ambient[0] for c in r.data['covectors']):
            raise ParseError('covectors of `{}` must have {} entries'.format(
                r.data['vertex'], ambient[0]), line=r.line)

    try:
        return SensorNerve.from_covectors(simplices, ambient[0], covectors, field)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(str(e))


def _graph(records, field):
    def end(name):
        return None if name == '-' else name

    vertices = {r.data['id']: r.data['capacity'] for r in records if r.keyword == 'vertex'}
    edges = {r.data['id']: (end(r.data['tail']), end(r.data['head']))
             for r in records if r.keyword == 'edge'}
    capacities = {r.data['id']: r.data['capacity'] for r in records if r.keyword == 'edge'}
    graph = CodedGraph(vertices, edges, capacities, field=field)
    codings = {}
    for r in records:
        if r.keyword == 'coding':
            vertex = r.data['vertex']
            if vertex not in vertices:
                raise ParseError('coding for undeclared vertex `{}`'.format(vertex), line=r.line)
            codings[vertex] = _matrix(field, r, graph.vertex_capacity(vertex))
    graph.codings = codings
    return graph


def parse(text, kind=None, field=None, environ=None):
    """ Parse a document.

        :param kind: the expected document kind, if any
        :param field: field tag from the command line, overriding the
            environment and the document
        :returns: Document whose body is the core object
        :raises ParseError: on grammar, record or kind errors
        :raises UnsupportedFormatVersion: on an unreadable format version
    """
    header, body = load_records(text)
    doc_kind = header['kind']['kind']
    if kind is not None and doc_kind != kind:
        raise ParseError('expected a {} document, found {}'.format(kind, doc_kind), line=1)

    version = None
    if 'format' in header:
        version = check_format_version(header['format']['version'])

    document_field = header.get('field', {}).get('tag')
    selected = resolve_field(field, document_field, environ)

    for r in body:
        if r.keyword not in ALLOWED[doc_kind]:
            raise ParseError('`{}` records do not belong in a {} document'.format(
                r.keyword, doc_kind), line=r.line)
        if doc_kind == 'map' and r.keyword in ('cell', 'cover') and r.section is None:
            raise ParseError('cells of a map document live in a source or target section',
                             line=r.line)

    if doc_kind == 'complex':
        result = _complex(body)
    elif doc_kind in ('sheaf', 'cosheaf'):
        result = _representation(doc_kind, body, selected)
    elif doc_kind == 'map':
        result = _map(body)
    elif doc_kind == 'nerve':
        result = _nerve(body, selected)
    else:
        result = _graph(body, selected)

    logger.debug('parsed %s document: %s', doc_kind, result)
    return Document(kind=doc_kind, version=version, field=selected, body=result)


def parse_file(path, kind=None, field=None, environ=None):
    with open(path) as _in:
        return parse(_in.read(), kind, field, environ)
