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



""" One schema per record keyword of the text document grammar.  Positional
    arguments are named by `POSITIONAL` before loading.
"""

import marshmallow as ma
import semver

from cellsheaf.schemas.base import MatrixRows, Scalar, StrictSchema

KINDS = ('complex', 'sheaf', 'cosheaf', 'map', 'nerve', 'graph')
SECTIONS = ('source', 'target')


class KindSchema(StrictSchema):
    kind = ma.fields.String(required=True, validate=ma.validate.OneOf(KINDS))


class FormatSchema(StrictSchema):
    version = ma.fields.String(required=True)

    @ma.validates('version')
    def check_version(self, value, **kwargs):
        try:
            semver.VersionInfo.parse(value)
        except ValueError:
            raise ma.ValidationError('`{}` is not a semantic version'.format(value))


class FieldSchema(StrictSchema):
    tag = ma.fields.String(required=True, validate=ma.validate.Regexp(r'^(Q|F[0-9]+)$'))


class CellSchema(StrictSchema):
    id = ma.fields.String(required=True)
    dim = ma.fields.Integer(required=True, validate=ma.validate.Range(min=0))
    compact = ma.fields.Boolean(load_default=True)


class CoverSchema(StrictSchema):
    face = ma.fields.String(required=True)
    coface = ma.fields.String(required=True)
    sign = ma.fields.Integer(required=True, validate=ma.validate.OneOf((-1, 1)))


class StalkSchema(StrictSchema):
    cell = ma.fields.String(required=True)
    dim = ma.fields.Integer(required=True, validate=ma.validate.Range(min=0))


class MapSchema(StrictSchema):
    face = ma.fields.String(required=True)
    coface = ma.fields.String(required=True)
    rows = MatrixRows(required=True)


class SectionSchema(StrictSchema):
    section = ma.fields.String(required=True, validate=ma.validate.OneOf(SECTIONS))


class AssignSchema(StrictSchema):
    cell = ma.fields.String(required=True)
    image = ma.fields.String(required=True)
    fiber_compact = ma.fields.Boolean(load_default=True)


class CellularSchema(StrictSchema):
    value = ma.fields.Boolean(required=True)


class AmbientSchema(StrictSchema):
    dim = ma.fields.Integer(required=True, validate=ma.validate.Range(min=0))


class SensorSchema(StrictSchema):
    vertex = ma.fields.String(required=True)
    covectors = MatrixRows(load_default=list)


class SimplexSchema(StrictSchema):
    vertices = ma.fields.List(ma.fields.String(), required=True,
                              validate=ma.validate.Length(min=1))


class VertexSchema(StrictSchema):
    id = ma.fields.String(required=True)
    capacity = ma.fields.Integer(load_default=0, validate=ma.validate.Range(min=0))


class EdgeSchema(StrictSchema):
    id = ma.fields.String(required=True)
    tail = ma.fields.String(required=True)
    head = ma.fields.String(required=True)
    capacity = ma.fields.Integer(load_default=1, validate=ma.validate.Range(min=0))

    @ma.validates_schema
    def check_attached(self, data, **kwargs):
        if data['tail'] == '-' and data['head'] == '-':
            raise ma.ValidationError('edge `{}` has neither tail nor head'.format(data['id']))


class CodingSchema(StrictSchema):
    vertex = ma.fields.String(required=True)
    rows = MatrixRows(required=True)


# keyword -> (schema, names of the positional arguments, variadic last)
RECORDS = {
    'kind': (KindSchema, ('kind',), False),
    'format': (FormatSchema, ('version',), False),
    'field': (FieldSchema, ('tag',), False),
    'cell': (CellSchema, ('id',), False),
    'cover': (CoverSchema, ('face', 'coface'), False),
    'stalk': (StalkSchema, ('cell', 'dim'), False),
    'map': (MapSchema, ('face', 'coface'), False),
    'begin': (SectionSchema, ('section',), False),
    'end': (SectionSchema, ('section',), False),
    'assign': (AssignSchema, ('cell', 'image'), False),
    'cellular': (CellularSchema, ('value',), False),
    'ambient': (AmbientSchema, ('dim',), False),
    'sensor': (SensorSchema, ('vertex',), False),
    'simplex': (SimplexSchema, ('vertices',), True),
    'vertex': (VertexSchema, ('id',), False),
    'edge': (EdgeSchema, ('id', 'tail', 'head'), False),
    'coding': (CodingSchema, ('vertex',), False),
}
