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


import re

import marshmallow as ma

_SCALAR_RE = re.compile(r'^[+-]?[0-9]+(?:/[0-9]+)?$')


class StrictSchema(ma.Schema):
    """ Rejects unrecognized keys so a misspelled option never falls back
        to its default silently.
    """

    class Meta:
        unknown = ma.RAISE


class Scalar(ma.fields.String):
    """ An exact scalar written as an integer or `p/q` """

    def _deserialize(self, value, attr, data, **kwargs):
        text = super(Scalar, self)._deserialize(str(value), attr, data, **kwargs).strip()
        if not _SCALAR_RE.match(text):
            raise ma.ValidationError('`{}` is not an integer or a fraction p/q'.format(text))
        if '/' in text and int(text.split('/')[1]) == 0:
            raise ma.ValidationError('`{}` has a zero denominator'.format(text))
        return text


class MatrixRows(ma.fields.List):
    """ A list of equally long rows of scalars """

    def __init__(self, **kwargs):
        super(MatrixRows, self).__init__(ma.fields.List(Scalar()), **kwargs)

    def _deserialize(self, value, attr, data, **kwargs):
        rows = super(MatrixRows, self)._deserialize(value, attr, data, **kwargs)
        widths = set(len(row) for row in rows)
        if len(widths) > 1:
            raise ma.ValidationError('rows have different lengths {}'.format(sorted(widths)))
        return rows
