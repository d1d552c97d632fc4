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

""" Define some exception classes to aid in testing, i.e to make sure that
    complexes, sheaves and documents are being rejected for appropriate reasons
"""


class CycleDetected(Exception):
    pass


class RedundantCover(Exception):
    pass


class UnknownElement(Exception):
    pass


class UnknownCell(UnknownElement):
    pass


class NotSimplicial(Exception):
    pass


class NotCellularMap(Exception):
    pass


class IncompatibleShapes(Exception):
    pass


class ShapeMismatch(Exception):
    pass


class NotExact(Exception):
    pass


class NotCommuting(Exception):
    pass


class NotAnticommuting(Exception):
    pass


class NotPathComplex(Exception):
    pass


class NotManifoldData(Exception):
    pass


class InconsistentCapacity(Exception):
    pass


class NotRouting(Exception):
    pass


class NotInjective(Exception):
    pass


class InvalidField(Exception):
    pass


class UnsupportedFormatVersion(Exception):
    pass


class DocumentValidationError(Exception):
    def __init__(self, message, report=None):
        super(DocumentValidationError, self).__init__(message)
        self.report = report


class ParseError(Exception):
    def __init__(self, message, line=None, column=None):
        location = ''
        if line is not None:
            location = 'line {}'.format(line)
            if column is not None:
                location += ', column {}'.format(column)
            location += ': '

        super(ParseError, self).__init__(location + message)
        self.line = line
        self.column = column


class InvalidCorpus(Exception):
    pass


class DuplicateFixtureName(InvalidCorpus):
    pass
