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



""" Run-time configuration: which field to compute over and which document
    format versions are readable.
"""

import os

import semver

from cellsheaf import FORMAT_VERSION, MIN_SUPPORTED_FORMAT_VERSION
from cellsheaf.exceptions import UnsupportedFormatVersion
from cellsheaf.linalg.field import get_field
from cellsheaf.logger import logger

FIELD_VARIABLE = 'FIELD'
DEFAULT_FIELD = 'Q'


def resolve_field(flag=None, document=None, environ=None):
    """ The field named by the CLI flag, else the FIELD environment
        variable, else the document, else Q.

        :raises InvalidField: when the winning tag is malformed
    """
    environ = os.environ if environ is None else environ
    for (source, tag) in (('flag', flag), ('environment', environ.get(FIELD_VARIABLE))):
        if tag:
            if document and document != tag:
                logger.warning('document asks for field %s, using %s from the %s',
                               document, tag, source)
            return get_field(tag)

    return get_field(document or DEFAULT_FIELD)


def check_format_version(text):
    """ Accept versions with the supported major number that are neither
        older than the minimum nor newer than the current format.
    """
    version = semver.VersionInfo.parse(text)
    if version.major != FORMAT_VERSION.major or \
            version < MIN_SUPPORTED_FORMAT_VERSION or version > FORMAT_VERSION:
        raise UnsupportedFormatVersion(
            'document format {} is not supported; this is format {} (oldest readable {})'.format(
                version, FORMAT_VERSION, MIN_SUPPORTED_FORMAT_VERSION))
    return version
