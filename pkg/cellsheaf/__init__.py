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

from importlib import metadata

import semver

_UNINSTALLED_VERSION = '0.4.0'


def get_version_string():
    try:
        version = metadata.version('cellsheaf')
    except metadata.PackageNotFoundError:
        return _UNINSTALLED_VERSION

    # Pip seems to replace '-' with '.' in the version strings, for some reason.
    # this makes semver unhappy, so we must replace .dev0 with -dev0
    if not version.endswith('.dev0'):
        return version

    dev0_position = version.rindex('.dev0')
    return version[:dev0_position] + '-' + version[1 + dev0_position:]


VERSION_STRING = get_version_string()
VERSION = semver.VersionInfo.parse(VERSION_STRING)

# Text documents carry their own format version, independent of the package
FORMAT_VERSION = semver.VersionInfo.parse('1.1.0')
MIN_SUPPORTED_FORMAT_VERSION = semver.VersionInfo.parse('1.0.0')
