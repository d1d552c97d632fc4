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


import itertools


def freeze(item):
    if isinstance(item, dict):
        return frozenset((key, freeze(value)) for (key, value) in item.items())

    if isinstance(item, (list, tuple)):
        return tuple(map(freeze, item))

    if isinstance(item, set):
        return frozenset(map(freeze, item))

    return item


def pairwise(items):
    first, second = itertools.tee(items)
    next(second, None)
    return zip(first, second)


def cell_order_key(dims):
    """ Sort key implementing the deterministic (dimension, id) order used for
        every basis in the package.

        :param dims: map from cell id to dimension
        :type dims: dict
        :returns: a key function suitable for `sorted`
    """
    def key(cell):
        return (dims[cell], cell)

    return key


def offsets(sizes):
    """ Running offsets of consecutive blocks, keyed like `sizes`.
        `sizes` is a sequence of (key, size) pairs.
    """
    result = {}
    position = 0
    for (key, size) in sizes:
        result[key] = position
        position += size

    return result, position


def parse_bool(text):
    lowered = text.strip().lower()
    if lowered in ('true', 'yes', '1'):
        return True
    if lowered in ('false', 'no', '0'):
        return False

    raise ValueError('not a boolean: `{}`'.format(text))
