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


# Writes reports as YAML with the identifying keys first, then scalars,
# then shorter collections before longer ones, so diffs stay readable.
import functools
from collections import OrderedDict

import yaml


def _build_dumper():
    class OrderedDumper(yaml.SafeDumper):
        pass

    def _dict_representer(dumper, data):
        return dumper.represent_mapping(
            yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG,
            data.items())

    OrderedDumper.add_representer(OrderedDict, _dict_representer)
    OrderedDumper.add_representer(tuple, OrderedDumper.represent_list)

    return OrderedDumper


PRIORITY_KEYS = [
    'command',
    'kind',
    'field',
    'ok',
    'verdict',
    'degree',
    'functor',
]


def _score(key, value):
    if key in PRIORITY_KEYS:
        return PRIORITY_KEYS.index(key) - len(PRIORITY_KEYS)

    return len(value) if isinstance(value, (dict, list, tuple)) else 0


def _compare(kv0, kv1):
    score0, score1 = _score(*kv0), _score(*kv1)
    if score0 != score1:
        return 1 if score0 > score1 else -1

    key0, key1 = str(kv0[0]), str(kv1[0])
    if key0 == key1:
        return 0
    return 1 if key0 > key1 else -1


def _reorder(item):
    if isinstance(item, (list, tuple)):
        return [_reorder(value) for value in item]

    if not isinstance(item, dict):
        return item

    result = OrderedDict()
    for (key, value) in sorted(item.items(), key=functools.cmp_to_key(_compare)):
        result[key] = _reorder(value)

    return result


def dump_all(items):
    return yaml.dump_all(
        [_reorder(item) for item in items],
        None,
        _build_dumper(),
        default_flow_style=False)


def dump(item):
    return dump_all([item])
