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


import os
from collections import namedtuple

import marshmallow as ma
import yaml

from cellsheaf.config import check_format_version
from cellsheaf.exceptions import DuplicateFixtureName, InvalidCorpus
from cellsheaf.formats import parse_file
from cellsheaf.logger import logger
from cellsheaf.schemas import KINDS, StrictSchema

DEFAULT_ROOT = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                            'corpus')
INDEX_FILENAME = 'index.yaml'

Fixture = namedtuple('Fixture', ['name', 'path', 'kind', 'topic', 'pairs_with', 'expect'])


class FixtureSchema(StrictSchema):
    name = ma.fields.String(required=True)
    path = ma.fields.String(required=True)
    kind = ma.fields.String(required=True, validate=ma.validate.OneOf(KINDS))
    topic = ma.fields.String(required=True)
    pairs_with = ma.fields.String(load_default=None)
    expect = ma.fields.Dict(keys=ma.fields.String(), load_default=dict)


class IndexSchema(StrictSchema):
    format = ma.fields.String(required=True)
    fixtures = ma.fields.List(ma.fields.Nested(FixtureSchema), required=True)


class Corpus(object):
    """ The fixture documents under `root`, listed by its index file """

    def __init__(self, root=None):
        self.root = root or DEFAULT_ROOT
        self._fixtures = self.load_index()

    def __len__(self):
        return len(self._fixtures)

    def __iter__(self):
        return iter(self._fixtures.values())

    def load_index(self):
        filename = os.path.join(self.root, INDEX_FILENAME)
        with open(filename) as _in:
            item = yaml.safe_load(_in)

        logger.debug('validating corpus index %s', filename)
        try:
            loaded = IndexSchema().load(item)
        except ma.ValidationError as e:
            raise InvalidCorpus('Invalid corpus index {}: {}'.format(filename, e.messages))

        check_format_version(loaded['format'])

        fixtures = {}
        duplicates = set()
        for entry in loaded['fixtures']:
            fixture = Fixture(**entry)
            if fixture.name in fixtures:
                duplicates.add(fixture.name)
                continue
            if not os.path.isfile(self.path_of(fixture.path)):
                raise InvalidCorpus('fixture `{}` points at missing file {}'.format(
                    fixture.name, fixture.path))
            fixtures[fixture.name] = fixture

        if duplicates:
            raise DuplicateFixtureName('Duplicate fixture names in corpus index: `{}`'.format(
                '`, `'.join(sorted(duplicates))))

        return fixtures

    def path_of(self, relative):
        return os.path.join(self.root, relative)

    def get(self, name):
        if name not in self._fixtures:
            raise KeyError('No fixture named `{}`'.format(name))
        return self._fixtures[name]

    def by_topic(self, topic):
        return [f for f in self._fixtures.values() if f.topic == topic]

    def with_expectation(self, key):
        return [f for f in self._fixtures.values() if key in f.expect]

    def load(self, fixture, field=None, environ=None):
        """ Parse a fixture, given by name or Fixture, into a Document """
        if not isinstance(fixture, Fixture):
            fixture = self.get(fixture)
        return parse_file(self.path_of(fixture.path), fixture.kind, field, environ)

    def load_partner(self, fixture, field=None, environ=None):
        """ The representation document a map fixture is paired with """
        if not isinstance(fixture, Fixture):
            fixture = self.get(fixture)
        if fixture.pairs_with is None:
            raise KeyError('fixture `{}` has no partner document'.format(fixture.name))
        return parse_file(self.path_of(fixture.pairs_with), None, field, environ)


def load_corpus(root=None):
    return Corpus(root)
