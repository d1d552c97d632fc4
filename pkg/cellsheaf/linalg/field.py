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


""" Exact scalar fields.  A field is identified by its tag: `Q` for the
    rationals or `F<p>` for the prime field with p elements.  Scalars are the
    element type of the matching sympy polys domain.
"""

import functools
import re
from fractions import Fraction

import sympy
from sympy.polys.domains import QQ, GF

from cellsheaf.exceptions import InvalidField

_TAG_RE = re.compile(r'^(?:Q|F(?P<prime>[0-9]+))$')
_SCALAR_RE = re.compile(r'^\s*(?P<num>[+-]?[0-9]+)\s*(?:/\s*(?P<den>[0-9]+)\s*)?$')


class Field(object):
    def __init__(self, tag):
        match = _TAG_RE.match(tag or '')
        if not match:
            raise InvalidField('Invalid field tag `{}`: expected Q or F<p>'.format(tag))

        self.tag = tag
        if match.group('prime') is None:
            self.characteristic = 0
            self.domain = QQ
        else:
            prime = int(match.group('prime'))
            if not sympy.isprime(prime):
                raise InvalidField('Field tag `{}` does not name a prime field'.format(tag))
            self.characteristic = prime
            self.domain = GF(prime, symmetric=False)

        self.zero = self.domain.zero
        self.one = self.domain.one

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('Field', self.tag))

    def __repr__(self):
        return 'Field({})'.format(self.tag)

    def convert(self, value):
        """ Convert an int, Fraction, scalar string or domain element """
        if isinstance(value, str):
            return self.parse(value)

        if isinstance(value, Fraction):
            return self.divide(self.domain.convert(value.numerator),
                               self.domain.convert(value.denominator))

        if isinstance(value, int):
            return self.domain.convert(value)

        if self.domain.of_type(value):
            return value

        return self.domain.convert(value)

    def parse(self, text):
        match = _SCALAR_RE.match(text)
        if not match:
            raise ValueError('Invalid scalar `{}`'.format(text))

        numerator = self.domain.convert(int(match.group('num')))
        if match.group('den') is None:
            return numerator

        return self.divide(numerator, self.domain.convert(int(match.group('den'))))

    def divide(self, numerator, denominator):
        if not denominator:
            raise ZeroDivisionError('division by zero in field {}'.format(self.tag))

        return self.domain.quo(numerator, denominator)

    def to_text(self, value):
        if self.characteristic:
            return str(int(self.domain.to_int(value)) % self.characteristic)

        numerator, denominator = int(value.numerator), int(value.denominator)
        if denominator == 1:
            return str(numerator)

        return '{}/{}'.format(numerator, denominator)

    def to_fraction(self, value):
        if self.characteristic:
            return Fraction(int(self.domain.to_int(value)) % self.characteristic)

        return Fraction(int(value.numerator), int(value.denominator))

    def random_element(self, rng, bound=3):
        return self.convert(rng.randint(-bound, bound))


@functools.lru_cache(maxsize=None)
def get_field(tag):
    return Field(tag)


RATIONALS = get_field('Q')
