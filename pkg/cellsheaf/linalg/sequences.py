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


""" Long exact sequences from short exact sequences of complexes, with the
    connecting map built by lifting, differentiating and pulling back.
"""

from cellsheaf.containers import LesNode
from cellsheaf.exceptions import NotExact
from cellsheaf.linalg.chains import check_chain_map
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.logger import logger


class LongExactSequence(object):
    def __init__(self, nodes, maps):
        self.nodes = nodes
        self.maps = maps

    def __repr__(self):
        return 'LongExactSequence({})'.format(
            ' -> '.join('{}={}'.format(n.label, n.dim) for n in self.nodes))

    def dims(self):
        return [node.dim for node in self.nodes]

    def node(self, label):
        for node in self.nodes:
            if node.label == label:
                return node
        raise KeyError(label)

    def map_between(self, source_label, target_label):
        for (index, matrix) in enumerate(self.maps):
            if (self.nodes[index].label, self.nodes[index + 1].label) == \
                    (source_label, target_label):
                return matrix
        raise KeyError((source_label, target_label))

    def ranks(self):
        return [matrix.rank() for matrix in self.maps]

    def exactness_failures(self):
        """ Indices of interior nodes where im != ker """
        failures = []
        for k in range(1, len(self.nodes) - 1):
            incoming, outgoing = self.maps[k - 1], self.maps[k]
            composite_zero = (outgoing @ incoming).is_zero()
            if not composite_zero or incoming.rank() + outgoing.rank() != self.nodes[k].dim:
                failures.append(k)

        # The two ends are flanked by zero groups
        if self.maps:
            if self.maps[0].rank() != self.nodes[0].dim:
                failures.append(0)
            if self.maps[-1].rank() != self.nodes[-1].dim:
                failures.append(len(self.nodes) - 1)

        return failures

    def is_exact(self):
        return not self.exactness_failures()


def _map(components, field, rows, cols, degree):
    matrix = components.get(degree)
    if matrix is None:
        return Matrix.zeros(field, rows, cols)
    return matrix


def check_short_exact(a, b, c, inclusion, projection):
    field = a.field
    degrees = sorted(set(a.degrees()) | set(b.degrees()) | set(c.degrees()))
    for n in degrees:
        i_n = _map(inclusion, field, b.dim(n), a.dim(n), n)
        q_n = _map(projection, field, c.dim(n), b.dim(n), n)
        if i_n.rank() != a.dim(n):
            raise NotExact('inclusion is not injective in degree {}'.format(n))
        if q_n.rank() != c.dim(n):
            raise NotExact('projection is not surjective in degree {}'.format(n))
        if not (q_n @ i_n).is_zero() or a.dim(n) + c.dim(n) != b.dim(n):
            raise NotExact('sequence is not exact in the middle in degree {}'.format(n))


def les_from_ses(a, b, c, inclusion, projection, names=('A', 'B', 'C')):
    """ Assemble the long exact sequence of 0 -> A -> B -> C -> 0.

        :param inclusion: map degree -> Matrix A^n -> B^n
        :param projection: map degree -> Matrix B^n -> C^n
        :returns: LongExactSequence, verified exact
    """
    check_chain_map(a, b, inclusion)
    check_chain_map(b, c, projection)
    check_short_exact(a, b, c, inclusion, projection)

    field, step = a.field, a.step
    populated = set(a.degrees()) | set(b.degrees()) | set(c.degrees())
    degrees = list(range(min(populated), max(populated) + 1)) if populated else []
    if step < 0:
        degrees = list(reversed(degrees))

    mark = '_' if a.homological else '^'
    groups = {}
    for n in degrees:
        groups[n] = (a.homology(n), b.homology(n), c.homology(n))

    nodes, maps = [], []
    for (index, n) in enumerate(degrees):
        h_a, h_b, h_c = groups[n]
        i_n = _map(inclusion, field, b.dim(n), a.dim(n), n)
        q_n = _map(projection, field, c.dim(n), b.dim(n), n)

        nodes.extend([
            LesNode('H{}{}({})'.format(mark, n, names[0]), h_a.dim),
            LesNode('H{}{}({})'.format(mark, n, names[1]), h_b.dim),
            LesNode('H{}{}({})'.format(mark, n, names[2]), h_c.dim),
        ])
        maps.append(b.class_coordinates(n, i_n @ h_a.witnesses))
        maps.append(c.class_coordinates(n, q_n @ h_b.witnesses))

        if index + 1 < len(degrees):
            maps.append(_connecting(a, b, inclusion, projection, n, h_c, groups[n + step][0]))

    result = LongExactSequence(nodes, maps)
    failures = result.exactness_failures()
    if failures:
        raise NotExact('assembled sequence fails exactness at {}'.format(
            [nodes[k].label for k in failures]))

    logger.debug('long exact sequence: %s', result)
    return result


def _connecting(a, b, inclusion, projection, n, h_c, h_a_next):
    field, step = a.field, a.step
    nxt = n + step
    if h_c.dim == 0:
        return Matrix.zeros(field, h_a_next.dim, 0)

    q_n = _map(projection, field, h_c.witnesses.rows, b.dim(n), n)
    i_next = _map(inclusion, field, b.dim(nxt), a.dim(nxt), nxt)

    lifted = q_n.solve(h_c.witnesses)
    pushed = b.d(n) @ lifted
    pulled = i_next.solve(pushed)
    if pulled is None:
        raise NotExact('boundary of a lift does not come from A in degree {}'.format(nxt))

    return a.class_coordinates(nxt, pulled)
