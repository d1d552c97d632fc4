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


""" Interval decomposition of sheaves and cosheaves over path complexes.

    The sweep runs left to right keeping a basis of every stalk made of bar
    vectors.  When a basis change is needed at position k the new vector of
    a bar is a combination of bars that may be absorbed into it:

      - a bar born through a forward arrow (or at the left end) absorbs every
        older bar and every younger bar born through a backward arrow;
      - a bar born through a backward arrow absorbs younger or simultaneous
        bars born through backward arrows.

    Choosing pivots by the resulting priority keeps every rewritten history
    compatible with the maps.
"""

from collections import Counter

from cellsheaf.barcodes.paths import PathComplex
from cellsheaf.containers import Bar
from cellsheaf.linalg.matrix import Matrix
from cellsheaf.linalg.spaces import Subspace
from cellsheaf.logger import logger

FORWARD = 'forward'
BACKWARD = 'backward'


class _SweepBar(object):
    __slots__ = ('ident', 'birth', 'born', 'death', 'vectors')

    def __init__(self, ident, birth, born, vector):
        self.ident = ident
        self.birth = birth
        self.born = born
        self.death = None
        self.vectors = {birth: vector}

    def priority(self):
        if self.born == FORWARD:
            return (1, self.birth, self.ident)
        return (0, -self.birth, -self.ident)


class Barcode(object):
    """ The bars of a decomposition together with the vectors witnessing it.
        `intervals` holds (start, end, vectors) with positions in path order
        and vectors mapping position -> column Matrix.
    """

    def __init__(self, path, intervals):
        self.path = path
        self.intervals = sorted(intervals, key=lambda item: (item[0], -item[1]))

    def __repr__(self):
        return 'Barcode({})'.format(', '.join(format_bar(bar) for bar in self.bars()))

    def __len__(self):
        return len(self.intervals)

    def bars(self):
        counts = Counter((start, end) for (start, end, _) in self.intervals)
        order = self.path.order
        result = []
        for ((start, end), multiplicity) in sorted(counts.items()):
            result.append(Bar(left=order[start], right=order[end],
                              left_closed=self.path.is_closed_end(order[start]),
                              right_closed=self.path.is_closed_end(order[end]),
                              multiplicity=multiplicity))
        return result

    def multiset(self):
        return sorted((bar.left, bar.right, bar.multiplicity) for bar in self.bars())

    def change_of_basis(self, position, field):
        """ Columns are the vectors of the bars alive at `position` """
        columns = [vectors[position] for (start, end, vectors) in self.intervals
                   if start <= position <= end]
        dim = columns[0].rows if columns else 0
        return Matrix.hstack(field, dim, columns) if columns else Matrix.zeros(field, 0, 0)

    def alive(self, position):
        return [index for (index, (start, end, _)) in enumerate(self.intervals)
                if start <= position <= end]

    def verify(self, rep):
        """ True when the bar vectors form a basis of every stalk and every
            structure map sends a bar vector to the next vector of the same
            bar, or to zero where the bar stops.
        """
        field = rep.field
        for (k, cell) in enumerate(self.path.order):
            columns = [self.intervals[i][2][k] for i in self.alive(k)]
            if len(columns) != rep.stalks[cell]:
                return False
            if columns and not Matrix.hstack(field, rep.stalks[cell], columns).is_invertible():
                return False

        for k in range(len(self.path) - 1):
            (src, dst, matrix) = _arrow(rep, self.path, k)
            for (start, end, vectors) in self.intervals:
                if not start <= src <= end:
                    continue
                image = matrix @ vectors[src]
                expected = vectors[dst] if start <= dst <= end else \
                    Matrix.zeros(field, matrix.rows, 1)
                if image != expected:
                    return False

        return True

    def spanning(self, first, last):
        return sum(1 for (start, end, _) in self.intervals if start <= first and last <= end)


def format_bar(bar):
    kind = ('c' if bar.left_closed else 'o') + ('c' if bar.right_closed else 'o')
    return '{}{}, {}{} kind={} mult={}'.format(
        '[' if bar.left_closed else ']', bar.left, bar.right,
        ']' if bar.right_closed else '[', kind, bar.multiplicity)


def _arrow(rep, path, k):
    """ (source position, target position, matrix) between k and k + 1 """
    (vertex, edge) = path.cover_between(k)
    (start, _) = rep.arrow_ends(vertex, edge)
    matrix = rep.maps[(vertex, edge)]
    if start == path.order[k]:
        return (k, k + 1, matrix)
    return (k + 1, k, matrix)


def _echelon(coords, bars):
    """ Row reduce the columns of `coords` (bar coordinates) with pivots on
        the highest priority bars.

        :returns: list of (pivot bar, {bar: coefficient})
    """
    ranked = sorted(range(len(bars)), key=lambda i: bars[i].priority(), reverse=True)
    rows = coords.transpose().select_columns(ranked)
    reduced, pivots = rows.rref()

    result = []
    for (r, p) in enumerate(pivots):
        combination = {}
        for (c, index) in enumerate(ranked):
            value = reduced[r, c]
            if value:
                combination[index] = value
        result.append((ranked[p], combination))
    return result


def _absorb(pivot, combination, bars, position):
    """ Rewrite the history of `pivot` over [pivot.birth, position] as the
        combination of bar histories.
    """
    new_vectors = {}
    for t in range(pivot.birth, position + 1):
        total = None
        for (index, coefficient) in combination.items():
            bar = bars[index]
            if t < bar.birth:
                continue
            term = bar.vectors[t].scale(coefficient)
            total = term if total is None else total + term
        new_vectors[t] = total
    pivot.vectors.update(new_vectors)


def _basis(bars, position, field, dim):
    return Matrix.hstack(field, dim, [bar.vectors[position] for bar in bars])


def zigzag_decompose(rep, path=None):
    """ Decompose a sheaf or cosheaf on a path complex into interval
        summands.

        :returns: Barcode with the witnessing bar vectors
        :raises NotPathComplex: when the complex is not a simple path
    """
    path = path or PathComplex(rep.complex)
    field = rep.field
    order = path.order
    if not order:
        return Barcode(path, [])

    counter = [0]
    finished = []

    def new_bar(position, born, vector):
        counter[0] += 1
        return _SweepBar(counter[0], position, born, vector)

    dim0 = rep.stalks[order[0]]
    alive = [new_bar(0, FORWARD, Matrix.identity(field, dim0).select_columns([j]))
             for j in range(dim0)]

    for k in range(len(order) - 1):
        here, there = rep.stalks[order[k]], rep.stalks[order[k + 1]]
        (src, _, matrix) = _arrow(rep, path, k)
        current = _basis(alive, k, field, here)
        snapshot = list(alive)

        if src == k:
            images = matrix @ current
            kernel = images.kernel_basis()
            dying = set()
            for (pivot_index, combination) in _echelon(kernel, snapshot):
                _absorb(snapshot[pivot_index], combination, snapshot, k)
                dying.add(pivot_index)

            survivors = [bar for (i, bar) in enumerate(snapshot) if i not in dying]
            for bar in survivors:
                bar.vectors[k + 1] = matrix @ bar.vectors[k]
            for bar in (snapshot[i] for i in sorted(dying)):
                bar.death = k
                finished.append(bar)

            image = _basis(survivors, k + 1, field, there)
            fresh = Subspace(image).complement_positions() if survivors else list(range(there))
            born = [new_bar(k + 1, FORWARD, Matrix.identity(field, there).select_columns([j]))
                    for j in fresh]
            alive = survivors + born
            logger.debug('forward step %s: %s bars end, %s begin', k, len(dying), len(born))
        else:
            image = matrix.image_basis()
            coords = current.solve(image) if image.cols else Matrix.zeros(field, here, 0)
            continuing = set()
            for (pivot_index, combination) in _echelon(coords, snapshot):
                _absorb(snapshot[pivot_index], combination, snapshot, k)
                continuing.add(pivot_index)

            survivors = []
            for (i, bar) in enumerate(snapshot):
                if i in continuing:
                    bar.vectors[k + 1] = matrix.solve(bar.vectors[k])
                    survivors.append(bar)
                else:
                    bar.death = k
                    finished.append(bar)

            kernel = matrix.kernel_basis()
            born = [new_bar(k + 1, BACKWARD, kernel.select_columns([j]))
                    for j in range(kernel.cols)]
            alive = survivors + born
            logger.debug('backward step %s: %s bars end, %s begin',
                         k, len(snapshot) - len(survivors), len(born))

    last = len(order) - 1
    for bar in alive:
        bar.death = last
        finished.append(bar)

    return Barcode(path, [(bar.birth, bar.death, dict(bar.vectors)) for bar in finished])


def rank_check(rep, barcode):
    """ Every composite along a run of equally directed arrows has rank equal
        to the number of bars spanning the run.
    """
    path = barcode.path
    length = len(path)
    for first in range(length):
        composite, direction = None, None
        for k in range(first, length - 1):
            (src, dst, matrix) = _arrow(rep, path, k)
            step = 'right' if src == k else 'left'
            if direction is None:
                direction = step
            elif step != direction:
                break
            if direction == 'right':
                composite = matrix if composite is None else matrix @ composite
            else:
                composite = matrix if composite is None else composite @ matrix
            if composite.rank() != barcode.spanning(first, k + 1):
                return False
    return True


def barcode_homology(barcode):
    """ (H_0, H_1): closed-closed bars give H_0, open-open bars give H_1 and
        half-open bars give nothing.
    """
    h0 = sum(bar.multiplicity for bar in barcode.bars() if bar.left_closed and bar.right_closed)
    h1 = sum(bar.multiplicity for bar in barcode.bars()
             if not bar.left_closed and not bar.right_closed)
    return h0, h1


def long_bar(barcode):
    """ The closed bar spanning the whole path, if there is one """
    order = barcode.path.order
    for bar in barcode.bars():
        if bar.left == order[0] and bar.right == order[-1] and \
                bar.left_closed and bar.right_closed:
            return bar
    return None
