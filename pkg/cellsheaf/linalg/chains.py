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


from cellsheaf.containers import HomologyGroup
from cellsheaf.exceptions import IncompatibleShapes, NotCommuting
from cellsheaf.linalg.matrix import Matrix


class ChainComplex(object):
    """ A bounded complex of finite dimensional spaces.

        `differentials[n]` is the map leaving degree n.  It lands in degree
        n + 1 for cohomological complexes and in degree n - 1 for homological
        ones; `step` records which.
    """

    def __init__(self, field, dims, differentials=None, homological=False):
        self.field = field
        self.dims = {degree: dim for (degree, dim) in dims.items()}
        self.homological = homological
        self.step = -1 if homological else 1
        self.differentials = {}

        for (degree, matrix) in (differentials or {}).items():
            expected = (self.dim(degree + self.step), self.dim(degree))
            if matrix.shape != expected:
                raise IncompatibleShapes(
                    'differential leaving degree {} has shape {}, expected {}'.format(
                        degree, matrix.shape, expected))
            self.differentials[degree] = matrix

    def __repr__(self):
        return 'ChainComplex({}, dims={})'.format(
            'homological' if self.homological else 'cohomological',
            [self.dim(n) for n in self.degrees()])

    def degrees(self):
        populated = [n for (n, d) in self.dims.items() if d]
        if not populated:
            return []
        return list(range(min(populated), max(populated) + 1))

    def dim(self, degree):
        return self.dims.get(degree, 0)

    def d(self, degree):
        """ The differential leaving `degree`, zero when absent """
        matrix = self.differentials.get(degree)
        if matrix is None:
            return Matrix.zeros(self.field, self.dim(degree + self.step), self.dim(degree))
        return matrix

    def d_into(self, degree):
        return self.d(degree - self.step)

    def is_complex(self):
        return all((self.d(n + self.step) @ self.d(n)).is_zero() for n in self.degrees())

    def cycles(self, degree):
        return self.d(degree).kernel_basis()

    def boundaries(self, degree):
        return self.d_into(degree).image_basis()

    def homology(self, degree):
        """ Dimension and representative cycles for degree `degree`.  The
            witnesses are the cycle basis columns not reached by boundaries,
            in the deterministic column order.
        """
        cycles = self.cycles(degree)
        boundaries = self.boundaries(degree)

        stacked = Matrix.hstack(self.field, self.dim(degree), [boundaries, cycles])
        chosen = [p - boundaries.cols for p in stacked.pivots() if p >= boundaries.cols]
        witnesses = cycles.select_columns(chosen)
        return HomologyGroup(degree=degree, dim=len(chosen), witnesses=witnesses)

    def betti(self):
        return {n: self.homology(n).dim for n in self.degrees()}

    def betti_list(self, degrees):
        return [self.homology(n).dim for n in degrees]

    def class_coordinates(self, degree, vectors):
        """ Coordinates of cycles in the homology witness basis """
        group = self.homology(degree)
        boundaries = self.boundaries(degree)
        if not (self.d(degree) @ vectors).is_zero():
            raise ValueError('vectors are not cycles in degree {}'.format(degree))

        basis = Matrix.hstack(self.field, self.dim(degree), [group.witnesses, boundaries])
        solution = basis.solve(vectors)
        return solution.select_rows(range(group.dim))

    def euler_characteristic(self):
        return sum((-1) ** abs(n) * self.dim(n) for n in self.degrees())

    def homology_euler_characteristic(self):
        return sum((-1) ** abs(n) * dim for (n, dim) in self.betti().items())

    def is_acyclic(self):
        return all(dim == 0 for dim in self.betti().values())

    def reindexed(self):
        """ The same complex with the opposite indexing convention (n -> -n) """
        return ChainComplex(
            self.field,
            {-n: dim for (n, dim) in self.dims.items()},
            {-n: matrix for (n, matrix) in self.differentials.items()},
            homological=not self.homological)

    def shifted(self, amount):
        return ChainComplex(
            self.field,
            {n + amount: dim for (n, dim) in self.dims.items()},
            {n + amount: matrix for (n, matrix) in self.differentials.items()},
            homological=self.homological)


def check_chain_map(source, target, components):
    """ Raise NotCommuting unless d_target f = f d_source in every degree """
    degrees = sorted(set(source.degrees()) | set(target.degrees()))
    for n in degrees:
        f_n = _component(source, target, components, n)
        f_next = _component(source, target, components, n + source.step)
        if f_next @ source.d(n) != target.d(n) @ f_n:
            raise NotCommuting('chain map fails to commute leaving degree {}'.format(n))


def _component(source, target, components, degree):
    matrix = components.get(degree)
    if matrix is None:
        return Matrix.zeros(source.field, target.dim(degree), source.dim(degree))
    return matrix


def mapping_cone(source, target, components):
    """ Cone of f: A -> B.  Degree n holds A in degree n + step followed by B
        in degree n, with differential [[-d_A, 0], [f, d_B]].
    """
    check_chain_map(source, target, components)
    field, step = source.field, source.step

    degrees = set(n - step for n in source.degrees()) | set(target.degrees())
    if not degrees:
        return ChainComplex(field, {}, {}, homological=source.homological)

    low, high = min(degrees) - 1, max(degrees) + 1
    dims = {n: source.dim(n + step) + target.dim(n) for n in range(low, high + 1)}

    differentials = {}
    for n in range(low, high + 1):
        nxt = n + step
        if nxt < low or nxt > high:
            continue
        blocks = {
            (0, 0): -source.d(n + step),
            (1, 0): _component(source, target, components, n + step),
            (1, 1): target.d(n),
        }
        differentials[n] = Matrix.block(
            field,
            [source.dim(nxt + step), target.dim(nxt)],
            [source.dim(n + step), target.dim(n)],
            blocks)

    return ChainComplex(field, dims, differentials, homological=source.homological)


def check_chain_homotopy(source, target, f, g, homotopy):
    """ True when f - g = d h + h d for the supplied maps h_n: A_n -> B_{n-step} """
    step = source.step
    degrees = sorted(set(source.degrees()) | set(target.degrees()))
    for n in degrees:
        h_n = homotopy.get(n) or Matrix.zeros(source.field, target.dim(n - step), source.dim(n))
        h_next = homotopy.get(n + step) or Matrix.zeros(
            source.field, target.dim(n), source.dim(n + step))
        lhs = _component(source, target, f, n) - _component(source, target, g, n)
        rhs = target.d(n - step) @ h_n + h_next @ source.d(n)
        if lhs != rhs:
            return False

    return True
