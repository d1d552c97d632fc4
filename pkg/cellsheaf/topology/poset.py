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


""" Finite posets stored by their covering relation.

    The cover relation lives in a networkx DiGraph with an edge x -> y for
    every x < y cover; the full order is reachability in that graph.
"""

import functools

import networkx as nx

from cellsheaf.exceptions import CycleDetected, RedundantCover, UnknownElement
from cellsheaf.logger import logger


class Poset(object):
    def __init__(self, elements, covers):
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(elements)
        self.graph.add_edges_from(covers)
        self._closures = {}
        self._stars = {}

    @property
    def elements(self):
        return frozenset(self.graph.nodes())

    @property
    def covers(self):
        return frozenset(self.graph.edges())

    def __contains__(self, element):
        return element in self.graph

    def __len__(self):
        return self.graph.number_of_nodes()

    def __eq__(self, other):
        return (isinstance(other, Poset) and
                self.elements == other.elements and
                self.covers == other.covers)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return 'Poset({} elements, {} covers)'.format(len(self), len(self.covers))

    def _check(self, element):
        if element not in self.graph:
            raise UnknownElement('Unknown element `{}`'.format(element))

    def open_star(self, element):
        """ U_x = { y | x <= y } """
        self._check(element)
        if element not in self._stars:
            self._stars[element] = frozenset(nx.descendants(self.graph, element)) | {element}
        return self._stars[element]

    def closure(self, element):
        """ the down-set { y | y <= x } """
        self._check(element)
        if element not in self._closures:
            self._closures[element] = frozenset(nx.ancestors(self.graph, element)) | {element}
        return self._closures[element]

    def leq(self, x, y):
        return x in self.closure(y)

    def up_set(self, subset):
        result = set()
        for element in subset:
            result |= self.open_star(element)
        return frozenset(result)

    def down_set(self, subset):
        result = set()
        for element in subset:
            result |= self.closure(element)
        return frozenset(result)

    def faces(self, element):
        """ Elements covered by `element` """
        self._check(element)
        return frozenset(self.graph.predecessors(element))

    def cofaces(self, element):
        """ Elements covering `element` """
        self._check(element)
        return frozenset(self.graph.successors(element))

    def interval(self, low, high):
        return self.open_star(low) & self.closure(high)

    def induced_covers(self, subset):
        """ Covering pairs of the subposet induced on `subset`.  When the
            subset is convex these are exactly the covers of the poset lying
            inside it.
        """
        subset = frozenset(subset)
        for element in subset:
            self._check(element)

        pairs = []
        for x in subset:
            above = (self.open_star(x) & subset) - {x}
            for y in above:
                # y covers x in the subposet if nothing in the subset sits strictly between
                between = (self.open_star(x) & self.closure(y) & subset) - {x, y}
                if not between:
                    pairs.append((x, y))

        return sorted(pairs)

    def induced(self, subset):
        return Poset(subset, self.induced_covers(subset))

    def chain_between(self, low, high):
        """ A maximal chain of covers from low up to high """
        if not self.leq(low, high):
            raise UnknownElement('`{}` is not below `{}`'.format(low, high))
        return nx.shortest_path(self.graph, low, high)

    def maximal_elements(self):
        return frozenset(x for x in self.graph.nodes() if not self.graph.out_degree(x))

    def minimal_elements(self):
        return frozenset(x for x in self.graph.nodes() if not self.graph.in_degree(x))

    def ordered(self):
        """ A linear extension, ties broken by id """
        return list(nx.lexicographical_topological_sort(self.graph))

    def longest_chain_length(self):
        """ Number of covers in the longest chain """
        if not len(self):
            return 0
        return nx.dag_longest_path_length(self.graph)

    def order_complex_chains(self):
        """ Every chain x0 < x1 < ... < xk, listed as tuples in increasing order """
        chains = []
        for start in self.ordered():
            stack = [(start,)]
            while stack:
                chain = stack.pop()
                chains.append(chain)
                for nxt in sorted(self.open_star(chain[-1]) - {chain[-1]}):
                    stack.append(chain + (nxt,))
        return chains

    def hasse_graph(self):
        """ Undirected copy of the cover graph """
        return self.graph.to_undirected(as_view=False)

    def connected_components(self, subset=None):
        graph = self.hasse_graph()
        if subset is not None:
            graph = graph.subgraph(subset)
        return [frozenset(c) for c in
                sorted(nx.connected_components(graph), key=lambda c: sorted(c))]


def build_poset(covers, elements=()):
    """ Build a poset from a list of covering pairs, checking that the
        relation is antisymmetric and that no listed cover is implied by a
        chain of other covers.

        :param covers: list of ordered pairs (x, y) meaning x is covered by y
        :param elements: extra elements with no covers
    """
    covers = list(covers)
    for (x, y) in covers:
        if x == y:
            raise CycleDetected('Element `{}` cannot cover itself'.format(x))

    everything = set(elements)
    for (x, y) in covers:
        everything.update((x, y))

    graph = nx.DiGraph()
    graph.add_nodes_from(everything)
    graph.add_edges_from(covers)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CycleDetected('Cover relation has a cycle through {}'.format(
            ', '.join(str(x) for (x, _) in cycle)))

    reduced = nx.transitive_reduction(graph)
    redundant = sorted(set(graph.edges()) - set(reduced.edges()))
    if redundant:
        raise RedundantCover('Covers implied by other covers: {}'.format(
            ', '.join('{} < {}'.format(x, y) for (x, y) in redundant)))

    logger.debug('built poset with %s elements and %s covers', len(everything), len(covers))
    return Poset(everything, covers)


@functools.lru_cache(maxsize=None)
def point_poset():
    return Poset(['*'], [])
