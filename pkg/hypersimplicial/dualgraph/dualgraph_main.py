"""
    Title: Hypersimplicial Subdivisions
    Description: Exact construction and verification of hypersimplicial subdivisions of dilated hypersimplices.
    Author: Susanna
    License: MIT License
    Created: 2025

    Copyright (c) 2025 Susanna Maria Hepp

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software and associated documentation files (the "Software"), to deal
    in the Software without restriction, including without limitation the rights
    to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
    copies of the Software, and to permit persons to whom the Software is
    furnished to do so, subject to the following conditions:

    The above copyright notice and this permission notice shall be included in all
    copies or substantial portions of the Software.

    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
    IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
    FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
    AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
    LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
    OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
    THE SOFTWARE.
"""

import itertools
import json
import logging
from dataclasses import dataclass

import networkx as nx

from hypersimplicial.geometry.cells import intersect_cells, unit_vector

logger = logging.getLogger(__name__)

EXPORT_FORMATS = ("dot", "json")


@dataclass(frozen=True)
class DualGraph:
    """Cells of H(r, d, i) as nodes, facet adjacencies as edges (pairs a < b of node indices)."""

    nodes: tuple
    edges: frozenset[tuple[int, int]]
    params: tuple[int, int, int]

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from((index, {"cell": cell}) for index, cell in enumerate(self.nodes))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self):
        return bool(self.nodes) and nx.is_connected(self.to_networkx())

    def degrees(self):
        return dict(self.to_networkx().degree())

    def sorted_edges(self):
        return sorted(self.edges)


def _neighbour_steps(size):
    """Translation steps between facet-adjacent cells."""
    if size == 2:
        # segments on a line: neighbours share an endpoint and sit at the same level
        return [(1, -1)]
    return [unit_vector(size, {t}) for t in range(size)]


def coordinate_rule(first, second):
    """Facet adjacency read off the translations alone."""
    step = tuple(b - a for a, b in zip(first.v, second.v))
    negated = tuple(-part for part in step)
    steps = _neighbour_steps(len(first.v))
    return step in steps or negated in steps


def geometric_rule(first, second):
    """Facet adjacency from the intersection face: it has dimension d - 1."""
    return intersect_cells(first, second).dimension == first.d - 1


def build_dual_graph(subdivision):
    """
    Dual graph of H(r, d, i) by probing translation neighbours.

    For d >= 2 two cells are adjacent iff their translations differ by 1 in
    exactly one position, so each v only needs its d + 1 neighbours v + e_t.
    For d = 1 the neighbour of v is v + e_1 - e_2.
    """
    index = {cell.v: position for position, cell in enumerate(subdivision.cells)}
    edges = set()
    for position, cell in enumerate(subdivision.cells):
        for step in _neighbour_steps(len(cell.v)):
            neighbour = index.get(tuple(a + b for a, b in zip(cell.v, step)))
            if neighbour is not None:
                edges.add((min(position, neighbour), max(position, neighbour)))

    graph = DualGraph(
        nodes=subdivision.cells,
        edges=frozenset(edges),
        params=(subdivision.r, subdivision.d, subdivision.i),
    )
    logger.info(f"Dual graph of H{graph.params}: {len(graph.nodes)} nodes, {len(graph.edges)} edges")
    return graph


@dataclass
class DualGraphCheck:
    params: tuple[int, int, int]
    pairs: int
    discrepancies: list[str]
    edges: int
    connected: bool
    max_degree: int

    @property
    def passed(self):
        return not self.discrepancies

    def to_dict(self):
        r, d, i = self.params
        return {
            "params": {"r": r, "d": d, "i": i},
            "pairs": self.pairs,
            "edges": self.edges,
            "discrepancies": len(self.discrepancies),
            "witnesses": self.discrepancies[:20],
            "connected": self.connected,
            "max_degree": self.max_degree,
            "degree_bound": 2 * (d + 1),
        }


def check_dual_graph(subdivision):
    """
    Compare the translation rule with the facet-dimension rule on every pair of cells,
    and the probed edge set with the pairs the geometric rule accepts.
    """
    cells = subdivision.cells
    graph = build_dual_graph(subdivision)
    discrepancies = []
    geometric_edges = set()
    pairs = 0
    for a, b in itertools.combinations(range(len(cells)), 2):
        pairs += 1
        by_translation = coordinate_rule(cells[a], cells[b])
        by_geometry = geometric_rule(cells[a], cells[b])
        if by_geometry:
            geometric_edges.add((a, b))
        if by_translation != by_geometry:
            discrepancies.append(f"{cells[a]} and {cells[b]}: translation rule {by_translation}, facet rule {by_geometry}")
    if geometric_edges != graph.edges:
        discrepancies.append(f"probed {len(graph.edges)} edges, facet rule gives {len(geometric_edges)}")

    degrees = graph.degrees()
    check = DualGraphCheck(
        params=graph.params,
        pairs=pairs,
        discrepancies=discrepancies,
        edges=len(graph.edges),
        connected=graph.is_connected(),
        max_degree=max(degrees.values(), default=0),
    )
    for discrepancy in discrepancies:
        logger.warning(f"Dual graph of H{graph.params}: {discrepancy}")
    return check


def export_graph(graph, format):
    """
    Serialize the dual graph.

    Args:
        graph (DualGraph): Graph to export.
        format (str): "dot" or "json".

    Returns:
        str: Graphviz text or the JSON document.
    """
    if format == "json":
        payload = {
            "nodes": [cell.to_dict() for cell in graph.nodes],
            "edges": [list(edge) for edge in graph.sorted_edges()],
        }
        return json.dumps(payload, separators=(",", ":"))
    if format == "dot":
        r, d, i = graph.params
        lines = [f"graph H_{r}_{d}_{i} {{"]
        lines.extend(f'    {index} [label="{cell}"];' for index, cell in enumerate(graph.nodes))
        lines.extend(f"    {a} -- {b};" for a, b in graph.sorted_edges())
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"Unknown graph format '{format}', expected one of {', '.join(EXPORT_FORMATS)}.")
