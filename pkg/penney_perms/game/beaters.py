# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from penney_perms.analytic import ProbEstimate, Verdict
from penney_perms.enumeration import PatternCounter
from penney_perms.game.matrix import ProbabilityMatrix, prob_matrix
from penney_perms.perm_core import Permutation

Edge = Tuple[Permutation, Permutation]


@dataclass(frozen=True)
class BeaterEdge:
    """
    winner -> loser, annotated with the estimate of Pr(loser before winner).
    """

    winner: Permutation
    loser: Permutation
    estimate: ProbEstimate

    @property
    def certified(self) -> bool:
        return self.estimate.verdict == Verdict.TAU_CERTIFIED


@dataclass
class BeaterGraph:
    """
    Directed graph on S_k with an edge tau -> sigma whenever tau beats sigma.
    """

    k: int
    N: int
    nodes: List[Permutation]
    edges: Dict[Edge, BeaterEdge] = field(default_factory=dict)
    best_beater: Dict[Permutation, Permutation] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.logger = logging.getLogger(self.__class__.__name__)

    @classmethod
    def from_matrix(cls, matrix: ProbabilityMatrix) -> BeaterGraph:
        """
        Build the graph from a probability matrix.

        The best beater of sigma minimizes the normalised estimate of
        Pr(sigma before tau); equal estimates go to the lexicographically
        smaller tau.
        """
        graph = cls(matrix.k, matrix.N, list(matrix.patterns))
        for (sigma, tau), estimate in sorted(matrix.cells.items()):
            if estimate.favours == "tau":
                graph.edges[(tau, sigma)] = BeaterEdge(tau, sigma, estimate)
        for sigma in graph.nodes:
            rivals = [
                (matrix.cell(sigma, tau).estimate, tau) for tau in graph.nodes if tau != sigma
            ]
            value, tau = min(rivals)
            if value < 0.5:
                graph.best_beater[sigma] = tau
        graph.logger.info(
            "Beater graph k=%d, N=%d with %d edges", graph.k, graph.N, len(graph.edges)
        )
        return graph

    def successors(self, node: Permutation, certified_only: bool = False) -> List[Permutation]:
        return [
            loser
            for (winner, loser), edge in self.edges.items()
            if winner == node and (edge.certified or not certified_only)
        ]

    def in_degrees(self) -> Dict[Permutation, int]:
        degrees = {node: 0 for node in self.nodes}
        for _, loser in self.edges:
            degrees[loser] += 1
        return degrees

    def every_pattern_beaten(self) -> bool:
        return all(degree >= 1 for degree in self.in_degrees().values())

    def is_best_edge(self, winner: Permutation, loser: Permutation) -> bool:
        return self.best_beater.get(loser) == winner

    def is_complement_invariant(self) -> bool:
        """
        Whether complementing every node maps the edge set onto itself.
        """
        return all(
            (winner.complement(), loser.complement()) in self.edges
            for winner, loser in self.edges
        )

    def best_beater_cycles(self) -> List[Tuple[Permutation, ...]]:
        """
        Cycles formed by best-beater edges, in edge direction, each starting at its smallest node.
        """
        cycles = set()
        for start in self.nodes:
            path = [start]
            while path[-1] in self.best_beater and self.best_beater[path[-1]] not in path:
                path.append(self.best_beater[path[-1]])
            last = path[-1]
            if last in self.best_beater and self.best_beater[last] in path:
                loop = path[path.index(self.best_beater[last]) :]
                # best-beater steps point from loser to winner
                cycles.add(_canonical_cycle(tuple(reversed(loop))))
        return sorted(cycles)

    def to_json(self) -> Dict:
        adjacency: Dict[str, List[Dict]] = {str(node): [] for node in self.nodes}
        for (winner, loser), edge in sorted(self.edges.items()):
            adjacency[str(winner)].append(
                {
                    "beats": str(loser),
                    "prob": round(edge.estimate.estimate, 6),
                    "certified": edge.certified,
                    "best": self.is_best_edge(winner, loser),
                }
            )
        return {"k": self.k, "N": self.N, "adjacency": adjacency}

    def to_dot(self) -> str:
        """
        DOT digraph: solid best-beater edges, dashed other edges, labelled with Pr(loser before winner).
        """
        lines = [f"digraph beaters_k{self.k} {{"]
        for node in self.nodes:
            lines.append(f'  "{node}";')
        for (winner, loser), edge in sorted(self.edges.items()):
            style = "solid" if self.is_best_edge(winner, loser) else "dashed"
            lines.append(
                f'  "{winner}" -> "{loser}" [style={style}, '
                f'label="{edge.estimate.estimate:.3f}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def _canonical_cycle(cycle: Tuple[Permutation, ...]) -> Tuple[Permutation, ...]:
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def _shortest_cycle_through(
    graph: BeaterGraph, node: Permutation, certified_only: bool
) -> Optional[Tuple[Permutation, ...]]:
    parents: Dict[Permutation, Permutation] = {}
    queue = deque()
    for successor in graph.successors(node, certified_only):
        if successor == node:
            continue
        if successor not in parents:
            parents[successor] = node
            queue.append(successor)
    while queue:
        current = queue.popleft()
        for successor in graph.successors(current, certified_only):
            if successor == node:
                path = [current]
                while path[-1] != node:
                    path.append(parents[path[-1]])
                return tuple(reversed(path))
            if successor not in parents:
                parents[successor] = current
                queue.append(successor)
    return None


def find_cycles(graph: BeaterGraph) -> List[Tuple[Permutation, ...]]:
    """
    Directed cycles witnessing non-transitivity: a shortest cycle through every node that lies on one.

    Certified edges are searched first; the full graph only when they contain no cycle.

    :param graph: The beater graph.
    :type graph: BeaterGraph
    :return: Distinct cycles, each starting at its smallest node.
    :rtype: List[Tuple[Permutation, ...]]
    """
    for certified_only in (True, False):
        cycles = set()
        for node in graph.nodes:
            cycle = _shortest_cycle_through(graph, node, certified_only)
            if cycle is not None:
                cycles.add(_canonical_cycle(cycle))
        if cycles:
            graph.logger.debug(
                "Found %d cycles (certified edges only: %s)", len(cycles), certified_only
            )
            return sorted(cycles)
    return []


def beater_graph(
    k: int,
    N: Optional[int] = None,
    counter: Optional[PatternCounter] = None,
    matrix: Optional[ProbabilityMatrix] = None,
) -> BeaterGraph:
    if matrix is None:
        matrix = prob_matrix(k, N, counter)
    return BeaterGraph.from_matrix(matrix)
