# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import itertools
import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Iterator, List, Optional

from penney_perms.analytic import (
    closed_form_prob,
    expected_F_iota,
    expected_I,
    expected_T,
    prob_precedes,
    prob_via_EF,
    variance_T,
)
from penney_perms.errors import UnsupportedError
from penney_perms.game import BeaterGraph, ProbabilityMatrix, check_conjecture, find_cycles
from penney_perms.montecarlo import fresh_seed
from penney_perms.operations.finding import Finding
from penney_perms.parser import Parser
from penney_perms.perm_core import Permutation, permutations
from penney_perms.ties import theorem_certificate, tie_scan, verify_bijection
from penney_perms.words import conway_prob, markov_race, nielsen_ET
from penney_perms.workbench import Workbench

_P = Permutation.parse


class OperationType(Enum):
    """
    Enum to represent different operation types that can be used as unique identifiers.
    """

    probability: int = 0
    expected_T: int = 1
    expected_I: int = 2
    expected_F_iota: int = 3
    race: int = 4
    matrix: int = 5
    beaters: int = 6
    conjecture: int = 7
    ties: int = 8
    words_probability: int = 9
    words_expected_T: int = 10
    verify_bijections: int = 11


class Operation(ABC):
    """
    Abstract base class that defines the interface for all operations.
    """

    _ids: Iterator[int] = itertools.count(0)

    operation_type: OperationType = None

    def __init__(self) -> None:
        """
        Initializes a new Operation instance with a unique id, and empty predecessors and successors.
        """
        self.logger: logging.Logger = logging.getLogger(self.__class__.__name__)
        self.id: int = next(Operation._ids)
        self.predecessors: List[Operation] = []
        self.successors: List[Operation] = []
        self.findings: List[Finding] = []
        self.executed: bool = False

    def can_be_executed(self) -> bool:
        return all(predecessor.executed for predecessor in self.predecessors)

    def get_findings(self) -> List[Finding]:
        return self.findings

    def get_previous_findings(self) -> List[Finding]:
        """
        Iterates over all predecessors and aggregates their findings.

        :return: A list of all findings from the predecessors.
        :rtype: List[Finding]
        """
        return [
            finding
            for predecessor in self.predecessors
            for finding in predecessor.get_findings()
        ]

    def previous_artifact(self, name: str) -> Optional[Any]:
        """
        The first artifact with the given name among the predecessors' findings.
        """
        for finding in self.get_previous_findings():
            if name in finding.artifacts:
                return finding.artifacts[name]
        return None

    def add_successor(self, operation: Operation) -> None:
        self.successors.append(operation)
        operation.predecessors.append(self)

    def execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        """
        Execute the operation, assuring that all predecessors have been executed.

        :param workbench: Shared computation context.
        :type workbench: Workbench
        :param parser: Parser for the pattern and word arguments.
        :type parser: Parser
        :param kwargs: Run options: N, method, trials, seed.
        :raises AssertionError: If not all predecessors have been executed.
        """
        assert self.can_be_executed(), "Not all predecessors have been executed"
        self.logger.info(
            "Executing operation %d of type %s", self.id, self.operation_type
        )
        self._execute(workbench, parser, **kwargs)
        self.logger.debug("Operation %d executed", self.id)
        self.executed = True

    @abstractmethod
    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        """
        Compute the operation's findings.

        :param workbench: Shared computation context.
        :type workbench: Workbench
        :param parser: Parser for the pattern and word arguments.
        :type parser: Parser
        :param kwargs: Run options.
        """
        pass

    def _matrix(self, workbench: Workbench, k: int, N: Optional[int]) -> ProbabilityMatrix:
        matrix = self.previous_artifact("matrix")
        if matrix is not None and matrix.k == k and matrix.N == workbench.resolve_N(N):
            return matrix
        return workbench.matrix(k, N)


class Probability(Operation):
    """
    Certified bounds on Pr(sigma before tau).
    """

    operation_type: OperationType = OperationType.probability

    def __init__(self, sigma: str, tau: str) -> None:
        super().__init__()
        self.sigma = sigma
        self.tau = tau

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        sigma = parser.parse_permutation(self.sigma)
        tau = parser.parse_permutation(self.tau)
        estimate = prob_precedes(
            sigma, tau, kwargs.get("N"), workbench.counter, kwargs.get("method") or "auto"
        )
        state = estimate.to_json()
        low, high = estimate.interval
        headline = (
            f"Pr({sigma} before {tau}) ~ {estimate.estimate:.6f} "
            f"in [{float(low):.6f}, {float(high):.6f}] ({estimate.verdict.value})"
        )
        if estimate.exact is not None:
            state["exact"] = str(estimate.exact)
            headline = f"Pr({sigma} before {tau}) = {estimate.exact} ({estimate.verdict.value})"
        try:
            state["closed_form"] = closed_form_prob(sigma, tau).to_json()
        except UnsupportedError:
            self.logger.debug("No closed form for %s vs %s", sigma, tau)
        finding = Finding("record", state, {"estimate": estimate}, headline)
        finding.certified = estimate.certified
        self.findings = [finding]


class ExpectedT(Operation):
    """
    Mean and variance of the first occurrence time of a pattern.
    """

    operation_type: OperationType = OperationType.expected_T

    def __init__(self, pattern: str, method: str = "closed-form") -> None:
        super().__init__()
        self.pattern = pattern
        self.method = method

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        pattern = parser.parse_pattern(self.pattern)
        N = kwargs.get("N")
        mean = expected_T(pattern, self.method, N, workbench.counter)
        variance = variance_T(pattern, self.method, N, workbench.counter)
        state = {
            "pattern": str(pattern),
            "mean": mean.to_json(),
            "variance": variance.to_json(),
        }
        finding = Finding("record", state, {"mean": mean, "variance": variance}, str(mean))
        finding.certified = mean.error_estimate < 1e-9
        self.findings = [finding]


class ExpectedI(Operation):
    """
    Expected further draws until tau, starting from an occurrence of sigma.
    """

    operation_type: OperationType = OperationType.expected_I

    def __init__(self, sigma: str, tau: str) -> None:
        super().__init__()
        self.sigma = sigma
        self.tau = tau

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        sigma = parser.parse_permutation(self.sigma)
        tau = parser.parse_permutation(self.tau)
        value = expected_I(sigma, tau, kwargs.get("N"), workbench.counter)
        state = {"sigma": str(sigma), "tau": str(tau), "expected_I": value.to_json()}
        self.findings = [Finding("record", state, {"value": value}, str(value))]


class ExpectedFIota(Operation):
    """
    E F between the increasing pattern of length k and 21, and the probability they imply.
    """

    operation_type: OperationType = OperationType.expected_F_iota

    def __init__(self, k: int) -> None:
        super().__init__()
        self.k = k

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        forward, backward = expected_F_iota(self.k)
        iota = Permutation.identity(self.k)
        via_F = prob_via_EF(iota, _P("21"))
        state = {
            "k": self.k,
            "F_iota_to_21": forward.to_json(),
            "F_21_to_iota": backward.to_json(),
            "prob_iota_before_21": via_F.to_json(),
        }
        headline = f"E F({iota}->21) = {forward}, E F(21->{iota}) = {backward}"
        self.findings = [Finding("record", state, {}, headline)]


class Race(Operation):
    """
    Monte Carlo estimates for a race between two patterns.
    """

    operation_type: OperationType = OperationType.race

    def __init__(self, sigma: str, tau: str) -> None:
        super().__init__()
        self.sigma = sigma
        self.tau = tau

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        sigma = parser.parse_permutation(self.sigma)
        tau = parser.parse_permutation(self.tau)
        trials = kwargs.get("trials") or workbench.settings.default_trials
        seed = kwargs.get("seed")
        if seed is None:
            seed = fresh_seed()
            self.logger.warning("No seed given, drew seed %d", seed)
        race = workbench.simulator.simulate_race(sigma, tau, trials, seed)
        initial = workbench.simulator.simulate_initial(sigma, sigma, trials, seed)
        state = race.to_json()
        state["I_sigma_sigma"] = initial.to_json()
        state["seed"] = seed
        headline = (
            f"Pr({sigma} before {tau}) ~ {race.win.value:.6f} +- {race.win.stderr:.6f} "
            f"({trials} trials, seed {seed})"
        )
        self.findings = [Finding("record", state, {"race": race}, headline)]


class Matrix(Operation):
    """
    The probability matrix of S_k.
    """

    operation_type: OperationType = OperationType.matrix

    def __init__(self, k: int) -> None:
        super().__init__()
        self.k = k

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        matrix = self._matrix(workbench, self.k, kwargs.get("N"))
        certified = matrix.certified_cells()
        state = {
            "k": matrix.k,
            "N": matrix.N,
            "signs": matrix.sign_rows(),
            "certified_cells": len(certified),
            "cells": len(matrix.cells),
        }
        finding = Finding("matrix", state, {"matrix": matrix})
        finding.certified = len(certified) == len(matrix.cells)
        self.findings = [finding]


class Beaters(Operation):
    """
    The beater graph of S_k with best beaters and non-transitive cycles.
    """

    operation_type: OperationType = OperationType.beaters

    def __init__(self, k: int) -> None:
        super().__init__()
        self.k = k

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        graph = BeaterGraph.from_matrix(self._matrix(workbench, self.k, kwargs.get("N")))
        cycles = find_cycles(graph)
        state = graph.to_json()
        state["best_beaters"] = {
            str(sigma): str(tau) for sigma, tau in sorted(graph.best_beater.items())
        }
        state["cycles"] = [[str(node) for node in cycle] for cycle in cycles]
        state["every_pattern_beaten"] = graph.every_pattern_beaten()
        state["complement_invariant"] = graph.is_complement_invariant()
        finding = Finding("graph", state, {"graph": graph, "cycles": cycles})
        finding.certified = all(edge.certified for edge in graph.edges.values())
        self.findings = [finding]


class Conjecture(Operation):
    """
    Whether the rotation of every pattern beats it.
    """

    operation_type: OperationType = OperationType.conjecture

    def __init__(self, k: int) -> None:
        super().__init__()
        self.k = k

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        N = workbench.resolve_N(kwargs.get("N"))
        matrix = self.previous_artifact("matrix")
        if matrix is not None and (matrix.k, matrix.N) != (self.k, N):
            matrix = None
        report = check_conjecture(self.k, N, workbench.counter, matrix)
        rows = [
            f"{record.sigma} vs {record.tau}: {record.status.value}"
            + (f" ({record.estimate.estimate:.3f})" if record.estimate is not None else "")
            for record in report.records
        ]
        headline = f"Rotation strategy for k={self.k} at N={N}: holds={report.holds}"
        finding = Finding("record", report.to_json(), {"report": report, "rows": rows}, headline)
        finding.certified = report.certified
        self.findings = [finding]


class Ties(Operation):
    """
    All tied pairs of S_k up to length N, labelled by certificate.
    """

    operation_type: OperationType = OperationType.ties

    def __init__(self, k: int) -> None:
        super().__init__()
        self.k = k

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        N = workbench.resolve_N(kwargs.get("N"))
        certificates = tie_scan(self.k, N, workbench.counter)
        state = {
            "k": self.k,
            "N": N,
            "pairs": [certificate.to_json() for certificate in certificates],
        }
        matrix = self.previous_artifact("matrix")
        if matrix is not None and matrix.k == self.k:
            state["matches_matrix"] = matrix.tied_pairs() == {c.pair for c in certificates}
        rows = [f"{c.sigma} = {c.tau}: {c.detail}" for c in certificates]
        headline = f"{len(certificates)} tied pairs of length {self.k} up to n={N}"
        finding = Finding("record", state, {"certificates": certificates, "rows": rows}, headline)
        finding.certified = all(c.detail != "CountsOnly" for c in certificates)
        self.findings = [finding]


class WordsProbability(Operation):
    """
    Conway's odds for two words.
    """

    operation_type: OperationType = OperationType.words_probability

    def __init__(self, w: str, v: str, m: str) -> None:
        super().__init__()
        self.w = w
        self.v = v
        self.m = m

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        m = parser.parse_alphabet(self.m)
        w = parser.parse_word(self.w, m)
        v = parser.parse_word(self.v, m)
        value = conway_prob(w, v)
        state = {
            "w": str(w),
            "v": str(v),
            "m": m,
            "probability": str(value),
            "markov_agrees": markov_race(w, v) == value,
        }
        finding = Finding("record", state, {"value": value}, str(value))
        finding.certified = state["markov_agrees"]
        self.findings = [finding]


class WordsExpectedT(Operation):
    """
    Expected waiting time of a word.
    """

    operation_type: OperationType = OperationType.words_expected_T

    def __init__(self, w: str, m: str) -> None:
        super().__init__()
        self.w = w
        self.m = m

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        m = parser.parse_alphabet(self.m)
        w = parser.parse_word(self.w, m)
        value = nielsen_ET(w)
        state = {"w": str(w), "m": m, "expected_T": value}
        self.findings = [Finding("record", state, {"value": value}, str(value))]


class VerifyBijections(Operation):
    """
    Check every theorem-certified tie bijection of S_k on permutations of length n.
    """

    operation_type: OperationType = OperationType.verify_bijections

    def __init__(self, k: int, n: int) -> None:
        super().__init__()
        self.k = k
        self.n = n

    def _execute(self, workbench: Workbench, parser: Parser, **kwargs) -> None:
        workbench.counter.check_ceiling(self.n, [Permutation.identity(self.k)])
        reports = []
        for sigma, tau in itertools.combinations(permutations(self.k), 2):
            certificate = theorem_certificate(sigma, tau)
            if certificate is None:
                continue
            reports.append(
                verify_bijection(sigma, tau, self.n, certificate, workbench.counter)
            )
        rows = [
            f"{r.sigma} -> {r.tau} [{r.kind.value}]: {r.source_size} elements, ok={r.ok}"
            for r in reports
        ]
        failures = [r for r in reports if not r.ok]
        for report in failures:
            self.logger.error("Bijection %s -> %s failed at n=%d", report.sigma, report.tau, self.n)
        state = {
            "k": self.k,
            "n": self.n,
            "reports": [report.to_json() for report in reports],
        }
        headline = f"{len(reports) - len(failures)} of {len(reports)} bijections verified at n={self.n}"
        finding = Finding("record", state, {"reports": reports, "rows": rows}, headline)
        finding.certified = not failures
        self.findings = [finding]
