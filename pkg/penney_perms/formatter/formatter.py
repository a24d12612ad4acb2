# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import json
from abc import ABC, abstractmethod
from typing import Dict, List

import pandas as pd

from penney_perms.errors import UnsupportedError
from penney_perms.operations import Finding


class Formatter(ABC):
    """
    Abstract base class that defines the interface for all output formats.
    Formatters turn findings into the text written to stdout.
    """

    def render(self, findings: List[Finding]) -> str:
        """
        Render findings in order, each by the method matching its kind.

        :param findings: The findings to render.
        :type findings: List[Finding]
        :return: The output text, ending with a newline.
        :rtype: str
        """
        handlers = {"matrix": self.matrix, "graph": self.graph}
        parts = [handlers.get(finding.kind, self.record)(finding) for finding in findings]
        return "".join(part if part.endswith("\n") else part + "\n" for part in parts)

    @abstractmethod
    def record(self, finding: Finding) -> str:
        """
        Render a plain record such as a probability or an expectation.

        :param finding: The finding.
        :type finding: Finding
        :return: The rendered text.
        :rtype: str
        """
        pass

    @abstractmethod
    def matrix(self, finding: Finding) -> str:
        """
        Render a finding holding a ProbabilityMatrix artifact.
        """
        pass

    @abstractmethod
    def graph(self, finding: Finding) -> str:
        """
        Render a finding holding a BeaterGraph artifact.
        """
        pass


def _edge_rows(finding: Finding) -> List[Dict]:
    graph = finding.artifacts["graph"]
    return [
        {
            "winner": str(winner),
            "loser": str(loser),
            "prob": round(edge.estimate.estimate, 6),
            "certified": edge.certified,
            "best": graph.is_best_edge(winner, loser),
        }
        for (winner, loser), edge in sorted(graph.edges.items())
    ]


class TableFormatter(Formatter):
    """
    Plain text for terminals.
    """

    def record(self, finding: Finding) -> str:
        lines = []
        if finding.headline is not None:
            lines.append(finding.headline)
        else:
            lines.extend(
                f"{key}: {json.dumps(value, sort_keys=True)}"
                for key, value in sorted(finding.state.items())
            )
        lines.extend(finding.artifacts.get("rows", []))
        return "\n".join(lines)

    def matrix(self, finding: Finding) -> str:
        matrix = finding.artifacts["matrix"]
        frame = matrix.to_frame().round(3)
        lines = [
            f"Pr(row before column), k={matrix.k}, N={matrix.N}",
            frame.to_string(na_rep="."),
            "",
            f"signs ({finding.state['certified_cells']} of {finding.state['cells']} cells certified):",
        ]
        lines.extend(matrix.sign_rows())
        return "\n".join(lines)

    def graph(self, finding: Finding) -> str:
        lines = [
            f"{row['winner']} beats {row['loser']}: {row['prob']:.3f}"
            + (" best" if row["best"] else "")
            + ("" if row["certified"] else " (estimated)")
            for row in _edge_rows(finding)
        ]
        for cycle in finding.state["cycles"]:
            lines.append("cycle: " + " -> ".join(cycle + cycle[:1]))
        lines.append(f"every pattern beaten: {finding.state['every_pattern_beaten']}")
        return "\n".join(lines)


class JsonFormatter(Formatter):
    """
    One JSON document per finding, keys sorted.
    """

    def record(self, finding: Finding) -> str:
        return json.dumps(finding.state, sort_keys=True, indent=2)

    def matrix(self, finding: Finding) -> str:
        state = dict(finding.state)
        state.update(finding.artifacts["matrix"].to_json())
        return json.dumps(state, sort_keys=True, indent=2)

    def graph(self, finding: Finding) -> str:
        return self.record(finding)


class CsvFormatter(Formatter):
    """
    Comma separated values: the matrix in table layout, edge lists, flat records.
    """

    def record(self, finding: Finding) -> str:
        flat = {
            key: value if not isinstance(value, (dict, list)) else json.dumps(value, sort_keys=True)
            for key, value in sorted(finding.state.items())
        }
        return pd.DataFrame([flat]).to_csv(index=False)

    def matrix(self, finding: Finding) -> str:
        return finding.artifacts["matrix"].to_csv()

    def graph(self, finding: Finding) -> str:
        return pd.DataFrame(_edge_rows(finding)).to_csv(index=False)


class DotFormatter(Formatter):
    """
    Graphviz output, available for beater graphs only.
    """

    def record(self, finding: Finding) -> str:
        raise UnsupportedError("DOT output is only available for beater graphs")

    def matrix(self, finding: Finding) -> str:
        raise UnsupportedError("DOT output is only available for beater graphs")

    def graph(self, finding: Finding) -> str:
        return finding.artifacts["graph"].to_dot()


FORMATTERS = {
    "table": TableFormatter,
    "json": JsonFormatter,
    "csv": CsvFormatter,
    "dot": DotFormatter,
}


def get_formatter(name: str) -> Formatter:
    assert name in FORMATTERS, f"Unknown output format '{name}'"
    return FORMATTERS[name]()
