# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

import json
import logging
from typing import List

from penney_perms.formatter import Formatter
from penney_perms.operations import Finding, GraphOfOperations
from penney_perms.parser import Parser
from penney_perms.workbench import Workbench


class Controller:
    """
    Runs a Graph of Operations against a workbench and renders the findings of its leaves.
    """

    def __init__(
        self,
        workbench: Workbench,
        graph: GraphOfOperations,
        formatter: Formatter,
        parser: Parser,
        run_parameters: dict,
    ) -> None:
        """
        Initialize the Controller.

        :param workbench: Shared computation context.
        :type workbench: Workbench
        :param graph: The Graph of Operations to be executed.
        :type graph: GraphOfOperations
        :param formatter: Output format of the final findings.
        :type formatter: Formatter
        :param parser: Parser for pattern and word arguments.
        :type parser: Parser
        :param run_parameters: Options passed to every operation (N, method, trials, seed).
        :type run_parameters: dict
        """
        self.logger = logging.getLogger(self.__class__.__module__)
        self.workbench = workbench
        self.graph = graph
        self.formatter = formatter
        self.parser = parser
        self.run_parameters = run_parameters
        self.run_executed = False

    def run(self) -> None:
        """
        Execute the operations as soon as all their predecessors are done.

        :raises AssertionError: If the graph has no roots or a successor lies outside the graph.
        """
        assert len(self.graph.roots) > 0, "The operations graph has no root"

        execution_queue = [
            operation
            for operation in self.graph.operations
            if operation.can_be_executed()
        ]

        while len(execution_queue) > 0:
            current_operation = execution_queue.pop(0)
            current_operation.execute(self.workbench, self.parser, **self.run_parameters)
            for operation in current_operation.successors:
                assert (
                    operation in self.graph.operations
                ), "The successor of an operation is not in the operations graph"
                if (
                    operation.can_be_executed()
                    and not operation.executed
                    and operation not in execution_queue
                ):
                    execution_queue.append(operation)
        self.logger.info(
            "All operations executed, %d permutations visited", self.workbench.visited
        )
        self.run_executed = True

    def get_final_findings(self) -> List[Finding]:
        """
        The findings of the leaves, in the order the leaves were added.

        :raises AssertionError: If `run` has not been executed yet.
        """
        assert self.run_executed, "The run method has not been executed"
        return [
            finding for operation in self.graph.leaves for finding in operation.get_findings()
        ]

    def render(self) -> str:
        return self.formatter.render(self.get_final_findings())

    def output_graph(self, path: str) -> None:
        """
        Serialize the executed operations and their findings to a JSON file.

        :param path: The path to the output file.
        :type path: str
        """
        output = []
        for operation in self.graph.operations:
            findings = operation.get_findings()
            operation_serialized = {
                "operation": operation.operation_type.name,
                "id": operation.id,
                "predecessors": [predecessor.id for predecessor in operation.predecessors],
                "findings": [finding.state for finding in findings],
            }
            if any(finding.assessed for finding in findings):
                operation_serialized["certified"] = [finding.certified for finding in findings]
            output.append(operation_serialized)

        output.append(
            {
                "run_parameters": self.run_parameters,
                "settings": self.workbench.settings.as_dict(),
                "permutations_visited": self.workbench.visited,
            }
        )

        with open(path, "w") as file:
            file.write(json.dumps(output, indent=2, sort_keys=True, default=str))
