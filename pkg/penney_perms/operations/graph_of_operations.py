# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
from typing import List, Optional, Sequence

from penney_perms.operations.operations import Operation, OperationType


class GraphOfOperations:
    """
    The execution plan of one run: operations and the findings they consume.

    Roots have no predecessors; leaves have no successors and hold the
    findings that are reported.
    """

    def __init__(self) -> None:
        self.operations: List[Operation] = []
        self.roots: List[Operation] = []
        self.leaves: List[Operation] = []

    def add_operation(
        self, operation: Operation, after: Optional[Sequence[Operation]] = None
    ) -> Operation:
        """
        Add an operation behind the given operations of the graph.

        :param operation: The operation to add.
        :type operation: Operation
        :param after: Operations whose findings it consumes. Defaults to none, making it a root.
        :type after: Optional[Sequence[Operation]]
        :return: The operation, for chaining.
        :rtype: Operation
        """
        for predecessor in after or ():
            assert predecessor in self.operations, "Predecessors have to be added first"
            predecessor.add_successor(operation)
            if predecessor in self.leaves:
                self.leaves.remove(predecessor)
        self.operations.append(operation)
        if len(operation.predecessors) == 0:
            self.roots.append(operation)
        self.leaves.append(operation)
        return operation

    def append_operation(self, operation: Operation) -> Operation:
        """
        Add an operation behind all current leaves.
        """
        return self.add_operation(operation, after=list(self.leaves))

    def chain(self, *operations: Operation) -> GraphOfOperations:
        """
        Add operations so that each one consumes the findings of the previous one.
        """
        previous: List[Operation] = []
        for operation in operations:
            self.add_operation(operation, after=previous)
            previous = [operation]
        return self

    def find(self, operation_type: OperationType) -> List[Operation]:
        return [op for op in self.operations if op.operation_type == operation_type]
