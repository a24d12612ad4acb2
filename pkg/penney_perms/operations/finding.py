# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import itertools
import logging
from typing import Any, Dict, Iterator, Optional


class Finding:
    """
    The result of an operation: a JSON-serialisable record, the rich objects
    behind it, and whether its claim is certified.
    """

    _ids: Iterator[int] = itertools.count(0)

    def __init__(
        self,
        kind: str,
        state: Optional[Dict] = None,
        artifacts: Optional[Dict[str, Any]] = None,
        headline: Optional[str] = None,
    ) -> None:
        """
        Initializes a new Finding.

        :param kind: What the finding holds ("record", "matrix" or "graph").
        :type kind: str
        :param state: The record. Defaults to None.
        :type state: Optional[Dict]
        :param artifacts: Objects such as the probability matrix. Defaults to None.
        :type artifacts: Optional[Dict[str, Any]]
        :param headline: One-line summary used by the table output. Defaults to None.
        :type headline: Optional[str]
        """
        self.logger: logging.Logger = logging.getLogger(self.__class__.__name__)
        self.id: int = next(Finding._ids)
        self.kind: str = kind
        self.state: Dict = state if state is not None else {}
        self.artifacts: Dict[str, Any] = artifacts if artifacts is not None else {}
        self.headline: Optional[str] = headline
        self._certified: bool = False
        self.assessed: bool = False

    @property
    def certified(self) -> bool:
        return self._certified

    @certified.setter
    def certified(self, certified: bool) -> None:
        """
        Sets the certified flag and marks the finding as assessed.
        """
        self.assessed = True
        self._certified = certified
