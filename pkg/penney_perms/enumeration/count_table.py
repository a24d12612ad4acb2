# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
import math
import os
import tempfile
import threading
from dataclasses import dataclass, field
from typing import Dict, Optional

import backoff


@dataclass
class CountTable:
    """
    Exact counts indexed by the length n, for one enumeration kind and one set of parameters.
    """

    kind: str
    parameters: str
    counts: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __contains__(self, n: int) -> bool:
        return n in self.counts

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def key(self) -> str:
        return f"{self.kind}__{self.parameters}"

    @property
    def max_n(self) -> int:
        return max(self.counts, default=-1)

    def covers(self, N: int) -> bool:
        """
        Whether every length 0..N is present.
        """
        return all(n in self.counts for n in range(N + 1))

    def truncated(self, N: int) -> CountTable:
        return CountTable(
            self.kind,
            self.parameters,
            {n: count for n, count in self.counts.items() if n <= N},
        )

    def check(self) -> None:
        """
        :raises AssertionError: If a count is negative or exceeds n!.
        """
        for n, count in self.counts.items():
            assert 0 <= count <= math.factorial(n), (
                f"Count {count} at n={n} is out of range for {self.key}"
            )

    def to_text(self) -> str:
        return "".join(f"{n}\t{self.counts[n]}\n" for n in sorted(self.counts))

    @classmethod
    def from_text(cls, kind: str, parameters: str, text: str) -> CountTable:
        counts = {}
        for line in text.splitlines():
            if line.strip() == "":
                continue
            n, count = line.split("\t")
            counts[int(n)] = int(count)
        return cls(kind, parameters, counts)


class CountCache:
    """
    Memoization of CountTables in memory and, optionally, in a cache directory
    holding one file per (kind, parameters).

    Reads may happen concurrently; writes are serialized by a lock and land
    atomically through a rename.
    """

    def __init__(self, directory: Optional[str] = None) -> None:
        """
        Initialize the cache.

        :param directory: Cache directory. None keeps the tables in memory only.
        :type directory: Optional[str]
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.directory = directory
        self._tables: Dict[str, CountTable] = {}
        self._lock = threading.Lock()
        if self.directory is not None:
            os.makedirs(self.directory, exist_ok=True)

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, f"{key}.tsv")

    @backoff.on_exception(
        backoff.expo,
        OSError,
        max_tries=5,
        giveup=lambda error: isinstance(error, FileNotFoundError),
    )
    def _read_file(self, path: str) -> str:
        with open(path, "r") as f:
            return f.read()

    @backoff.on_exception(backoff.expo, OSError, max_tries=5)
    def _write_file(self, path: str, text: str) -> None:
        handle, temporary = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(handle, "w") as f:
                f.write(text)
            os.replace(temporary, path)
        finally:
            if os.path.exists(temporary):
                os.remove(temporary)

    def get(self, kind: str, parameters: str) -> Optional[CountTable]:
        """
        Look up a table, first in memory and then on disk.

        :param kind: Enumeration kind tag.
        :type kind: str
        :param parameters: Serialized patterns and constraints.
        :type parameters: str
        :return: The cached table or None.
        :rtype: Optional[CountTable]
        """
        key = f"{kind}__{parameters}"
        table = self._tables.get(key)
        if table is not None:
            return table
        if self.directory is None:
            return None
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            table = CountTable.from_text(kind, parameters, self._read_file(path))
        except (OSError, ValueError) as error:
            self.logger.warning("Ignoring unreadable cache file %s: %s", path, error)
            return None
        self.logger.debug("Loaded %s from %s", key, path)
        self._tables[key] = table
        return table

    def put(self, table: CountTable) -> None:
        """
        Store a table, merging it with what is already known for the same key.

        :param table: The table to store.
        :type table: CountTable
        """
        table.check()
        with self._lock:
            known = self._tables.get(table.key)
            if known is not None:
                merged = dict(known.counts)
                merged.update(table.counts)
                table = CountTable(table.kind, table.parameters, merged)
            self._tables[table.key] = table
            if self.directory is not None:
                self._write_file(self._path(table.key), table.to_text())
                self.logger.debug("Wrote %s to the cache directory", table.key)

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()
