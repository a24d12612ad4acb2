# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

import json
import logging
import os
from typing import Any, Dict, Optional

CACHE_DIR_VARIABLE = "PENNEY_PERMS_CACHE_DIR"

DEFAULTS: Dict[str, Any] = {
    "cache_dir": None,
    "workers": 1,
    "ceiling_consecutive": 12,
    "ceiling_vincular": 9,
    "oracle_max_n": 8,
    "default_N": 11,
    "default_trials": 1000000,
    "mc_block_trials": 65536,
    "mc_horizon": 64,
}


class Settings:
    """
    Runtime settings shared by the counting, simulation and command-line layers.
    """

    def __init__(
        self, config_path: str = "", overrides: Optional[Dict[str, Any]] = None
    ) -> None:
        """
        Initialize the settings from the defaults, a JSON config file, the cache
        directory environment variable and explicit overrides, in that order.

        :param config_path: Path to the config file. Defaults to "", meaning
                            `config.json` next to this module if it exists.
        :type config_path: str
        :param overrides: Values that take precedence over the config file and the
                          environment. None entries are ignored.
        :type overrides: Optional[Dict[str, Any]]
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.config: Dict[str, Any] = dict(DEFAULTS)
        self.load_config(config_path)
        if os.getenv(CACHE_DIR_VARIABLE):
            self.config["cache_dir"] = os.getenv(CACHE_DIR_VARIABLE)
        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if key not in DEFAULTS:
                raise ValueError(f"Unknown setting '{key}'")
            self.config[key] = value

        self.cache_dir: Optional[str] = self.config["cache_dir"]
        self.workers: int = int(self.config["workers"])
        self.ceiling_consecutive: int = int(self.config["ceiling_consecutive"])
        self.ceiling_vincular: int = int(self.config["ceiling_vincular"])
        self.oracle_max_n: int = int(self.config["oracle_max_n"])
        self.default_N: int = int(self.config["default_N"])
        self.default_trials: int = int(self.config["default_trials"])
        self.mc_block_trials: int = int(self.config["mc_block_trials"])
        self.mc_horizon: int = int(self.config["mc_horizon"])
        if self.workers < 1:
            raise ValueError("The worker count has to be positive")

    def load_config(self, path: str) -> None:
        """
        Load configuration from a specified path.

        :param path: Path to the config file. If an empty path is provided,
                     `config.json` in this directory is used when present.
        :type path: str
        """
        if path == "":
            current_dir = os.path.dirname(os.path.abspath(__file__))
            path = os.path.join(current_dir, "config.json")
            if not os.path.exists(path):
                self.logger.debug("No config file at %s, using defaults", path)
                return
        elif not os.path.exists(path):
            raise ValueError(f"No config file at {path}")

        with open(path, "r") as f:
            loaded = json.load(f)
        unknown = sorted(set(loaded) - set(DEFAULTS))
        if unknown:
            self.logger.warning("Ignoring unknown settings %s in %s", unknown, path)
        for key in DEFAULTS:
            if key in loaded:
                self.config[key] = loaded[key]

        self.logger.debug("Loaded config from %s", path)

    def as_dict(self) -> Dict[str, Any]:
        return dict(self.config)
