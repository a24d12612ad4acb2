# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from penney_perms.config import Settings
from penney_perms.controller import Controller
from penney_perms.errors import CeilingExceededError, InvalidArgumentError
from penney_perms.formatter import FORMATTERS, get_formatter
from penney_perms.operations import (
    Beaters,
    Conjecture,
    ExpectedFIota,
    ExpectedI,
    ExpectedT,
    GraphOfOperations,
    Matrix,
    Probability,
    Race,
    Ties,
    VerifyBijections,
    WordsExpectedT,
    WordsProbability,
)
from penney_perms.parser import Parser
from penney_perms.workbench import Workbench

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CEILING = 3


@dataclass
class RunConfig:
    """
    One command-line invocation. N and trials default to the configured values (11 and 10^6).
    """

    command: str
    arguments: List[str] = field(default_factory=list)
    N: Optional[int] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    workers: Optional[int] = None
    output_format: str = "table"
    cache_dir: Optional[str] = None
    ceiling_consecutive: Optional[int] = None
    ceiling_vincular: Optional[int] = None
    method: Optional[str] = None
    config_path: str = ""
    record: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        output_format = "dot" if getattr(args, "dot", False) else args.format
        return cls(
            command=args.command,
            arguments=[str(value) for value in args.arguments],
            N=args.N,
            trials=args.trials,
            seed=args.seed,
            workers=args.workers,
            output_format=output_format,
            cache_dir=args.cache_dir,
            ceiling_consecutive=args.ceiling_consecutive,
            ceiling_vincular=args.ceiling_vincular,
            method=getattr(args, "method", None),
            config_path=args.config,
            record=args.record,
        )


# k ranges per command: (smallest, largest or None)
_K_RANGES = {
    "ef-iota": (2, None),
    "matrix": (3, 5),
    "beaters": (3, 5),
    "conjecture": (3, None),
    "ties": (3, 5),
    "verify-bijections": (3, None),
    "reproduce": (3, 5),
}

_PATTERN_COMMANDS = {"prob", "et", "ei", "race"}


def _bounded(value: Union[int, str], name: str, low: int, high: Optional[int] = None) -> int:
    number = int(value)
    if number < low or (high is not None and number > high):
        allowed = f"{low}..{high}" if high is not None else f"at least {low}"
        raise InvalidArgumentError(f"{name}={number} is outside the supported range ({allowed})")
    return number


def _pattern_length(text: str) -> int:
    return sum(character.isdigit() for character in text)


def check_arguments(config: RunConfig) -> None:
    """
    Reject numeric arguments outside the range their command supports.

    :param config: The invocation.
    :type config: RunConfig
    :raises InvalidArgumentError: If k, n, N or trials is out of range.
    """
    longest = 1
    if config.command in _K_RANGES:
        low, high = _K_RANGES[config.command]
        longest = _bounded(config.arguments[0], "k", low, high)
    elif config.command in _PATTERN_COMMANDS:
        longest = max(_pattern_length(text) for text in config.arguments)
    if config.command == "verify-bijections":
        _bounded(config.arguments[1], "n", longest)
    if config.N is not None:
        _bounded(config.N, "N", max(longest, 1))
    if config.trials is not None:
        _bounded(config.trials, "trials", 1)


def build_graph(config: RunConfig) -> GraphOfOperations:
    """
    The Graph of Operations for a command.

    :param config: The invocation.
    :type config: RunConfig
    :return: The graph.
    :rtype: GraphOfOperations
    :raises InvalidArgumentError: If a numeric argument is out of range.
    """
    check_arguments(config)
    args = config.arguments
    graph = GraphOfOperations()
    if config.command == "prob":
        graph.add_operation(Probability(args[0], args[1]))
    elif config.command == "et":
        graph.add_operation(ExpectedT(args[0], config.method or "closed-form"))
    elif config.command == "ei":
        graph.add_operation(ExpectedI(args[0], args[1]))
    elif config.command == "ef-iota":
        graph.add_operation(ExpectedFIota(int(args[0])))
    elif config.command == "race":
        graph.add_operation(Race(args[0], args[1]))
    elif config.command == "matrix":
        graph.add_operation(Matrix(int(args[0])))
    elif config.command == "beaters":
        graph.add_operation(Beaters(int(args[0])))
    elif config.command == "conjecture":
        graph.add_operation(Conjecture(int(args[0])))
    elif config.command == "ties":
        graph.add_operation(Ties(int(args[0])))
    elif config.command == "words-prob":
        graph.add_operation(WordsProbability(args[0], args[1], args[2]))
    elif config.command == "words-et":
        graph.add_operation(WordsExpectedT(args[0], args[1]))
    elif config.command == "verify-bijections":
        graph.add_operation(VerifyBijections(int(args[0]), int(args[1])))
    elif config.command == "reproduce":
        k = int(args[0])
        matrix = graph.add_operation(Matrix(k))
        for operation in (Beaters(k), Conjecture(k), Ties(k)):
            graph.add_operation(operation, after=[matrix])
    else:
        raise AssertionError(f"Unknown command '{config.command}'")
    return graph


def dispatch(config: RunConfig) -> Tuple[int, str]:
    """
    Run a command.

    :param config: The invocation.
    :type config: RunConfig
    :return: The exit status and the text for stdout (on success) or stderr.
    :rtype: Tuple[int, str]
    """
    try:
        settings = Settings(
            config.config_path,
            {
                "workers": config.workers,
                "cache_dir": config.cache_dir,
                "ceiling_consecutive": config.ceiling_consecutive,
                "ceiling_vincular": config.ceiling_vincular,
            },
        )
        controller = Controller(
            Workbench(settings),
            build_graph(config),
            get_formatter(config.output_format),
            Parser(),
            {
                "N": config.N,
                "trials": config.trials,
                "seed": config.seed,
                "method": config.method,
            },
        )
        controller.run()
        output = controller.render()
    except CeilingExceededError as error:
        logger.error("Refused: %s", error)
        return EXIT_CEILING, f"error: {error}\n"
    except ValueError as error:
        logger.error("Invalid request: %s", error)
        return EXIT_USAGE, f"error: {error}\n"
    if config.record is not None:
        controller.output_graph(config.record)
    return EXIT_OK, output


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--N", type=int, default=None, help="truncation length (default 11)")
    parser.add_argument("--trials", type=int, default=None, help="Monte Carlo trials (default 10^6)")
    parser.add_argument("--seed", type=int, default=None, help="seed; drawn and printed when absent")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--format", choices=sorted(FORMATTERS), default="table")
    parser.add_argument("--cache-dir", dest="cache_dir", default=None)
    parser.add_argument(
        "--ceiling-consecutive",
        dest="ceiling_consecutive",
        type=int,
        default=None,
        help="largest n enumerated for consecutive patterns (default 12)",
    )
    parser.add_argument(
        "--ceiling-vincular",
        dest="ceiling_vincular",
        type=int,
        default=None,
        help="largest n enumerated with vincular patterns (default 9)",
    )
    parser.add_argument("--config", default="", help="JSON settings file")
    parser.add_argument("--record", default=None, help="write the executed graph as JSON")
    parser.add_argument(
        "--log-level",
        dest="log_level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )


# command: (positional argument names, extra options)
COMMANDS = {
    "prob": (["sigma", "tau"], "probability method"),
    "et": (["pattern"], "expectation method"),
    "ei": (["sigma", "tau"], None),
    "ef-iota": (["k"], None),
    "race": (["sigma", "tau"], None),
    "matrix": (["k"], None),
    "beaters": (["k"], "dot"),
    "conjecture": (["k"], None),
    "ties": (["k"], None),
    "words-prob": (["w", "v", "m"], None),
    "words-et": (["w", "m"], None),
    "verify-bijections": (["k", "n"], None),
    "reproduce": (["k"], None),
}

_INTEGER_ARGUMENTS = {"k", "n", "m"}


def build_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penney-perms", description="Penney's game for consecutive permutation patterns."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, (names, extra) in COMMANDS.items():
        subparser = subparsers.add_parser(command)
        for name in names:
            subparser.add_argument(name, type=int if name in _INTEGER_ARGUMENTS else str)
        if extra == "probability method":
            subparser.add_argument("--method", choices=["auto", "oracle", "automaton"], default="auto")
        elif extra == "expectation method":
            subparser.add_argument("--method", choices=["closed-form", "series"], default="closed-form")
        elif extra == "dot":
            subparser.add_argument("--dot", action="store_true", help="same as --format dot")
        _add_common(subparser)
        subparser.set_defaults(positional=names)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Command-line entry point. Exit status 0 on success, 2 on invalid
    arguments, 3 when an enumeration ceiling refuses the request.
    """
    args = build_argument_parser().parse_args(argv)
    args.arguments = [getattr(args, name) for name in args.positional]
    logging.basicConfig(
        level=args.log_level,
        stream=sys.stderr,
        format="%(name)s - %(levelname)s - %(message)s",
    )
    status, text = dispatch(RunConfig.from_args(args))
    (sys.stdout if status == EXIT_OK else sys.stderr).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
