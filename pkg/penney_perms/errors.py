# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.


class PenneyError(ValueError):
    """
    Base class of all errors raised for invalid requests.
    """


class InvalidPatternError(PenneyError):
    """
    Raised when a pattern or word cannot be parsed or is not well formed.
    """


class DistinctValuesError(PenneyError):
    """
    Raised when standardization is asked for values that are not pairwise distinct.
    """


class ComparablePatternsError(PenneyError):
    """
    Raised when two patterns (or words) are not incomparable.
    """


class CeilingExceededError(PenneyError):
    """
    Raised when an enumeration is requested above the configured ceiling.
    """


class UnsupportedError(PenneyError):
    """
    Raised when no closed form, recurrence or certificate path exists for the request.
    """


class MembershipError(PenneyError):
    """
    Raised when a bijection is applied outside of its source set.
    """


class EmptyCountTableError(PenneyError):
    """
    Raised when a series is evaluated without any counts.
    """


class InvalidArgumentError(PenneyError):
    """
    Raised when a numeric argument lies outside the range a command supports.
    """
