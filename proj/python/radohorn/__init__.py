# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact partition analysis for finite rational vector families.

Every report is the same JSON document the command line tool prints,
parsed into a dict. Coordinates are exact: integers or "p/q" strings,
never floats.
"""

import json

from . import _core
from ._core import BudgetError, Family, ParseError, RadoHornError, rank

__all__ = [
    "BudgetError",
    "Family",
    "ParseError",
    "RadoHornError",
    "analyze",
    "construct",
    "family",
    "oracle",
    "partition",
    "rank",
    "remove",
    "witness",
]


def _coerce(value):
    if isinstance(value, bool):
        raise TypeError("coordinates must be integers or 'p/q' strings")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    raise TypeError(
        "coordinates must be integers or 'p/q' strings, got %r" % (value,)
    )


def family(dimension, vectors):
    """Build a Family from (id, coords) pairs with exact coordinates."""
    entries = [
        (str(label), [_coerce(c) for c in coords]) for label, coords in vectors
    ]
    return Family(dimension, entries)


def partition(fam, render=False, ascii_only=False):
    return json.loads(_core.partition_report(fam, render, ascii_only))


def analyze(fam, k):
    return json.loads(_core.analyze_report(fam, k))


def construct(fam, trace=False, ascii_only=False):
    return json.loads(_core.construct_report(fam, trace, ascii_only))


def witness(fam, k):
    return json.loads(_core.witness_report(fam, k))


def remove(fam, k, l):
    return json.loads(_core.remove_report(fam, k, l))


def oracle(fam):
    return json.loads(_core.oracle_report(fam))
