# Copyright 2026 The zdsolve Authors
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

"""Certified solving of zero-dimensional integer polynomial systems.

Every function takes the same text format as the command-line tool and
returns the report as a dict. Interval endpoints are dyadic strings such as
"-5*2^-3"; see ``dyadic``.
"""

import json
from fractions import Fraction

from zdsolve._core import (
    CertificationError,
    CheckFailure,
    Error,
    InputError,
    NoPreimageError,
    ParseError,
    PositiveDimensionalError,
    PreconditionError,
)
from zdsolve import _core

__all__ = [
    "CertificationError",
    "CheckFailure",
    "Error",
    "InputError",
    "NoPreimageError",
    "ParseError",
    "PositiveDimensionalError",
    "PreconditionError",
    "dyadic",
    "eliminate",
    "grid_sep",
    "interval",
    "roots",
    "run",
    "slf",
    "solve",
]


def run(command, text, *, precision=53, seed=0, check=False, form=None,
        block=None):
    """Runs one stage ("roots", "eliminate", "grid-sep", "slf", "solve")."""
    if form is not None:
        form = [str(int(c)) for c in form]
    if block is not None:
        block = str(int(block))
    out = _core.run(command, text, precision, seed, check, form, block, False)
    return json.loads(out)


def roots(text, **kwargs):
    return run("roots", text, **kwargs)


def eliminate(text, form=None, **kwargs):
    return run("eliminate", text, form=form, **kwargs)


def grid_sep(text, block=None, **kwargs):
    return run("grid-sep", text, block=block, **kwargs)


def slf(text, block=None, **kwargs):
    return run("slf", text, block=block, **kwargs)


def solve(text, **kwargs):
    return run("solve", text, **kwargs)


def dyadic(s):
    """Exact value of a dyadic string "m*2^e"."""
    mantissa, exponent = s.split("*2^")
    return Fraction(int(mantissa)) * Fraction(2) ** int(exponent)


def interval(pair):
    lo, hi = pair
    return dyadic(lo), dyadic(hi)
