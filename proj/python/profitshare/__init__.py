# Copyright 2026 The profitshare Authors
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

"""Exact profit-sharing games with monotone submodular valuations."""

from ._core import (  # noqa: F401
    Error,
    Game,
    InvalidCoalition,
    NoEquilibriumFound,
    NoOpMove,
    ParseError,
    Scheme,
    SchemeMismatch,
    TooLarge,
    Unsupported,
    ValidationFailure,
    Valuation,
    convergence_bounds,
    cross_check,
    load_game,
    parse_game,
    reproduce,
    run_cli,
    two_party_tight_game,
)

__version__ = "0.1.0"
