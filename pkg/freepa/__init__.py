# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# pylint: disable=C0330, g-bad-import-order, g-multiple-import

"""Exact free probability on planar algebras.

freepa computes non-crossing partition calculus, free and Boolean cumulants,
planar tangles and graph planar algebra state sums exactly, and verifies the
dimension identities of free products of planar algebras.
"""

from __future__ import annotations

from freepa.config import Config
from freepa.exceptions import FreepaError
from freepa.verification import (
  Verifier,
  VerifyRequest,
  VerifyResponse,
)

__all__ = [
  'Config',
  'FreepaError',
  'Verifier',
  'VerifyRequest',
  'VerifyResponse',
]

__version__ = '0.0.1'
