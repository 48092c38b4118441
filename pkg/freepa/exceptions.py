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

"""Errors raised by freepa."""


class FreepaError(Exception):
  """Base freepa error."""


class CapExceeded(FreepaError):
  """Requested size is above the configured enumeration cap."""


class OrderMismatch(FreepaError):
  """Partitions of different orders were combined."""


class NotNonCrossing(FreepaError):
  """Operation requires a non-crossing partition."""


class OddOrder(FreepaError):
  """Operation requires a partition of even order."""


class NotEven(FreepaError):
  """Operation requires a partition with blocks of even size."""


class PrecedenceViolation(FreepaError):
  """Partition does not dominate the required pair partition."""


class NotAdjacent(FreepaError):
  """Blocks cannot be merged without creating a crossing."""


class InvalidSplitIndex(FreepaError):
  """Split point is outside the block."""


class SequenceTooShort(FreepaError):
  """Moment or cumulant sequence is shorter than required."""


class GroupTooLarge(FreepaError):
  """Generated permutation group exceeds the configured order cap."""


class NotConnected(FreepaError):
  """Tangle is not connected."""


class NotPlanar(FreepaError):
  """String matching does not describe a planar tangle."""


class DegreeMismatch(FreepaError):
  """Degrees of glued disks or inputs do not agree."""


class NotFree(FreepaError):
  """Pair of tangles fails the freeness criterion."""


class NotReduced(FreepaError):
  """Pair of tangles is not a reduced free pair."""


class UnsupportedTangleShape(FreepaError):
  """Tangle cannot be evaluated by the state sum."""


class RadicandOutsideField(FreepaError):
  """Surd uses a square root not declared in the field."""


class NotClosedUnderConcatenation(FreepaError):
  """Concatenations leave the realized subspaces."""


class NegativeBooleanCumulant(FreepaError):
  """Profile cannot be the dimension sequence of a planar algebra."""


class PartitionSyntaxError(FreepaError):
  """Partition text cannot be parsed."""


class SurdSyntaxError(FreepaError):
  """Surd text cannot be parsed."""


class TangleSyntaxError(FreepaError):
  """Tangle expression cannot be parsed.

  Attributes:
    line: 1-based line of the offending token.
    col: 1-based column of the offending token.
    expected: What the parser expected at that position.
  """

  def __init__(self, message: str, line: int, col: int, expected: str) -> None:
    """Initializes TangleSyntaxError."""
    super().__init__(f'{message} at {line}:{col}, expected {expected}')
    self.line = line
    self.col = col
    self.expected = expected
