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

"""Exact linear algebra over rationals and surd fields.

Matrices are lists of rows. Entries are ints, Fractions or Surds; surd pivots
are inverted through the SurdField passed by the caller.
"""

from __future__ import annotations

import copy
from collections.abc import Callable, Hashable, Iterable, Mapping, Sequence
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from freepa import exceptions

if TYPE_CHECKING:
  from freepa import numeric

Matrix = list[list[Any]]
Vector = list[Any]


def _reciprocal(value: Any, field: numeric.SurdField | None) -> Any:
  if isinstance(value, (int, Fraction)):
    return 1 / Fraction(value)
  if value.is_rational:
    return 1 / value.rational_part
  if field is None:
    raise exceptions.RadicandOutsideField(
      f'Cannot invert {value} without a declared field'
    )
  return field.inverse(value)


def sign(value: Any) -> int:
  """Exact sign of a rational or surd."""
  if isinstance(value, (int, Fraction)):
    return (value > 0) - (value < 0)
  return value.sign()


def row_reduce(
  matrix: Sequence[Sequence[Any]], field: numeric.SurdField | None = None
) -> tuple[Matrix, list[int]]:
  """Brings matrix to reduced row echelon form.

  Args:
    matrix: Matrix to reduce; not modified.
    field: Field used to invert non-rational pivots.

  Returns:
    Reduced matrix and the list of pivot columns.
  """
  rows = [list(row) for row in matrix]
  if not rows:
    return rows, []
  n_rows, n_cols = len(rows), len(rows[0])
  pivots: list[int] = []
  lead = 0
  for column in range(n_cols):
    if lead >= n_rows:
      break
    pivot_row = next(
      (r for r in range(lead, n_rows) if rows[r][column]), None
    )
    if pivot_row is None:
      continue
    rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
    inverse = _reciprocal(rows[lead][column], field)
    rows[lead] = [entry * inverse for entry in rows[lead]]
    for r in range(n_rows):
      if r != lead and rows[r][column]:
        factor = rows[r][column]
        rows[r] = [
          entry - factor * pivot_entry
          for entry, pivot_entry in zip(rows[r], rows[lead])
        ]
    pivots.append(column)
    lead += 1
  return rows, pivots


def rank(
  matrix: Sequence[Sequence[Any]], field: numeric.SurdField | None = None
) -> int:
  """Exact rank of a matrix."""
  return len(row_reduce(matrix, field)[1])


def solve(
  matrix: Sequence[Sequence[Any]],
  rhs: Sequence[Any],
  field: numeric.SurdField | None = None,
) -> Vector:
  """Solves a square nonsingular system matrix @ x = rhs.

  Raises:
    ValueError: When the system is singular.
  """
  augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
  reduced, pivots = row_reduce(augmented, field)
  size = len(matrix)
  if pivots != list(range(size)):
    raise ValueError('Singular system has no unique solution')
  return [reduced[i][size] for i in range(size)]


def determinant(
  matrix: Sequence[Sequence[Any]], field: numeric.SurdField | None = None
) -> Any:
  """Determinant by elimination."""
  rows = [list(row) for row in matrix]
  size = len(rows)
  result: Any = Fraction(1)
  for column in range(size):
    pivot_row = next((r for r in range(column, size) if rows[r][column]), None)
    if pivot_row is None:
      return Fraction(0)
    if pivot_row != column:
      rows[column], rows[pivot_row] = rows[pivot_row], rows[column]
      result = -result
    pivot = rows[column][column]
    result = result * pivot
    inverse = _reciprocal(pivot, field)
    for r in range(column + 1, size):
      if rows[r][column]:
        factor = rows[r][column] * inverse
        rows[r] = [
          entry - factor * pivot_entry
          for entry, pivot_entry in zip(rows[r], rows[column])
        ]
  return result


def leading_minors(
  matrix: Sequence[Sequence[Any]], field: numeric.SurdField | None = None
) -> list[Any]:
  """Determinants of the leading principal submatrices."""
  return [
    determinant([row[:size] for row in matrix[:size]], field)
    for size in range(1, len(matrix) + 1)
  ]


def is_positive_semidefinite(
  matrix: Sequence[Sequence[Any]], field: numeric.SurdField | None = None
) -> bool:
  """Decides positive semidefiniteness of a symmetric matrix exactly.

  Symmetric elimination: a zero diagonal entry with a nonzero row, or a
  negative pivot, certifies that the matrix is not PSD.
  """
  rows = copy.deepcopy([list(row) for row in matrix])
  remaining = list(range(len(rows)))
  while remaining:
    for i in remaining:
      if not rows[i][i] and any(rows[i][j] for j in remaining):
        return False
    pivot_index = next((i for i in remaining if rows[i][i]), None)
    if pivot_index is None:
      return True
    pivot = rows[pivot_index][pivot_index]
    if sign(pivot) < 0:
      return False
    inverse = _reciprocal(pivot, field)
    remaining.remove(pivot_index)
    for i in remaining:
      factor = rows[i][pivot_index] * inverse
      if factor:
        for j in remaining:
          rows[i][j] = rows[i][j] - factor * rows[pivot_index][j]
  return True


def gram_schmidt(
  vectors: Iterable[Any],
  inner_product: Callable[[Any, Any], Any],
  field: numeric.SurdField | None = None,
) -> list[Any]:
  """Orthogonalizes vectors, dropping those dependent on earlier ones.

  Vectors need `-`, multiplication by a scalar and truthiness, as
  gpa.LoopVector provides.

  Args:
    vectors: Vectors to orthogonalize.
    inner_product: Symmetric bilinear form.
    field: Field used to divide by squared norms.

  Returns:
    Pairwise orthogonal nonzero vectors spanning the same space.
  """
  basis: list[tuple[Any, Any]] = []
  for vector in vectors:
    current = vector
    for orthogonal, norm_inverse in basis:
      coefficient = inner_product(current, orthogonal) * norm_inverse
      if coefficient:
        current = current - orthogonal * coefficient
    if not current:
      continue
    norm = inner_product(current, current)
    if not norm:
      raise ValueError('Inner product is degenerate on the given vectors')
    basis.append((current, _reciprocal(norm, field)))
  return [vector for vector, _ in basis]


class SparseBasis:
  """Echelon basis of sparse vectors given as mappings key -> scalar.

  Each stored row has its smallest key as pivot with coefficient 1.
  """

  def __init__(self, field: numeric.SurdField | None = None) -> None:
    self.field = field
    self.rows: dict[Hashable, dict[Hashable, Any]] = {}

  def reduce(self, vector: Mapping[Hashable, Any]) -> dict[Hashable, Any]:
    """Remainder of vector after elimination by the stored rows."""
    current = {key: value for key, value in vector.items() if value}
    done: set[Hashable] = set()
    while True:
      pending = [key for key in current if key in self.rows and key not in done]
      if not pending:
        return current
      key = min(pending)
      coefficient = current[key]
      for row_key, value in self.rows[key].items():
        updated = current.get(row_key, 0) - coefficient * value
        if updated:
          current[row_key] = updated
        else:
          current.pop(row_key, None)
      done.add(key)

  def add(self, vector: Mapping[Hashable, Any]) -> bool:
    """Adds vector; returns whether it was independent of the basis."""
    remainder = self.reduce(vector)
    if not remainder:
      return False
    pivot = min(remainder)
    inverse = _reciprocal(remainder[pivot], self.field)
    self.rows[pivot] = {
      key: value * inverse for key, value in remainder.items()
    }
    return True

  def contains(self, vector: Mapping[Hashable, Any]) -> bool:
    return not self.reduce(vector)

  @property
  def rank(self) -> int:
    return len(self.rows)


def sparse_rank(
  vectors: Iterable[Mapping[Hashable, Any]],
  field: numeric.SurdField | None = None,
) -> int:
  """Rank of a family of sparse vectors."""
  basis = SparseBasis(field)
  for vector in vectors:
    basis.add(vector)
  return basis.rank
