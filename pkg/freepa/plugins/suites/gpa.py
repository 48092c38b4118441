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

"""Checks of the graph planar algebra evaluator."""

from __future__ import annotations

import random
from collections.abc import Iterator
from fractions import Fraction

from typing_extensions import override

from freepa import gpa, verification
from freepa.adapters import codecs
from freepa.verification import Check

DEFAULT_SPECS = ((1, 1), (1, 2), (2,), (1, 1, 1, 1))
RANDOM_PAIRS = 4


class GpaSuite(verification.Suite):
  name = 'gpa'

  def specs(self) -> list[gpa.AlgebraSpec]:
    if self.config.spec_paths:
      return [codecs.load_spec(path) for path in self.config.spec_paths]
    return [gpa.AlgebraSpec.of(*blocks) for blocks in DEFAULT_SPECS]

  def _basis(self, spec: gpa.AlgebraSpec, n: int) -> list[gpa.LoopVector]:
    return [
      gpa.LoopVector.basis(loop)
      for loop in gpa.loop_basis(
        spec, n, self.config.loop_degree_cap, self.config.loop_dimension_cap
      )
    ]

  @override
  def checks(self) -> Iterator[Check]:
    n_max = min(self.max_n, 3)
    for spec in self.specs():
      yield verification.expect(
        f'{spec}: spin vector is a sqrt(d) eigenvector',
        spec.spin_vector_is_eigenvector(),
        True,
      )
      yield verification.expect(
        f'{spec}: dim P_n = d^n',
        [len(self._basis(spec, n)) for n in range(1, n_max + 1)],
        [spec.dimension**n for n in range(1, n_max + 1)],
      )
      units = [
        (block, row, col)
        for block, size in enumerate(spec.blocks, start=1)
        for row in range(1, size + 1)
        for col in range(1, size + 1)
      ]
      yield verification.exhaustive(
        f'{spec}: degree 1 products are matrix unit products',
        [(a, b) for a in units for b in units],
        lambda pair, spec=spec: _matrix_units_multiply(spec, *pair),
        lambda pair: f'e{pair[0]} e{pair[1]}',
      )
      yield verification.exhaustive(
        f'{spec}: Tr_1 is the Markov trace',
        units,
        lambda unit, spec=spec: gpa.trace(spec, gpa.matrix_unit(spec, *unit))
        == (
          Fraction(spec.size(unit[0]), spec.dimension)
          if unit[1] == unit[2]
          else 0
        ),
        lambda unit: f'e{unit}',
      )
      yield from self._temperley_lieb(spec, n_max)
      for n in range(1, n_max + 1):
        basis = self._basis(spec, n)
        yield verification.exhaustive(
          f'{spec}: left and right traces agree in degree {n}',
          basis,
          lambda x, spec=spec: gpa.trace(spec, x, 'left')
          == gpa.trace(spec, x, 'right'),
        )
        yield verification.expect(
          f'{spec}: Gram matrix of degree {n} is positive semidefinite',
          gpa.is_positive_semidefinite(spec, basis),
          True,
        )
        yield verification.expect(
          f'{spec}: Gram matrix of Temperley-Lieb in degree {n} is PSD',
          gpa.is_positive_semidefinite(spec, gpa.tl_image(spec, n)),
          True,
        )
        yield self._inner_products(spec, n)
    yield from self._far_commutation()
    yield from self._boolean_subspaces()

  def _inner_products(self, spec: gpa.AlgebraSpec, n: int) -> Check:
    generator = random.Random(f'{self.config.seed}:{spec}:{n}')
    cap = self.config.loop_degree_cap
    vectors = [
      gpa.random_vector(spec, n, generator, degree_cap=cap)
      for _ in range(2 * RANDOM_PAIRS)
    ]
    pairs = [(x, x + y) for x, y in zip(vectors[::2], vectors[1::2])]
    return verification.exhaustive(
      f'{spec}: Tr(y* x) through tangles matches loop norms in degree {n}',
      pairs,
      lambda pair, spec=spec: gpa.inner_product(spec, *pair, via_tangles=True)
      == gpa.inner_product(spec, *pair),
      lambda pair: f'x={pair[0]}, y={pair[1]}',
    )

  def _temperley_lieb(
    self, spec: gpa.AlgebraSpec, n_max: int
  ) -> Iterator[Check]:
    for k in range(2, n_max + 1):
      e = [gpa.jones_projection(spec, k, i) for i in range(1, k)]
      yield verification.expect(
        f'{spec}: e_1^2 = e_1 in degree {k}',
        gpa.multiply(spec, e[0], e[0]),
        e[0],
      )
      if k >= 3:
        yield verification.expect(
          f'{spec}: e_1 e_2 e_1 = delta^-2 e_1 in degree {k}',
          gpa.multiply(spec, gpa.multiply(spec, e[0], e[1]), e[0]),
          e[0] * Fraction(1, spec.dimension),
        )
        yield verification.expect(
          f'{spec}: e_2 e_1 e_2 = delta^-2 e_2 in degree {k}',
          gpa.multiply(spec, gpa.multiply(spec, e[1], e[0]), e[1]),
          e[1] * Fraction(1, spec.dimension),
        )
      yield verification.expect(
        f'{spec}: Tr_{k} of the unit is 1',
        gpa.trace(spec, gpa.unit_vector(spec, k)),
        1,
      )

  def _far_commutation(self) -> Iterator[Check]:
    if self.max_n < 4:
      return
    spec = gpa.AlgebraSpec.of(1, 1, 1, 1)
    e1 = gpa.jones_projection(spec, 4, 1)
    e3 = gpa.jones_projection(spec, 4, 3)
    yield verification.expect(
      f'{spec}: e_1 e_3 = e_3 e_1 in degree 4',
      gpa.multiply(spec, e1, e3),
      gpa.multiply(spec, e3, e1),
    )

  def _boolean_subspaces(self) -> Iterator[Check]:
    for blocks, cap in (((1, 1), 3), ((1, 1, 1, 1), 2)):
      full_spec = gpa.AlgebraSpec.of(*blocks)
      full_n = min(self.max_n, cap)
      full = {n: self._basis(full_spec, n) for n in range(1, full_n + 1)}
      yield verification.expect(
        f'{full_spec}: Boolean subspaces of the full algebra',
        [
          len(gpa.boolean_subspace(full_spec, full, n))
          for n in range(1, full_n + 1)
        ],
        [full_spec.dimension] + [0] * (full_n - 1),
      )
    spec = gpa.AlgebraSpec.of(1, 1, 1, 1)
    tl_n = min(self.max_n, 4)
    realized = {n: gpa.tl_image(spec, n) for n in range(1, tl_n + 1)}
    yield verification.expect(
      f'{spec}: Boolean subspaces of Temperley-Lieb',
      [
        len(gpa.boolean_subspace(spec, realized, n))
        for n in range(1, tl_n + 1)
      ],
      [1, 1, 2, 5][:tl_n],
    )


def _matrix_units_multiply(
  spec: gpa.AlgebraSpec,
  first: tuple[int, int, int],
  second: tuple[int, int, int],
) -> bool:
  product = gpa.multiply(
    spec, gpa.matrix_unit(spec, *first), gpa.matrix_unit(spec, *second)
  )
  (b1, r1, c1), (b2, r2, c2) = first, second
  if b1 == b2 and c1 == r2:
    return product == gpa.matrix_unit(spec, b1, r1, c2)
  return not product
