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

"""Checks of free product dimensions, labels and concrete spans."""

from __future__ import annotations

from collections.abc import Iterator

from typing_extensions import override

from freepa import freeprod, gpa, moments, verification
from freepa.verification import Check

FUSS_CATALAN = (1, 3, 12, 55, 273)
PROFILE_PAIRS = (('tlj', 'tlj'), ('delta_2', 'tlj'), ('bell', 'tlj'))


class FreeprodSuite(verification.Suite):
  name = 'freeprod'

  @override
  def checks(self) -> Iterator[Check]:
    n = min(self.max_n, 5)
    tlj = freeprod.DimensionProfile.named('tlj', n)
    yield verification.expect(
      'TLJ * TLJ has Fuss-Catalan dimensions',
      freeprod.free_product_dims(tlj, tlj, n),
      list(FUSS_CATALAN[:n]),
    )
    order = min(self.max_n + 1, 6)
    for first_name, second_name in PROFILE_PAIRS:
      first = freeprod.DimensionProfile.named(first_name, order)
      second = freeprod.DimensionProfile.named(second_name, order)
      free = freeprod.free_product_dims(first, second, order)
      decomposition = freeprod.boolean_decomposition_dims(first, second, order)
      product = moments.MomentProfile('product', tuple(free))
      yield verification.expect(
        f'{first_name} * {second_name}: interval sums of dim L give dims',
        list(decomposition.interval_sums),
        free,
      )
      yield verification.expect(
        f'{first_name} * {second_name}: dim L(n) are Boolean cumulants',
        decomposition.dims,
        product.boolean_cumulants().values,
      )
      label_n = min(order, 4)
      yield verification.expect(
        f'{first_name} * {second_name}: basis labels count dimensions',
        [
          sum(1 for _ in freeprod.basis_labels(first, second, m))
          for m in range(1, label_n + 1)
        ],
        free[:label_n],
      )
    bell = moments.bell(3)
    yield verification.expect(
      'wreath character moments use the boxtimes engine',
      freeprod.wreath_character_moments(bell, bell, 3).moments,
      moments.free_mult_conv(bell, bell, 3).moments,
    )
    spec = gpa.AlgebraSpec.of(1, 1, 1, 1)
    rank_n = min(self.max_n, self.config.concrete_rank_cap)
    yield verification.expect(
      f'{spec} * {spec}: concrete TL span ranks',
      [
        freeprod.concrete_span_rank(
          spec, spec, m, cap=self.config.concrete_rank_cap
        ).rank
        for m in range(1, rank_n + 1)
      ],
      list(FUSS_CATALAN[:rank_n]),
    )
