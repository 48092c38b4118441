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

"""Checks of Kreweras complements and their nested variants."""

from __future__ import annotations

from collections.abc import Iterator

from typing_extensions import override

from freepa import exceptions, partitions, verification
from freepa.verification import Check

KREWERAS_LAW_MAX_N = 9
SURGERY_MAX_N = 7


def _even_orders(k_max: int) -> Iterator[partitions.Partition]:
  for k in range(1, k_max + 1):
    yield from partitions.noncrossing_partitions(2 * k)


class KrewerasSuite(verification.Suite):
  name = 'kreweras'

  @override
  def checks(self) -> Iterator[Check]:
    yield verification.exhaustive(
      '|p| + |K(p)| = n + 1 and K^-1(K(p)) = p',
      (
        p
        for n in range(1, min(KREWERAS_LAW_MAX_N, self.config.nc_cap) + 1)
        for p in partitions.noncrossing_partitions(n)
      ),
      lambda p: (
        len(p) + len(partitions.kreweras(p)) == p.n + 1
        and partitions.kreweras_inverse(partitions.kreweras(p)) == p
      ),
    )
    k_max = min(self.max_n, 5)
    yield verification.exhaustive(
      "kr'(pi) = kr'(pi v pi0)",
      _even_orders(k_max),
      lambda p: partitions.nested_kreweras(p)
      == partitions.nested_kreweras(p.join(partitions.Partition.pi0(p.n // 2))),
    )
    yield verification.expect(
      "kr'({1,3,4},{2},{5,6})",
      str(
        partitions.nested_kreweras(
          partitions.Partition.from_string('{1,3,4},{2},{5,6}')
        )
      ),
      '{1,2},{3,4},{5,6}',
    )
    yield verification.exhaustive(
      "K(F(pi)) = G(kr'(pi)) for pi >= pi0",
      (
        p
        for p in _even_orders(k_max)
        if partitions.Partition.pi0(p.n // 2).leq(p)
      ),
      lambda p: partitions.kreweras(partitions.parity_map(p, 'F'))
      == partitions.parity_map(partitions.nested_kreweras(p), 'G'),
    )
    surgery_n = min(SURGERY_MAX_N, self.config.nc_cap)
    try:
      convention = partitions.surgery_convention(surgery_n)
    except exceptions.FreepaError as e:
      yield Check(name='surgery identity', passed=False, detail=str(e))
    else:
      yield Check(
        name='surgery identity',
        passed=True,
        detail=(
          f'offset {convention.offset}: split at rank i merges C^B with '
          f'C^B_(i+{convention.offset}), {convention.cases} cases up to '
          f'n={convention.max_n}'
        ),
      )
