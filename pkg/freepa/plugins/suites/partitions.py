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

"""Checks of partition enumeration and lattice structure."""

from __future__ import annotations

import itertools
from collections.abc import Iterator

import sympy
from typing_extensions import override

from freepa import partitions, verification
from freepa.verification import Check


class PartitionsSuite(verification.Suite):
  name = 'partitions'

  @override
  def checks(self) -> Iterator[Check]:
    orders = range(1, self.max_n + 1)
    yield verification.expect(
      'NC(n) is counted by Catalan numbers',
      [len(partitions.noncrossing_partitions(n)) for n in orders],
      [int(sympy.catalan(n)) for n in orders],
    )
    yield verification.expect(
      'interval partitions number 2^(n-1)',
      [len(partitions.interval_partitions(n)) for n in orders],
      [2 ** (n - 1) for n in orders],
    )
    small = min(self.max_n, 4)
    pairs = (
      (p, q)
      for n in range(1, small + 1)
      for p, q in itertools.product(
        partitions.noncrossing_partitions(n), repeat=2
      )
    )
    yield verification.exhaustive(
      'meet and join bound both arguments',
      pairs,
      lambda pq: (
        pq[0].meet(pq[1]).leq(pq[0])
        and pq[0].leq(pq[0].join(pq[1]))
        and pq[1].leq(pq[0].join(pq[1]))
      ),
      lambda pq: f'{pq[0]} and {pq[1]}',
    )
    everything = (
      p
      for n in range(1, self.max_n + 1)
      for p in partitions.noncrossing_partitions(n)
    )
    yield verification.exhaustive(
      'depth is positive and outermost blocks have depth 1',
      everything,
      lambda p: min(partitions.depth(p).values()) == 1,
    )
    yield verification.exhaustive(
      'F(F_inv(p)) = p and G(G_inv(p)) = p',
      (
        p
        for n in range(1, self.max_n + 1)
        for p in partitions.noncrossing_partitions(n)
      ),
      lambda p: (
        partitions.parity_map(partitions.parity_map(p, 'F_inv'), 'F') == p
        and partitions.parity_map(partitions.parity_map(p, 'G_inv'), 'G') == p
      ),
    )
