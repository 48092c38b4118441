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

"""Checks of tangles built from partitions and of free pairs."""

from __future__ import annotations

import itertools
from collections.abc import Iterator

import sympy
from typing_extensions import override

from freepa import exceptions, partitions, tangles, verification
from freepa.verification import Check

FATTEN_MAX_N = 6


def _even_noncrossing(k_max: int) -> list[partitions.Partition]:
  return [
    p
    for k in range(1, k_max + 1)
    for p in partitions.noncrossing_partitions(2 * k)
    if p.is_even()
  ]


def interleaved_join(
  first: partitions.Partition, second: partitions.Partition
) -> partitions.Partition:
  """(pi, S) v (pi', S^c) with pi on 2i - delta(i), pi' on the rest."""
  return partitions.Partition(
    2 * first.n,
    tuple(tuple(2 * i - partitions.parity(i) for i in b) for b in first.blocks)
    + tuple(
      tuple(2 * i - 1 + partitions.parity(i) for i in b) for b in second.blocks
    ),
  )


def _free_composition_matches(pair: tuple[partitions.Partition, ...]) -> bool:
  first, second = pair
  free = second.leq(partitions.nested_kreweras(first))
  try:
    joined = tangles.free_compose(tangles.t_pi(first), tangles.t_pi(second))
  except exceptions.NotFree:
    return not free
  return free and tangles.pi_of(joined) == interleaved_join(first, second)


def _interleaving_recomposes(partition: partitions.Partition) -> bool:
  first, second = tangles.reduced_pair(partition)
  form = tangles.interleaving_form(first, second)
  return tangles.same_tangle(form.recompose(0), first) and tangles.same_tangle(
    form.recompose(1), second
  )


def _factorization_recomposes(partition: partitions.Partition) -> bool:
  joined = tangles.free_compose(*tangles.reduced_pair(partition))
  factorization = tangles.irreducible_factorization(joined)
  return tangles.same_tangle(factorization.recompose(), joined)


class TanglesSuite(verification.Suite):
  name = 'tangles'

  @override
  def checks(self) -> Iterator[Check]:
    k_max = min(self.max_n, 5)
    even = _even_noncrossing(k_max)
    yield verification.exhaustive(
      'pi_of(t_pi(pi)) = pi',
      even,
      lambda p: tangles.pi_of(tangles.t_pi(p)) == p,
    )
    yield verification.exhaustive(
      "shaded regions of T_pi give kr'(pi)",
      even,
      lambda p: tangles.shading_partition(tangles.t_pi(p))
      == partitions.nested_kreweras(p),
    )
    yield verification.exhaustive(
      'involution is involutive',
      even,
      lambda p: tangles.involution(tangles.involution(tangles.t_pi(p)))
      == tangles.t_pi(p),
    )
    pair_k = min(self.max_n, 4)
    pairs = (
      pair
      for k in range(1, pair_k + 1)
      for pair in itertools.product(
        [p for p in partitions.noncrossing_partitions(2 * k) if p.is_even()],
        repeat=2,
      )
    )
    yield verification.exhaustive(
      "free pairs are exactly pi' <= kr'(pi), with interleaved partition",
      pairs,
      _free_composition_matches,
      lambda pair: f'{pair[0]} and {pair[1]}',
    )
    yield verification.expect(
      'reduced pairs are counted by Catalan numbers',
      [len(tangles.reduced_partitions(k)) for k in range(1, k_max + 1)],
      [int(sympy.catalan(k)) for k in range(1, k_max + 1)],
    )
    reduced = [
      p
      for k in range(1, min(self.max_n, 3) + 1)
      for p in tangles.reduced_partitions(k)
    ]
    yield verification.exhaustive(
      'fatten(p) has one shaded region per block',
      (
        p
        for n in range(1, min(FATTEN_MAX_N, self.config.nc_cap) + 1)
        for p in partitions.noncrossing_partitions(n)
      ),
      lambda p: sum(r.shaded for r in tangles.fatten(p).regions) == len(p),
    )
    yield verification.exhaustive(
      'interleaving form recomposes to the reduced pair',
      reduced,
      _interleaving_recomposes,
    )
    yield verification.exhaustive(
      'irreducible factorization recomposes free compositions',
      reduced,
      _factorization_recomposes,
    )
