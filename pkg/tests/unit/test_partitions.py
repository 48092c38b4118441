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

from __future__ import annotations

import pytest

from freepa import exceptions, partitions
from freepa.partitions import Partition


def p(text: str) -> Partition:
  return Partition.from_string(text)


class TestPartition:
  def test_from_string_canonicalizes_blocks(self):
    partition = p('{3, 1},{2}')
    assert partition.blocks == ((1, 3), (2,))
    assert str(partition) == '{1,3},{2}'

  @pytest.mark.parametrize('text', ['{1,2', '1,2', '{1},{1,2}', '{1,3}'])
  def test_from_string_raises_partition_syntax_error(self, text):
    with pytest.raises(exceptions.PartitionSyntaxError):
      Partition.from_string(text)

  def test_invalid_blocks_raise_value_error(self):
    with pytest.raises(ValueError, match='do not partition'):
      Partition(3, ((1, 2),))

  def test_from_labels(self):
    assert Partition.from_labels(['a', 'b', 'a']) == p('{1,3},{2}')

  def test_pi0_is_read_cyclically(self):
    assert Partition.pi0(3) == p('{1,6},{2,3},{4,5}')

  def test_pi1(self):
    assert Partition.pi1(2) == p('{1,2},{3,4}')

  @pytest.mark.parametrize(
    ('text', 'expected'),
    [('{1,3},{2,4}', False), ('{1,4},{2,3}', True), ('{1,2},{3,4}', True)],
  )
  def test_is_noncrossing(self, text, expected):
    assert p(text).is_noncrossing() is expected

  def test_require_noncrossing_raises_not_non_crossing(self):
    with pytest.raises(exceptions.NotNonCrossing):
      p('{1,3},{2,4}').require_noncrossing()

  def test_leq(self):
    assert p('{1},{2},{3,4}').leq(p('{1,2},{3,4}'))
    assert not p('{1,2},{3,4}').leq(p('{1},{2},{3,4}'))

  def test_meet_and_join(self):
    first, second = p('{1,2},{3},{4}'), p('{1},{2,3},{4}')
    assert first.meet(second) == Partition.discrete(4)
    assert first.join(second) == p('{1,2,3},{4}')

  def test_leq_with_different_orders_raises_order_mismatch(self):
    with pytest.raises(exceptions.OrderMismatch):
      Partition.full(2).leq(Partition.full(3))


class TestEnumeration:
  @pytest.mark.parametrize(('n', 'expected'), [(1, 1), (2, 2), (3, 5), (4, 14)])
  def test_noncrossing_partitions_are_counted_by_catalan_numbers(
    self, n, expected
  ):
    assert len(partitions.noncrossing_partitions(n)) == expected

  def test_noncrossing_partitions_are_distinct_and_noncrossing(self):
    result = partitions.noncrossing_partitions(5)
    assert len(set(result)) == 42
    assert all(partition.is_noncrossing() for partition in result)

  def test_interval_partitions(self):
    assert len(partitions.interval_partitions(4)) == 8
    assert all(q.is_interval() for q in partitions.interval_partitions(4))

  def test_all_partitions_are_counted_by_bell_numbers(self):
    assert len(partitions.enumerate_partitions(4, 'all')) == 15

  def test_even_noncrossing(self):
    assert len(partitions.enumerate_partitions(6, 'even-noncrossing')) == 12

  def test_enumerate_above_cap_raises_cap_exceeded(self):
    with pytest.raises(exceptions.CapExceeded, match='exceeds cap'):
      partitions.enumerate_partitions(6, 'all', cap=5)


class TestKreweras:
  def test_kreweras_complement(self):
    assert partitions.kreweras(p('{1,2},{3}')) == p('{1},{2,3}')

  def test_kreweras_of_extremes(self):
    assert partitions.kreweras(Partition.discrete(4)) == Partition.full(4)
    assert partitions.kreweras(Partition.full(4)) == Partition.discrete(4)

  @pytest.mark.parametrize('n', range(1, 10))
  def test_block_count_law_and_inverse(self, n):
    for partition in partitions.noncrossing_partitions(n):
      complement = partitions.kreweras(partition)
      assert len(partition) + len(complement) == n + 1
      assert partitions.kreweras_inverse(complement) == partition

  def test_kreweras_of_crossing_partition_raises_not_non_crossing(self):
    with pytest.raises(exceptions.NotNonCrossing):
      partitions.kreweras(p('{1,3},{2,4}'))

  def test_partial_kreweras(self):
    partial = partitions.PartialPartition.from_string('{1,4}|S={1,4}')
    assert str(partitions.partial_kreweras(partial)) == '{2,3}|S={2,3}|n=4'

  def test_join_partial(self):
    first = partitions.PartialPartition.from_string('{1,4}|S={1,4}')
    second = partitions.PartialPartition.from_string('{2},{3}|S={2,3}|n=4')
    assert partitions.join_partial(first, second) == p('{1,4},{2},{3}')

  @pytest.mark.parametrize(
    ('text', 'expected'),
    [
      ('{1,2}', '{1,2}'),
      ('{1,2},{3,4}', '{1,2},{3,4}'),
      ('{1,2,3,4}', '{1,2},{3,4}'),
      ('{1,4},{2,3}', '{1,2,3,4}'),
      ('{1,3,4},{2},{5,6}', '{1,2},{3,4},{5,6}'),
    ],
  )
  def test_nested_kreweras(self, text, expected):
    assert partitions.nested_kreweras(p(text)) == p(expected)

  def test_nested_kreweras_is_invariant_under_join_with_pi0(self):
    pairs = Partition.pi0(3)
    for partition in partitions.noncrossing_partitions(6):
      joined = partition.join(pairs)
      if joined.is_noncrossing():
        assert partitions.nested_kreweras(
          partition
        ) == partitions.nested_kreweras(joined)

  def test_nested_kreweras_of_odd_order_raises_odd_order(self):
    with pytest.raises(exceptions.OddOrder):
      partitions.nested_kreweras(Partition.full(3))

  def test_parity_maps(self):
    assert partitions.parity_map(Partition.pi0(3), 'F') == Partition.discrete(3)
    assert partitions.parity_map(Partition.pi1(3), 'G') == Partition.discrete(3)
    assert partitions.parity_map(Partition.discrete(3), 'F_inv') == (
      Partition.pi0(3)
    )

  def test_parity_map_raises_precedence_violation(self):
    with pytest.raises(exceptions.PrecedenceViolation):
      partitions.parity_map(Partition.pi1(2), 'F')

  def test_kreweras_of_f_equals_g_of_nested_kreweras(self):
    for partition in dominating_pi0(3):
      assert partitions.kreweras(
        partitions.parity_map(partition, 'F')
      ) == partitions.parity_map(partitions.nested_kreweras(partition), 'G')


def dominating_pi0(k: int) -> list[Partition]:
  pairs = Partition.pi0(k)
  return [q for q in partitions.noncrossing_partitions(2 * k) if pairs.leq(q)]


class TestDepthAndSurgery:
  def test_depth(self):
    assert partitions.depth(p('{1,4},{2,3},{5}')) == {
      (1, 4): 1,
      (2, 3): 2,
      (5,): 1,
    }

  def test_merge_blocks(self):
    assert partitions.merge_blocks(p('{1},{2},{3}'), [1], [3]) == p('{1,3},{2}')

  def test_merge_creating_crossing_raises_not_adjacent(self):
    with pytest.raises(exceptions.NotAdjacent):
      partitions.merge_blocks(p('{1,3},{2},{4}'), [2], [4])

  def test_split_block(self):
    assert partitions.split_block(Partition.full(3), [1, 2, 3], 1) == p(
      '{1},{2,3}'
    )

  @pytest.mark.parametrize('index', [0, 3])
  def test_split_with_bad_index_raises_invalid_split_index(self, index):
    with pytest.raises(exceptions.InvalidSplitIndex):
      partitions.split_block(Partition.full(3), [1, 2, 3], index)

  def test_block_surgery_rejects_unknown_action(self):
    with pytest.raises(ValueError, match='Unknown surgery action'):
      partitions.block_surgery(Partition.full(2), 'glue', [1, 2], 1)

  def test_adjacent_blocks(self):
    assert partitions.adjacent_blocks(p('{1,3},{2},{4}'), [2]) == [(1, 3)]

  def test_enveloping_blocks(self):
    envelope = partitions.enveloping_blocks(Partition.full(3), [1, 2, 3])
    assert envelope.upper == (3,)
    assert envelope.lower == ((1,), (2,))

  def test_dual_point_partition(self):
    assert partitions.dual_point_partition(p('{1,2},{3}')) == p(
      '{1,3},{2},{4,6},{5}'
    )

  def test_surgery_convention_uses_offset_zero(self):
    convention = partitions.surgery_convention(max_n=7)
    assert convention.offset == 0
    assert convention.max_n == 7
    assert convention.cases == 1728
