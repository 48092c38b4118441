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

from freepa import exceptions, partitions, tangles
from freepa.partitions import Partition


def p(text: str) -> Partition:
  return Partition.from_string(text)


@pytest.fixture
def even_noncrossing():
  return partitions.enumerate_partitions(6, 'even-noncrossing')


class TestTangle:
  def test_non_matching_strings_raise_not_planar(self):
    with pytest.raises(exceptions.NotPlanar, match='perfect matching'):
      tangles.Tangle(1, (), (((0, 1), (0, 1)),))

  def test_parity_violation_raises_not_planar(self):
    with pytest.raises(exceptions.NotPlanar, match='parity'):
      tangles.Tangle(2, (), (((0, 1), (0, 3)), ((0, 2), (0, 4))))

  def test_s_tangle_has_one_shaded_and_one_unshaded_region(self):
    regions = tangles.s_tangle(1).regions
    assert sorted(region.shaded for region in regions) == [False, True]

  def test_disk_away_from_outer_boundary_is_not_connected(self):
    tangle = tangles.Tangle(
      1, (1,), (((0, 1), (0, 2)), ((1, 1), (1, 2)))
    )
    assert not tangle.is_connected
    with pytest.raises(exceptions.NotConnected):
      tangles.pi_of(tangle)

  def test_tl_diagrams_are_counted_by_catalan_numbers(self):
    assert [len(tangles.tl_diagrams(k)) for k in (1, 2, 3)] == [1, 2, 5]


class TestTanglePartitions:
  @pytest.mark.parametrize(
    ('tangle', 'expected'),
    [
      (tangles.identity(2), Partition.full(4)),
      (tangles.s_tangle(2), Partition.pi1(2)),
      (tangles.u_tangle(2), Partition.pi0(2)),
      (tangles.unit(2), p('{1,4},{2,3}')),
    ],
  )
  def test_pi_of_generators(self, tangle, expected):
    assert tangles.pi_of(tangle) == expected

  def test_pi_of_t_pi_returns_partition(self, even_noncrossing):
    for partition in even_noncrossing:
      assert tangles.pi_of(tangles.t_pi(partition)) == partition

  def test_t_pi_has_one_disk_per_block(self):
    tangle = tangles.t_pi(p('{1,6},{2,3,4,5}'))
    assert tangle.disk_degrees == (1, 2)

  @pytest.mark.parametrize(
    ('text', 'expected'),
    [
      ('{1,2}', '{1,2}'),
      ('{1,2},{3,4}', '{1,2},{3,4}'),
      ('{1,2,3,4}', '{1,2},{3,4}'),
      ('{1,4},{2,3}', '{1,2,3,4}'),
    ],
  )
  def test_shading_partition(self, text, expected):
    assert tangles.shading_partition(tangles.t_pi(p(text))) == p(expected)

  def test_shading_partition_is_nested_kreweras(self, even_noncrossing):
    for partition in even_noncrossing:
      assert tangles.shading_partition(
        tangles.t_pi(partition)
      ) == partitions.nested_kreweras(partition)

  def test_t_pi_with_odd_block_raises_not_even(self):
    with pytest.raises(exceptions.NotEven):
      tangles.t_pi(p('{1,2,3},{4}'))

  def test_t_pi_with_crossing_raises_not_non_crossing(self):
    with pytest.raises(exceptions.NotNonCrossing):
      tangles.t_pi(p('{1,3},{2,4}'))


class TestComposition:
  def test_compose_into_identity(self):
    result = tangles.compose(tangles.identity(2), 1, tangles.s_tangle(2))
    assert result == tangles.s_tangle(2)

  def test_compose_multiplication_with_s_gives_identity(self):
    result = tangles.compose(tangles.mult(1), 1, tangles.s_tangle(1))
    assert result == tangles.identity(1)

  def test_closing_a_string_counts_a_loop(self):
    result = tangles.compose(tangles.trace_right(1), 1, tangles.unit(1))
    assert result.loops == 1
    assert not result.strings

  def test_compose_with_wrong_degree_raises_degree_mismatch(self):
    with pytest.raises(exceptions.DegreeMismatch, match='degree'):
      tangles.compose(tangles.identity(2), 1, tangles.s_tangle(1))

  def test_involution_is_involutive(self, even_noncrossing):
    for partition in even_noncrossing:
      tangle = tangles.t_pi(partition)
      assert tangles.involution(tangles.involution(tangle)) == tangle

  def test_same_tangle_ignores_disk_order(self):
    tangle = tangles.concatenation(1, 1)
    swapped = tangles.Tangle(
      2,
      (1, 1),
      tuple(
        ((0, a[1]), (3 - b[0], b[1])) for a, b in tangle.strings
      ),
    )
    assert tangles.same_tangle(tangle, swapped)


class TestFreeComposition:
  def test_free_compose_interleaves_partitions(self):
    first = tangles.t_pi(p('{1,2}'))
    joined = tangles.free_compose(first, first)
    assert tangles.pi_of(joined) == p('{1,4},{2,3}')
    assert joined.disk_degrees == (1, 1)

  def test_pair_outside_nested_kreweras_raises_not_free(self):
    with pytest.raises(exceptions.NotFree):
      tangles.free_compose(
        tangles.t_pi(p('{1,2},{3,4}')), tangles.t_pi(Partition.full(4))
      )

  def test_is_free_pair_with_unequal_degrees_raises_degree_mismatch(self):
    with pytest.raises(exceptions.DegreeMismatch):
      tangles.is_free_pair(tangles.s_tangle(1), tangles.s_tangle(2))

  def test_reduced_partitions_are_counted_by_catalan_numbers(self):
    assert [len(tangles.reduced_partitions(k)) for k in (1, 2, 3)] == [1, 2, 5]

  def test_reduced_pair(self):
    first, second = tangles.reduced_pair(Partition.full(4))
    assert tangles.pi_of(first) == Partition.full(4)
    assert tangles.pi_of(second) == p('{1,2},{3,4}')
    assert tangles.is_reduced_pair(first, second)

  def test_reduced_pair_below_pi0_raises_precedence_violation(self):
    with pytest.raises(exceptions.PrecedenceViolation):
      tangles.reduced_pair(Partition.pi1(2))

  def test_factorization_recomposes(self):
    joined = tangles.free_compose(*tangles.reduced_pair(Partition.full(2)))
    factorization = tangles.irreducible_factorization(joined)
    assert factorization.partition == p('{1,4},{2,3}')
    assert factorization.factors == (tangles.identity(1), tangles.identity(1))
    assert tangles.same_tangle(factorization.recompose(), joined)

  @pytest.mark.parametrize(
    ('partition', 'colors'),
    [(Partition.full(2), (1, 2)), (Partition.full(4), (1, 2, 2))],
  )
  def test_interleaving_form_recomposes_reduced_pair(self, partition, colors):
    first, second = tangles.reduced_pair(partition)
    form = tangles.interleaving_form(first, second)
    assert form.colors == colors
    assert tangles.same_tangle(form.recompose(0), first)
    assert tangles.same_tangle(form.recompose(1), second)
    pairs = zip(form.colors, form.assignments, form.tangle.disk_degrees)
    for color, assignment, m in pairs:
      if color == 2:
        assert assignment == (tangles.s_tangle(m), tangles.identity(m))

  def test_interleaving_form_of_non_reduced_pair_raises_not_reduced(self):
    first = tangles.t_pi(Partition.pi1(2))
    with pytest.raises(exceptions.NotReduced):
      tangles.interleaving_form(first, first)


class TestFatten:
  def test_fatten_discrete_partition_gives_s_tangle(self):
    assert tangles.fatten(Partition.discrete(2)) == tangles.s_tangle(2)

  def test_fatten_full_partition_gives_u_tangle(self):
    assert tangles.fatten(Partition.full(2)) == tangles.u_tangle(2)

  @pytest.mark.parametrize('n', [1, 2, 3, 4])
  def test_fatten_has_one_shaded_region_per_block(self, n):
    for partition in partitions.noncrossing_partitions(n):
      regions = tangles.fatten(partition).regions
      assert sum(region.shaded for region in regions) == len(partition)

  def test_fatten_crossing_partition_raises_not_noncrossing(self):
    with pytest.raises(exceptions.NotNonCrossing):
      tangles.fatten(p('{1,3},{2,4}'))

  def test_fatten_reverses_lower_row_of_rectangle(self):
    through_strings = tangles.fatten(p('{1,3},{2,4}'), upper=2)
    assert through_strings == tangles.fatten(p('{1,4},{2,3}'))

  def test_fatten_identity_pairing_of_one_upper_one_lower_point(self):
    assert tangles.fatten(p('{1,2}'), upper=1) == tangles.u_tangle(2)

  @pytest.mark.parametrize('upper', [0, 4])
  def test_fatten_without_lower_or_upper_row_keeps_order(self, upper):
    partition = p('{1,2},{3,4}')
    assert tangles.fatten(partition, upper=upper) == tangles.fatten(partition)

  def test_fatten_crossing_rectangle_raises_not_noncrossing(self):
    with pytest.raises(exceptions.NotNonCrossing):
      tangles.fatten(p('{1,4},{2,3}'), upper=2)

  @pytest.mark.parametrize('upper', [-1, 5])
  def test_fatten_upper_outside_order_raises_order_mismatch(self, upper):
    with pytest.raises(exceptions.OrderMismatch):
      tangles.fatten(Partition.full(4), upper=upper)
