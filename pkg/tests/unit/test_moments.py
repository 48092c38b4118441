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

from fractions import Fraction

import pytest

from freepa import exceptions, moments
from freepa.partitions import Partition


class TestCumulants:
  def test_free_cumulants_of_catalan_profile_are_one(self):
    assert moments.catalan(5).free_cumulants().values == (1, 1, 1, 1, 1)

  def test_boolean_cumulants_of_catalan_profile(self):
    assert moments.catalan(4).boolean_cumulants().values == (1, 1, 2, 5)

  def test_boolean_cumulants_of_bell_profile(self):
    assert moments.bell(4).boolean_cumulants().values == (1, 1, 2, 6)

  def test_free_cumulants_of_point_mass_vanish_above_one(self):
    values = moments.point_mass(3, 4).free_cumulants().values
    assert values == (3, 0, 0, 0)

  @pytest.mark.parametrize('kind', ['free', 'boolean'])
  def test_moments_from_cumulants_inverts_cumulants(self, kind):
    profile = moments.random_positive_profile(seed=7, n=6)
    cumulants = moments.cumulants_from_moments(profile, kind)
    assert moments.moments_from_cumulants(cumulants).moments == profile.moments

  def test_multiplicative_extension(self):
    partition = Partition.from_string('{1,2},{3}')
    assert moments.multiplicative_extension([2, 5], partition) == 10

  def test_multiplicative_extension_raises_sequence_too_short(self):
    with pytest.raises(exceptions.SequenceTooShort):
      moments.multiplicative_extension([1], Partition.full(2))


class TestFreeMultiplicativeConvolution:
  def test_catalan_squared_gives_fuss_catalan(self):
    result = moments.free_mult_conv(moments.catalan(5), moments.catalan(5), 5)
    assert result.moments == (1, 3, 12, 55, 273)
    assert result.moments == moments.fuss_catalan(5).moments

  def test_point_mass_scales(self):
    profile = moments.catalan(4)
    result = moments.free_mult_conv(moments.point_mass(2, 4), profile, 4)
    assert result.moments == tuple(
      2**n * m for n, m in enumerate(profile.moments, start=1)
    )

  def test_short_profile_raises_sequence_too_short(self):
    with pytest.raises(exceptions.SequenceTooShort, match='3 required'):
      moments.free_mult_conv(moments.catalan(2), moments.catalan(3), 3)

  @pytest.mark.parametrize('seed', [1, 2, 3])
  def test_belinschi_nica_identity_on_random_profiles(self, seed):
    first = moments.random_positive_profile(seed, 6)
    second = moments.random_positive_profile(seed + 100, 6)
    assert moments.boolean_conv_check(first, second, 6).equal

  def test_boolean_kreweras_sum(self):
    assert moments.boolean_kreweras_sum([2, 3], [5, 7], 2) == 103

  def test_hankel_of_catalan_is_positive_semidefinite(self):
    assert moments.hankel_is_psd(moments.catalan(6))

  def test_hankel_of_impossible_profile_is_not_positive_semidefinite(self):
    assert not moments.hankel_is_psd(moments.MomentProfile('bad', (1, 0)))


class TestGroupMoments:
  def test_symmetric_group_gives_bell_numbers(self):
    profile = moments.perm_group_character_moments([(2, 1, 3), (2, 3, 1)], 3)
    assert profile.moments == (1, 2, 5)

  def test_fourth_moment_of_s3_drops_below_bell(self):
    profile = moments.perm_group_character_moments([(2, 1, 3), (2, 3, 1)], 4)
    assert profile.moment(4) == 14

  def test_trivial_group(self):
    profile = moments.perm_group_character_moments([], 2, degree=3)
    assert profile.moments == (3, 9)

  def test_large_group_raises_group_too_large(self):
    with pytest.raises(exceptions.GroupTooLarge):
      moments.perm_group_character_moments(
        [(2, 1, 3, 4), (2, 3, 4, 1)], 1, cap=10
      )


class TestNamedProfiles:
  def test_named_point_mass(self):
    assert moments.named_profile('delta_2', 3).moments == (2, 4, 8)

  def test_fuss_catalan(self):
    assert moments.fuss_catalan(3).moments == (1, 3, 12)

  def test_random_profile_is_reproducible(self):
    assert moments.random_positive_profile(5, 4) == (
      moments.random_positive_profile(5, 4)
    )

  @pytest.mark.parametrize('seed', [0, 11, 42])
  def test_random_profile_is_a_positive_integer_moment_sequence(self, seed):
    profile = moments.random_positive_profile(seed, 8)
    assert all(m.denominator == 1 and m > 0 for m in profile.moments)
    assert moments.hankel_is_psd(profile)

  def test_random_profile_has_positive_integer_free_cumulants(self):
    values = moments.random_positive_profile(3, 5).free_cumulants().values
    assert all(v.denominator == 1 and v > 0 for v in values)

  def test_unknown_profile_raises_freepa_error(self):
    with pytest.raises(exceptions.FreepaError, match='Unknown profile'):
      moments.named_profile('nope', 3)

  def test_profile_without_moments_raises_sequence_too_short(self):
    with pytest.raises(exceptions.SequenceTooShort):
      moments.MomentProfile('empty', ())

  def test_boolean_shifted(self):
    shifted = moments.boolean_shifted(moments.catalan(3))
    assert shifted.boolean_cumulants().values == (
      Fraction(1),
      Fraction(1),
      Fraction(2),
    )
