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

from freepa import exceptions, freeprod, gpa, moments

FUSS_CATALAN = [1, 3, 12, 55]


@pytest.fixture
def tlj():
  return freeprod.DimensionProfile.named('tlj', 4)


class TestDimensionProfile:
  def test_boolean_cumulants_of_temperley_lieb(self, tlj):
    assert tlj.boolean == (1, 1, 2, 5)

  def test_delta_call_syntax_is_accepted(self):
    profile = freeprod.DimensionProfile.named('delta(2)', 3)
    assert profile.dims == (2, 4, 8)

  def test_negative_boolean_cumulant_is_rejected(self):
    with pytest.raises(exceptions.NegativeBooleanCumulant, match='b\\(2\\)'):
      freeprod.DimensionProfile.of('bad', [2, 3])

  def test_fractional_boolean_cumulant_is_rejected(self):
    with pytest.raises(exceptions.NegativeBooleanCumulant):
      freeprod.DimensionProfile.of('bad', [Fraction(1, 2)])


class TestSymbolicDims:
  def test_free_product_of_temperley_lieb_is_fuss_catalan(self, tlj):
    assert freeprod.free_product_dims(tlj, tlj, 4) == FUSS_CATALAN

  def test_tensor_product_multiplies_dims(self, tlj):
    assert freeprod.tensor_dims(tlj, tlj, 4) == [1, 4, 25, 196]

  def test_point_mass_dilates_free_product(self, tlj):
    delta = freeprod.DimensionProfile.named('delta_2', 3)
    assert freeprod.free_product_dims(delta, tlj, 3) == [2, 8, 40]

  def test_short_profile_raises_sequence_too_short(self, tlj):
    short = freeprod.DimensionProfile.of('short', [1, 2])
    with pytest.raises(exceptions.SequenceTooShort, match='short has 2 terms'):
      freeprod.free_product_dims(short, tlj, 3)


class TestBooleanDecomposition:
  def test_boolean_piece_dims(self, tlj):
    result = freeprod.boolean_decomposition_dims(tlj, tlj, 3)
    assert result.dims == (1, 2, 7)

  def test_interval_sums_recover_free_product_dims(self, tlj):
    result = freeprod.boolean_decomposition_dims(tlj, tlj, 4)
    assert list(result.interval_sums) == FUSS_CATALAN

  def test_per_partition_contributions_sum_to_top_piece(self, tlj):
    result = freeprod.boolean_decomposition_dims(tlj, tlj, 3)
    assert len(result.per_partition) == 5
    assert sum(result.per_partition.values()) == result.dims[-1]


class TestBasisLabels:
  @pytest.mark.parametrize('n', [1, 2, 3, 4])
  def test_label_count_is_free_product_dim(self, tlj, n):
    labels = list(freeprod.basis_labels(tlj, tlj, n))
    assert len(labels) == FUSS_CATALAN[n - 1]
    assert len(set(labels)) == len(labels)

  def test_label_serialization(self, tlj):
    label = next(freeprod.basis_labels(tlj, tlj, 1))
    assert label.to_dict() == {
      'I': [1],
      'parts': [{'p': '{1}', 'pIdx': [1], 'kIdx': [1]}],
    }

  def test_compositions_cover_intervals(self, tlj):
    compositions = {
      label.composition for label in freeprod.basis_labels(tlj, tlj, 3)
    }
    assert compositions == {(3,), (1, 2), (2, 1), (1, 1, 1)}


class TestConcreteSpanRank:
  @pytest.fixture
  def spec(self):
    return gpa.AlgebraSpec.of(1, 1, 1, 1)

  @pytest.mark.parametrize(('n', 'expected'), [(1, 1), (2, 3)])
  def test_tl_labels_span_free_product(self, spec, n, expected):
    result = freeprod.concrete_span_rank(spec, spec, n)
    assert result.rank == expected
    assert result.vectors >= result.rank

  def test_degree_above_cap_raises_cap_exceeded(self, spec):
    with pytest.raises(exceptions.CapExceeded, match='exceeds cap 3'):
      freeprod.concrete_span_rank(spec, spec, 4)

  def test_unknown_label_source_raises_value_error(self, spec):
    with pytest.raises(ValueError):
      freeprod.concrete_span_rank(spec, spec, 1, label_source='tensor')


class TestWreathProduct:
  def test_character_moments_are_free_multiplicative_convolution(self):
    alpha = moments.named_profile('bell', 3)
    beta = moments.named_profile('tlj', 3)
    result = freeprod.wreath_character_moments(alpha, beta, 3)
    assert result.moments == moments.free_mult_conv(alpha, beta, 3).moments
    assert result.name == 'catalan wr* bell'


class TestGeneratingImages:
  @pytest.mark.parametrize(('k', 'rank', 'vectors'), [(1, 1, 2), (2, 3, 4)])
  def test_generating_rank(self, k, rank, vectors):
    spec = gpa.AlgebraSpec.of(1, 1, 1, 1)
    result = freeprod.generating_rank(spec, spec, k)
    assert (result.rank, result.vectors) == (rank, vectors)
