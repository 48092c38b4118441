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

import json
from fractions import Fraction

import pytest

from freepa import exceptions, gpa
from freepa.adapters import codecs


class TestLoadSpec:
  def test_inline_block_sizes(self):
    assert codecs.load_spec('1,2') == gpa.AlgebraSpec.of(1, 2)

  def test_spec_file(self, tmp_path):
    path = tmp_path / 'c2.json'
    path.write_text(json.dumps({'name': 'C2', 'blocks': [1, 1]}))
    spec = codecs.load_spec(str(path))
    assert spec == gpa.AlgebraSpec('C2', (1, 1))

  def test_spec_file_without_blocks_raises_freepa_error(self, tmp_path):
    path = tmp_path / 'empty.json'
    path.write_text(json.dumps({'name': 'empty', 'blocks': []}))
    with pytest.raises(
      exceptions.FreepaError, match='Invalid AlgebraSpecModel'
    ):
      codecs.load_spec(str(path))

  def test_unreadable_source_raises_freepa_error(self):
    with pytest.raises(exceptions.FreepaError, match='neither a spec file'):
      codecs.load_spec('missing.json')

  def test_spec_model_round_trip(self):
    spec = gpa.AlgebraSpec.of(2, 3)
    assert codecs.AlgebraSpecModel.from_spec(spec).to_spec() == spec


class TestLoadProfile:
  def test_missing_file_falls_back_to_named_profile(self):
    profile = codecs.load_profile('catalan.json', 4)
    assert profile.moments == (1, 2, 5, 14)

  def test_profile_file_accepts_numbers_and_strings(self, tmp_path):
    path = tmp_path / 'custom.json'
    path.write_text(json.dumps({'name': 'custom', 'moments': [1, '3/2']}))
    profile = codecs.load_profile(str(path), 2)
    assert profile.name == 'custom'
    assert profile.moments == (1, Fraction(3, 2))

  def test_non_rational_moment_raises_freepa_error(self, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'name': 'bad', 'moments': ['x']}))
    with pytest.raises(exceptions.FreepaError, match='not a rational'):
      codecs.load_profile(str(path), 1)

  def test_broken_json_raises_freepa_error(self, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"name": ')
    with pytest.raises(exceptions.FreepaError, match='Cannot read JSON'):
      codecs.load_profile(str(path), 1)

  def test_unknown_profile_name_raises_freepa_error(self):
    with pytest.raises(exceptions.FreepaError, match='Unknown profile'):
      codecs.load_profile('nosuch', 2)


class TestLoopVectors:
  @pytest.fixture
  def spec(self):
    return gpa.AlgebraSpec.of(1, 2)

  def test_vector_file_with_surd_coefficients(self, tmp_path):
    path = tmp_path / 'x.json'
    path.write_text(
      json.dumps(
        {
          'degree': 1,
          'terms': [
            {'loop': [[2, 1], [2, 2]], 'coeff': '1/2*sqrt(2)'},
            {'loop': [[1, 1], [1, 1]], 'coeff': '3'},
          ],
        }
      )
    )
    (vector,) = codecs.load_vectors(str(path))
    assert vector.degree == 1
    assert vector.coefficient(gpa.Loop(((1, 1), (1, 1)))) == 3
    assert len(vector) == 2

  def test_vector_list(self, tmp_path, spec):
    path = tmp_path / 'xs.json'
    vectors = [
      gpa.matrix_unit(spec, 1, 1, 1),
      gpa.matrix_unit(spec, 2, 2, 1) * Fraction(2, 5),
    ]
    path.write_text(
      json.dumps(
        [codecs.LoopVectorModel.from_vector(v).model_dump() for v in vectors]
      )
    )
    assert codecs.load_vectors(str(path)) == vectors

  def test_numbers_are_formatted_as_strings(self):
    assert codecs.format_numbers([1, Fraction(2, 5)]) == ['1', '2/5']
