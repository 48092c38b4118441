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

from freepa import exceptions, tangle_parser, tangles


class TestNormalize:
  @pytest.mark.parametrize(
    ('text', 'expected'),
    [
      ('S  3', 'S 3'),
      ('Unit', 'Unit'),
      ('Unit 2', 'Unit 2'),
      ('M(1,2)', 'M(1, 2)'),
      ('E( 3 ,1 )', 'E(3, 1)'),
      ('compose(Mult 1,2,S 1)', 'compose(Mult 1, 2, S 1)'),
      ('free(Tpi[{1, 2}],Tpi[{1,2}])', 'free(Tpi[{1,2}], Tpi[{1,2}])'),
      ('inv(U 2)', 'inv(U 2)'),
      ('compose(\n  TrR 2,\n  1,\n  E(2, 1)\n)', 'compose(TrR 2, 1, E(2, 1))'),
    ],
  )
  def test_normalize_returns_canonical_spelling(self, text, expected):
    assert tangle_parser.normalize(text) == expected

  def test_normalized_text_parses_to_same_tree(self):
    text = 'compose(Mult 1,1,S 1)'
    normalized = tangle_parser.normalize(text)
    assert tangle_parser.parse(normalized) == tangle_parser.parse(text)


class TestBuild:
  def test_multiplication_with_s_tangle_builds_identity(self):
    expr = tangle_parser.parse('compose(Mult 1, 1, S 1)')
    assert expr.build() == tangles.identity(1)

  def test_tpi_builds_irreducible_tangle(self):
    expr = tangle_parser.parse('Tpi[{1,4},{2,3}]')
    assert expr.build().disk_degrees == (1, 1)

  @pytest.mark.parametrize(
    ('text', 'exponent'),
    [
      ('S 2', 0),
      ('TrR 2', -1),
      ('TrL 3', -2),
      ('E(3, 2)', -1),
      ('compose(TrR 2, 1, E(2, 1))', -2),
    ],
  )
  def test_delta_exponent(self, text, exponent):
    assert tangle_parser.parse(text).delta_exponent == exponent


class TestSyntaxErrors:
  @pytest.mark.parametrize(
    ('text', 'line', 'col', 'expected'),
    [
      ('S x', 1, 3, 'a positive integer'),
      ('S 0', 1, 3, 'a positive integer'),
      ('E(2, 2)', 1, 6, 'an index below 2'),
      ('Tpi[{1,3}]', 1, 1, 'a partition of 1..n'),
      ('S 1 S 1', 1, 5, 'end of input'),
      ('M(1 2)', 1, 5, "','"),
      ('free(S 1,\n  Q 1)', 2, 3, 'one of Tpi'),
      ('S 1 ?', 1, 5, 'a token'),
    ],
  )
  def test_syntax_error_reports_position(self, text, line, col, expected):
    with pytest.raises(exceptions.TangleSyntaxError) as error:
      tangle_parser.parse(text)
    assert (error.value.line, error.value.col) == (line, col)
    assert error.value.expected.startswith(expected)

  def test_unexpected_end_of_input(self):
    with pytest.raises(exceptions.TangleSyntaxError, match='end of input'):
      tangle_parser.parse('compose(Mult 1, 1')


class TestTypeErrors:
  @pytest.mark.parametrize(
    'text',
    ['compose(Mult 1, 3, S 1)', 'compose(Mult 1, 1, S 2)'],
  )
  def test_compose_with_bad_disk_raises_degree_mismatch(self, text):
    with pytest.raises(exceptions.DegreeMismatch):
      tangle_parser.parse(text)

  def test_free_with_crossing_criterion_raises_not_free(self):
    with pytest.raises(exceptions.NotFree):
      tangle_parser.parse('free(Tpi[{1,2},{3,4}], Tpi[{1,2,3,4}])')

  def test_tpi_with_odd_block_raises_not_even_on_build(self):
    expr = tangle_parser.parse('Tpi[{1,2,3}]')
    with pytest.raises(exceptions.NotEven):
      expr.build()
