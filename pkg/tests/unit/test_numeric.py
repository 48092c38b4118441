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

from freepa import exceptions
from freepa.numeric import Surd, SurdField, parse_scalar


class TestSurd:
  def test_sqrt_of_square_is_rational(self):
    assert Surd.sqrt(4) == 2
    assert Surd.sqrt(4).is_rational

  def test_sqrt_of_rational_is_rationalized(self):
    assert str(Surd.sqrt(Fraction(1, 2))) == '1/2*sqrt(2)'

  def test_square_of_sqrt_returns_radicand(self):
    assert Surd.sqrt(2) * Surd.sqrt(2) == 2
    assert Surd.sqrt(6) * Surd.sqrt(3) == Surd({2: 3})

  def test_radicands_are_reduced_to_squarefree_parts(self):
    assert Surd({8: 1}) == Surd({2: 2})

  def test_addition_collects_equal_radicands(self):
    value = Surd.sqrt(2) + Surd.sqrt(2) + 1
    assert value == Surd({1: 1, 2: 2})
    assert str(value) == '1 + 2*sqrt(2)'

  def test_zero_coefficients_are_dropped(self):
    assert not (Surd.sqrt(3) - Surd.sqrt(3))
    assert Surd.sqrt(3) - Surd.sqrt(3) == Surd.zero()

  @pytest.mark.parametrize(
    ('value', 'expected'),
    [
      (Surd.sqrt(2) - 1, 1),
      (Surd.sqrt(2) - 2, -1),
      (Surd.sqrt(2) + Surd.sqrt(3) - Surd.sqrt(10), -1),
      (Surd.sqrt(2) * 3 - Surd.sqrt(17), 1),
      (Surd.zero(), 0),
    ],
  )
  def test_sign_is_exact(self, value, expected):
    assert value.sign() == expected

  def test_division_by_rational(self):
    assert Surd.sqrt(2) / 2 == Surd({2: Fraction(1, 2)})

  def test_division_by_zero_raises_zero_division_error(self):
    with pytest.raises(ZeroDivisionError):
      Surd.sqrt(2) / 0

  def test_equal_rational_surds_hash_like_fractions(self):
    assert hash(Surd.of(Fraction(1, 3))) == hash(Fraction(1, 3))

  @pytest.mark.parametrize(
    ('text', 'expected'),
    [
      ('3/4', Surd.of(Fraction(3, 4))),
      ('sqrt(2)', Surd.sqrt(2)),
      ('1/2 - 3*sqrt(2)', Surd({1: Fraction(1, 2), 2: -3})),
      ('2*sqrt(8)', Surd({2: 4})),
    ],
  )
  def test_from_string(self, text, expected):
    assert Surd.from_string(text) == expected

  def test_str_parses_back(self):
    value = Surd({1: Fraction(-2, 3), 3: Fraction(5, 7), 5: -1})
    assert parse_scalar(str(value)) == value

  @pytest.mark.parametrize('text', ['', 'sqrt(', '1/0', 'x + 1'])
  def test_from_string_raises_surd_syntax_error(self, text):
    with pytest.raises(exceptions.SurdSyntaxError):
      Surd.from_string(text)


class TestSurdField:
  def test_basis_spans_products_of_primes(self):
    field = SurdField([2, 3])
    assert field.basis == (1, 2, 3, 6)

  def test_inverse_of_surd(self):
    field = SurdField([2])
    value = Surd.sqrt(2) + 1
    assert value * field.inverse(value) == 1

  def test_inverse_in_multiquadratic_field(self):
    field = SurdField([2, 3])
    value = Surd.sqrt(2) + Surd.sqrt(3)
    assert value * field.inverse(value) == 1

  def test_divide(self):
    field = SurdField([5])
    assert field.divide(1, Surd.sqrt(5)) == Surd({5: Fraction(1, 5)})

  def test_inverse_of_zero_raises_zero_division_error(self):
    with pytest.raises(ZeroDivisionError):
      SurdField([2]).inverse(Surd.zero())

  def test_coordinates_outside_field_raise_radicand_outside_field(self):
    with pytest.raises(
      exceptions.RadicandOutsideField, match='outside field'
    ):
      SurdField([2]).coordinates(Surd.sqrt(3))

  def test_covering_field_contains_values(self):
    values = [Surd.sqrt(2), Surd.sqrt(15)]
    field = SurdField.covering(values)
    assert all(field.contains(value) for value in values)
