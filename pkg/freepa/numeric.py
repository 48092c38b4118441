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

"""Exact scalars: rationals and the quadratic surd field.

A Surd is a finite sum q_1*sqrt(r_1) + ... + q_t*sqrt(r_t) with rational
coefficients and distinct squarefree radicands (radicand 1 holds the rational
part). Values are kept canonical, so two equal surds compare and hash equal.
Division is only available inside a SurdField, which fixes the finite set of
primes the radicands are built from.
"""

from __future__ import annotations

import functools
import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Union

import sympy

from freepa import exceptions, linalg

Scalar = Union[int, Fraction, 'Surd']

_NUMBER = r'\d+(?:/\d+)?'
_TERM_PATTERN = re.compile(
  rf'(?P<coeff>{_NUMBER})(?:\*sqrt\((?P<rad>\d+)\))?'
  r'|sqrt\((?P<bare>\d+)\)'
)
_CHUNK_PATTERN = re.compile(r'[+-]?[^+-]+')


@functools.lru_cache(maxsize=4096)
def squarefree_decomposition(value: int) -> tuple[int, int]:
  """Splits a positive integer into square and squarefree parts.

  Args:
    value: Positive integer n.

  Returns:
    Pair (s, r) with n = s**2 * r and r squarefree.
  """
  if value <= 0:
    raise ValueError(f'Expected positive integer, got {value}')
  square, free = 1, 1
  for prime, exponent in sympy.factorint(value).items():
    square *= prime ** (exponent // 2)
    if exponent % 2:
      free *= prime
  return square, free


@functools.lru_cache(maxsize=4096)
def prime_support(value: int) -> frozenset[int]:
  """Primes dividing a squarefree radicand."""
  return frozenset(sympy.factorint(value)) if value > 1 else frozenset()


def _as_fraction(value: int | Fraction) -> Fraction:
  return value if isinstance(value, Fraction) else Fraction(value)


class Surd:
  """Exact element of the field generated by square roots of integers.

  Attributes:
    terms: Sorted tuple of (squarefree radicand, nonzero coefficient).
  """

  __slots__ = ('terms', '_hash')

  def __init__(self, terms: Mapping[int, Fraction | int] | None = None) -> None:
    """Initializes Surd from a radicand to coefficient mapping.

    Radicands are reduced to their squarefree parts and zero coefficients
    are dropped.

    Args:
      terms: Mapping between positive radicands and rational coefficients.
    """
    collected: dict[int, Fraction] = {}
    for radicand, coefficient in (terms or {}).items():
      square, free = squarefree_decomposition(radicand)
      value = square * _as_fraction(coefficient)
      collected[free] = collected.get(free, Fraction(0)) + value
    self.terms: tuple[tuple[int, Fraction], ...] = tuple(
      (radicand, coefficient)
      for radicand, coefficient in sorted(collected.items())
      if coefficient
    )
    self._hash = hash(self.terms)

  @classmethod
  def of(cls, value: Scalar) -> Surd:
    """Coerces an int, Fraction or Surd to Surd."""
    if isinstance(value, Surd):
      return value
    return cls({1: _as_fraction(value)})

  @classmethod
  def sqrt(cls, value: int | Fraction) -> Surd:
    """Exact square root of a nonnegative rational.

    sqrt(p/q) is stored as sqrt(p*q)/q.
    """
    value = _as_fraction(value)
    if value < 0:
      raise ValueError(f'Cannot take square root of negative value {value}')
    if not value:
      return cls()
    return cls(
      {value.numerator * value.denominator: Fraction(1, value.denominator)}
    )

  sqrt_of_rational = sqrt

  @classmethod
  def zero(cls) -> Surd:
    return cls()

  @classmethod
  def one(cls) -> Surd:
    return cls({1: 1})

  @classmethod
  def from_string(cls, text: str) -> Surd:
    """Parses `q0 + q1*sqrt(r1) + ...`.

    Args:
      text: Surd in textual form, for example `1/2 - 3*sqrt(2)`.

    Returns:
      Parsed surd in canonical form.

    Raises:
      SurdSyntaxError: When text is not a valid surd.
    """
    compact = re.sub(r'\s+', '', text)
    if not compact:
      raise exceptions.SurdSyntaxError('Empty surd expression')
    chunks = _CHUNK_PATTERN.findall(compact)
    if ''.join(chunks) != compact:
      raise exceptions.SurdSyntaxError(f'Cannot parse surd: {text!r}')
    terms: dict[int, Fraction] = {}
    for chunk in chunks:
      sign = -1 if chunk.startswith('-') else 1
      body = chunk.lstrip('+-')
      match = _TERM_PATTERN.fullmatch(body)
      if not match:
        raise exceptions.SurdSyntaxError(
          f'Cannot parse term {chunk!r} of surd {text!r}'
        )
      try:
        coefficient = Fraction(match.group('coeff') or 1)
      except ZeroDivisionError as e:
        raise exceptions.SurdSyntaxError(
          f'Zero denominator in surd {text!r}'
        ) from e
      radicand = int(match.group('rad') or match.group('bare') or 1)
      if radicand == 0:
        continue
      square, free = squarefree_decomposition(radicand)
      terms[free] = terms.get(free, Fraction(0)) + sign * square * coefficient
    return cls(terms)

  @property
  def is_rational(self) -> bool:
    return all(radicand == 1 for radicand, _ in self.terms)

  @property
  def rational_part(self) -> Fraction:
    for radicand, coefficient in self.terms:
      if radicand == 1:
        return coefficient
    return Fraction(0)

  @property
  def radicands(self) -> tuple[int, ...]:
    return tuple(radicand for radicand, _ in self.terms)

  @property
  def primes(self) -> frozenset[int]:
    """Primes occurring in any radicand."""
    return frozenset().union(*(prime_support(r) for r in self.radicands))

  def coefficient(self, radicand: int) -> Fraction:
    return dict(self.terms).get(radicand, Fraction(0))

  def sign(self) -> int:
    """Exact sign (-1, 0 or 1) of the real number the surd denotes."""
    if self.is_rational:
      rational = self.rational_part
      return (rational > 0) - (rational < 0)
    prime = max(self.primes)
    rest: dict[int, Fraction] = {}
    partner: dict[int, Fraction] = {}
    for radicand, coefficient in self.terms:
      if radicand % prime:
        rest[radicand] = coefficient
      else:
        partner[radicand // prime] = coefficient
    u, v = Surd(rest), Surd(partner)
    sign_u, sign_v = u.sign(), v.sign()
    if sign_v == 0:
      return sign_u
    if sign_u in (0, sign_v):
      return sign_v
    return sign_u * (u * u - prime * v * v).sign()

  def __bool__(self) -> bool:
    return bool(self.terms)

  def __neg__(self) -> Surd:
    return Surd({radicand: -value for radicand, value in self.terms})

  def __add__(self, other: Scalar) -> Surd:
    if not isinstance(other, (Surd, int, Fraction)):
      return NotImplemented
    merged = dict(self.terms)
    for radicand, coefficient in Surd.of(other).terms:
      merged[radicand] = merged.get(radicand, Fraction(0)) + coefficient
    return Surd(merged)

  __radd__ = __add__

  def __sub__(self, other: Scalar) -> Surd:
    if not isinstance(other, (Surd, int, Fraction)):
      return NotImplemented
    return self + (-Surd.of(other))

  def __rsub__(self, other: Scalar) -> Surd:
    return Surd.of(other) - self

  def __mul__(self, other: Scalar) -> Surd:
    if isinstance(other, (int, Fraction)):
      return Surd(
        {radicand: coefficient * other for radicand, coefficient in self.terms}
      )
    if not isinstance(other, Surd):
      return NotImplemented
    product: dict[int, Fraction] = {}
    for left, left_coefficient in self.terms:
      for right, right_coefficient in other.terms:
        common = sympy.igcd(left, right)
        free = (left // common) * (right // common)
        product[free] = (
          product.get(free, Fraction(0))
          + common * left_coefficient * right_coefficient
        )
    return Surd(product)

  __rmul__ = __mul__

  def __truediv__(self, other: int | Fraction) -> Surd:
    """Divides by a nonzero rational; surd divisors need a SurdField."""
    if isinstance(other, Surd) and other.is_rational:
      other = other.rational_part
    if not isinstance(other, (int, Fraction)):
      return NotImplemented
    if not other:
      raise ZeroDivisionError('Division of surd by zero')
    return self * (1 / _as_fraction(other))

  def __pow__(self, exponent: int) -> Surd:
    if exponent < 0:
      raise ValueError('Negative powers require SurdField.inverse')
    result = Surd.one()
    for _ in range(exponent):
      result = result * self
    return result

  def __eq__(self, other: object) -> bool:
    if isinstance(other, (int, Fraction)):
      other = Surd.of(other)
    if not isinstance(other, Surd):
      return NotImplemented
    return self.terms == other.terms

  def __hash__(self) -> int:
    if self.is_rational:
      return hash(self.rational_part)
    return self._hash

  def __lt__(self, other: Scalar) -> bool:
    return (self - other).sign() < 0

  def __str__(self) -> str:
    if not self.terms:
      return '0'
    rendered = []
    for radicand, coefficient in self.terms:
      if radicand == 1:
        rendered.append(str(coefficient))
      elif coefficient == 1:
        rendered.append(f'sqrt({radicand})')
      elif coefficient == -1:
        rendered.append(f'-sqrt({radicand})')
      else:
        rendered.append(f'{coefficient}*sqrt({radicand})')
    text = rendered[0]
    for term in rendered[1:]:
      text += f' - {term[1:]}' if term.startswith('-') else f' + {term}'
    return text

  def __repr__(self) -> str:
    return f"Surd('{self}')"


class SurdField:
  """Multiquadratic field Q(sqrt(p_1), ..., sqrt(p_t)).

  Attributes:
    primes: Sorted primes generating the field.
    basis: The 2**t squarefree products of primes, sorted.
  """

  def __init__(self, radicands: Iterable[int] = ()) -> None:
    """Initializes SurdField.

    Args:
      radicands: Positive integers whose square roots lie in the field.
    """
    primes: set[int] = set()
    for radicand in radicands:
      primes |= prime_support(squarefree_decomposition(radicand)[1])
    self.primes: tuple[int, ...] = tuple(sorted(primes))
    basis = [1]
    for prime in self.primes:
      basis += [element * prime for element in basis]
    self.basis: tuple[int, ...] = tuple(sorted(basis))

  @classmethod
  def covering(cls, values: Iterable[Surd]) -> SurdField:
    """Smallest field declared by the radicands of the given surds."""
    radicands: set[int] = set()
    for value in values:
      radicands.update(value.radicands)
    return cls(radicands)

  @property
  def dimension(self) -> int:
    return len(self.basis)

  def contains(self, value: Surd) -> bool:
    return value.primes <= set(self.primes)

  def coordinates(self, value: Surd) -> list[Fraction]:
    if not self.contains(value):
      raise exceptions.RadicandOutsideField(
        f'{value} uses radicands outside field with primes {self.primes}'
      )
    return [value.coefficient(element) for element in self.basis]

  def inverse(self, value: Scalar) -> Surd:
    """Exact multiplicative inverse.

    Solves M x = e_1 where M is the matrix of multiplication by value in the
    field basis.

    Raises:
      ZeroDivisionError: When value is zero.
      RadicandOutsideField: When value is not in the field.
    """
    value = Surd.of(value)
    if not value:
      raise ZeroDivisionError('Inverse of zero surd')
    if value.is_rational:
      return Surd.of(1 / value.rational_part)
    columns = [
      self.coordinates(value * Surd({element: 1})) for element in self.basis
    ]
    matrix = [
      [columns[j][i] for j in range(self.dimension)]
      for i in range(self.dimension)
    ]
    target = [Fraction(int(element == 1)) for element in self.basis]
    solution = linalg.solve(matrix, target)
    return Surd(dict(zip(self.basis, solution)))

  def divide(self, numerator: Scalar, denominator: Scalar) -> Surd:
    return Surd.of(numerator) * self.inverse(denominator)

  def __repr__(self) -> str:
    return f'SurdField(primes={self.primes})'


def parse_scalar(text: str) -> Surd:
  """Parses rational `p/q` or surd text."""
  return Surd.from_string(text)
