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

"""Moment sequences and their free and Boolean cumulants.

Measures are represented by finite moment prefixes m(1), ..., m(N) with the
implicit m(0) = 1. All transforms are exact over Fractions.
"""

from __future__ import annotations

import collections
import dataclasses
import enum
import functools
import logging
import random
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Final

import sympy
from sympy.combinatorics import Permutation, PermutationGroup

from freepa import exceptions, linalg, partitions

GROUP_ORDER_CAP: Final[int] = 3628800


class CumulantKind(str, enum.Enum):
  FREE = 'free'
  BOOLEAN = 'boolean'


def _fractions(values: Iterable[int | Fraction | str]) -> tuple[Fraction, ...]:
  return tuple(Fraction(value) for value in values)


@dataclasses.dataclass(frozen=True)
class MomentProfile:
  """Exact moment prefix of a measure or dimension sequence.

  Attributes:
    name: Label of the profile.
    moments: m(1), ..., m(N).
  """

  name: str
  moments: tuple[Fraction, ...]

  def __post_init__(self) -> None:
    object.__setattr__(self, 'moments', _fractions(self.moments))
    if not self.moments:
      raise exceptions.SequenceTooShort(f'Profile {self.name} has no moments')

  def __len__(self) -> int:
    return len(self.moments)

  def moment(self, n: int) -> Fraction:
    if n == 0:
      return Fraction(1)
    return self.moments[n - 1]

  def prefix(self, n: int) -> MomentProfile:
    _require_length(self.moments, n, self.name)
    return MomentProfile(self.name, self.moments[:n])

  def free_cumulants(self) -> CumulantProfile:
    return cumulants_from_moments(self, CumulantKind.FREE)

  def boolean_cumulants(self) -> CumulantProfile:
    return cumulants_from_moments(self, CumulantKind.BOOLEAN)


@dataclasses.dataclass(frozen=True)
class CumulantProfile:
  """Free or Boolean cumulants c(1), ..., c(N)."""

  kind: CumulantKind
  values: tuple[Fraction, ...]

  def __post_init__(self) -> None:
    object.__setattr__(self, 'kind', CumulantKind(self.kind))
    object.__setattr__(self, 'values', _fractions(self.values))


def _require_length(values: Sequence, n: int, name: str = 'sequence') -> None:
  if len(values) < n:
    raise exceptions.SequenceTooShort(
      f'{name} has {len(values)} terms, {n} required'
    )


@functools.lru_cache(maxsize=32)
def kreweras_pairs(
  n: int,
) -> tuple[tuple[partitions.Partition, partitions.Partition], ...]:
  """(p, K(p)) for every p in NC(n)."""
  return tuple(
    (p, partitions.kreweras(p)) for p in partitions.noncrossing_partitions(n)
  )


def multiplicative_extension(
  sequence: Sequence[Fraction | int], partition: partitions.Partition
) -> Fraction:
  """Product over blocks B of sequence(|B|).

  Raises:
    SequenceTooShort: When a block is longer than the sequence.
  """
  result = Fraction(1)
  for block in partition.blocks:
    _require_length(sequence, len(block))
    result *= sequence[len(block) - 1]
    if not result:
      return result
  return result


def cumulants_from_moments(
  profile: MomentProfile, kind: CumulantKind | str = CumulantKind.FREE
) -> CumulantProfile:
  """Solves the moment-cumulant recursion.

  Free: m(n) = sum over NC(n) of c(p).
  Boolean: m(n) = sum over interval partitions of b(p), equivalently
  m(n) = sum_k b(k) m(n - k).
  """
  kind = CumulantKind(kind)
  values: list[Fraction] = []
  for n in range(1, len(profile) + 1):
    if kind == CumulantKind.BOOLEAN:
      lower = sum(
        (values[k - 1] * profile.moment(n - k) for k in range(1, n)),
        Fraction(0),
      )
    else:
      lower = sum(
        (
          multiplicative_extension(values, p)
          for p in partitions.noncrossing_partitions(n)
          if len(p) > 1
        ),
        Fraction(0),
      )
    values.append(profile.moment(n) - lower)
  return CumulantProfile(kind, tuple(values))


def moments_from_cumulants(
  cumulants: CumulantProfile, name: str = 'moments'
) -> MomentProfile:
  """Inverse of cumulants_from_moments."""
  moments: list[Fraction] = []
  for n in range(1, len(cumulants.values) + 1):
    if cumulants.kind == CumulantKind.BOOLEAN:
      value = sum(
        (
          cumulants.values[k - 1] * (moments[n - k - 1] if n > k else 1)
          for k in range(1, n + 1)
        ),
        Fraction(0),
      )
    else:
      value = sum(
        (
          multiplicative_extension(cumulants.values, p)
          for p in partitions.noncrossing_partitions(n)
        ),
        Fraction(0),
      )
    moments.append(value)
  return MomentProfile(name, tuple(moments))


def free_mult_conv(
  first: MomentProfile, second: MomentProfile, n: int
) -> MomentProfile:
  """Moments of the free multiplicative convolution up to order n.

  c(n) = sum over p in NC(n) of c_first(p) * c_second(K(p)).

  Raises:
    SequenceTooShort: When a profile is shorter than n.
  """
  _require_length(first.moments, n, first.name)
  _require_length(second.moments, n, second.name)
  first_cumulants = first.prefix(n).free_cumulants().values
  second_cumulants = second.prefix(n).free_cumulants().values
  values = []
  for order in range(1, n + 1):
    values.append(
      sum(
        (
          multiplicative_extension(first_cumulants, p)
          * multiplicative_extension(second_cumulants, k)
          for p, k in kreweras_pairs(order)
        ),
        Fraction(0),
      )
    )
  logging.debug(
    'Free cumulants of %s * %s: %s', first.name, second.name, values
  )
  return moments_from_cumulants(
    CumulantProfile(CumulantKind.FREE, tuple(values)),
    name=f'{first.name}*{second.name}',
  )


@dataclasses.dataclass(frozen=True)
class BooleanConvolutionCheck:
  """Both sides of the Boolean cumulant identity for a free product.

  Attributes:
    lhs: Boolean cumulants of the free multiplicative convolution.
    rhs: Sums over NC(n) of b_first(p) * b_second(K(p)).
    equal: Whether both sides agree.
  """

  lhs: tuple[Fraction, ...]
  rhs: tuple[Fraction, ...]

  @property
  def equal(self) -> bool:
    return self.lhs == self.rhs


def boolean_kreweras_sum(
  first: Sequence[Fraction], second: Sequence[Fraction], n: int
) -> Fraction:
  """Sum over p in NC(n) of first(p) * second(K(p))."""
  return sum(
    (
      multiplicative_extension(first, p) * multiplicative_extension(second, k)
      for p, k in kreweras_pairs(n)
    ),
    Fraction(0),
  )


def boolean_conv_check(
  first: MomentProfile, second: MomentProfile, n: int
) -> BooleanConvolutionCheck:
  """Compares Boolean cumulants of first * second with the Kreweras sum."""
  lhs = free_mult_conv(first, second, n).boolean_cumulants().values
  first_boolean = first.prefix(n).boolean_cumulants().values
  second_boolean = second.prefix(n).boolean_cumulants().values
  rhs = tuple(
    boolean_kreweras_sum(first_boolean, second_boolean, order)
    for order in range(1, n + 1)
  )
  return BooleanConvolutionCheck(lhs=lhs, rhs=rhs)


def hankel_is_psd(profile: MomentProfile) -> bool:
  """Whether the Hankel matrix (m(i + j)) with m(0) = 1 is PSD."""
  size = len(profile) // 2 + 1
  hankel = [
    [profile.moment(i + j) for j in range(size)] for i in range(size)
  ]
  return linalg.is_positive_semidefinite(hankel)


def perm_group_character_moments(
  generators: Sequence[Sequence[int]],
  k: int,
  degree: int | None = None,
  cap: int = GROUP_ORDER_CAP,
) -> MomentProfile:
  """Moments of the fixed point count over a permutation group.

  Args:
    generators: Permutations of 1..n in one-line notation.
    k: Number of moments.
    degree: Number of points n; inferred from generators when omitted.
    cap: Largest allowed group order.

  Returns:
    m(j) = average over the generated group of (#fixed points)**j.

  Raises:
    GroupTooLarge: When the group order exceeds the cap.
  """
  if degree is None:
    if not generators:
      raise ValueError('Degree is required for an empty generator list')
    degree = len(generators[0])
  permutations = [
    Permutation([image - 1 for image in generator], size=degree)
    for generator in generators
  ] or [Permutation(degree - 1)]
  group = PermutationGroup(permutations)
  order = group.order()
  if order > cap:
    raise exceptions.GroupTooLarge(
      f'Group of order {order} exceeds cap {cap}'
    )
  fixed_counts = collections.Counter(
    sum(1 for point, image in enumerate(element) if point == image)
    for element in group.generate(af=True)
  )
  logging.debug('Fixed point distribution: %s', dict(fixed_counts))
  return MomentProfile(
    f'fix(order={order})',
    tuple(
      Fraction(
        sum(count * fixed**power for fixed, count in fixed_counts.items()),
        order,
      )
      for power in range(1, k + 1)
    ),
  )


def catalan(n: int) -> MomentProfile:
  return MomentProfile(
    'catalan', tuple(int(sympy.catalan(i)) for i in range(1, n + 1))
  )


def fuss_catalan(n: int) -> MomentProfile:
  """C(3i, i) / (2i + 1) for i = 1..n."""
  return MomentProfile(
    'fuss_catalan',
    tuple(
      Fraction(int(sympy.binomial(3 * i, i)), 2 * i + 1)
      for i in range(1, n + 1)
    ),
  )


def point_mass(atom: int | Fraction, n: int) -> MomentProfile:
  atom = Fraction(atom)
  return MomentProfile(
    f'delta_{atom}', tuple(atom**i for i in range(1, n + 1))
  )


def bell(n: int) -> MomentProfile:
  return MomentProfile(
    'bell', tuple(int(sympy.bell(i)) for i in range(1, n + 1))
  )


def boolean_shifted(profile: MomentProfile) -> MomentProfile:
  """Profile whose Boolean cumulants are 1, m(1), ..., m(N - 1)."""
  shifted = (Fraction(1),) + profile.moments[:-1]
  return moments_from_cumulants(
    CumulantProfile(CumulantKind.BOOLEAN, shifted),
    name=f'boolean_shifted({profile.name})',
  )


def random_positive_profile(
  seed: int, n: int, atoms: int = 3, max_atom: int = 5
) -> MomentProfile:
  """Integer moments of a random free compound Poisson distribution.

  The free cumulants are k(i) = sum of c * x**i over random positive integer
  rates c and atoms x. Moments are integer and the Hankel matrices PSD.
  """
  generator = random.Random(seed)
  support = generator.sample(range(1, max_atom + 1), k=min(atoms, max_atom))
  rates = [generator.randint(1, 3) for _ in support]
  cumulants = CumulantProfile(
    CumulantKind.FREE,
    tuple(
      sum(c * x**i for c, x in zip(rates, support))
      for i in range(1, n + 1)
    ),
  )
  return moments_from_cumulants(cumulants, name=f'random(seed={seed})')


NAMED_PROFILES: Final = {
  'catalan': catalan,
  'tlj': catalan,
  'fuss_catalan': fuss_catalan,
  'bell': bell,
}


def named_profile(name: str, n: int) -> MomentProfile:
  """Builds a named profile; `delta_<a>` gives the point mass at a."""
  if name.startswith('delta_'):
    return point_mass(Fraction(name.removeprefix('delta_')), n)
  if builder := NAMED_PROFILES.get(name):
    return builder(n)
  raise exceptions.FreepaError(
    f'Unknown profile {name!r}, available: '
    f'{", ".join(sorted(NAMED_PROFILES))}, delta_<a>'
  )
