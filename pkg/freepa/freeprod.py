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

"""Free and tensor products of planar algebras.

Symbolic level: dimension profiles, where the free product has dimensions
given by the free multiplicative convolution and decomposes along interval
partitions into Boolean pieces L(n) of dimension
sum over p in NC(n) of b_P(p) * b_Q(K(p)).

Concrete level: spans of Z_T (x) Z_T' over reduced free pairs inside the
graph planar algebra of A (x) B, for small degrees.
"""

from __future__ import annotations

import dataclasses
import enum
import itertools
import logging
from collections.abc import Iterator, Sequence
from fractions import Fraction
from typing import Final

from freepa import exceptions, gpa, linalg, moments, partitions, tangles

CONCRETE_RANK_CAP: Final[int] = 3


class LabelSource(str, enum.Enum):
  TL = 'tl'
  FULL = 'full'


@dataclasses.dataclass(frozen=True)
class DimensionProfile:
  """Dimension sequence dim P_1, dim P_2, ... of a planar algebra.

  Attributes:
    profile: Moments m(n) = dim P_n.

  Raises:
    NegativeBooleanCumulant: When a Boolean cumulant is not a nonnegative
      integer, so no planar algebra has these dimensions.
  """

  profile: moments.MomentProfile

  def __post_init__(self) -> None:
    for n, value in enumerate(self.profile.boolean_cumulants().values, start=1):
      if value < 0 or value.denominator != 1:
        raise exceptions.NegativeBooleanCumulant(
          f'Boolean cumulant b({n}) = {value} of {self.profile.name} '
          'is not a nonnegative integer'
        )

  @classmethod
  def of(cls, name: str, values: Sequence[int | Fraction]) -> DimensionProfile:
    return cls(moments.MomentProfile(name, tuple(values)))

  @classmethod
  def named(cls, name: str, n: int) -> DimensionProfile:
    """Presets tlj, delta_<d>, bell and fuss_catalan."""
    if name.startswith('delta(') and name.endswith(')'):
      name = f'delta_{name[6:-1]}'
    return cls(moments.named_profile(name, n))

  @property
  def name(self) -> str:
    return self.profile.name

  def __len__(self) -> int:
    return len(self.profile)

  @property
  def dims(self) -> tuple[Fraction, ...]:
    return self.profile.moments

  @property
  def boolean(self) -> tuple[int, ...]:
    return tuple(int(v) for v in self.profile.boolean_cumulants().values)

  @property
  def free(self) -> tuple[Fraction, ...]:
    return self.profile.free_cumulants().values


def _require(first: DimensionProfile, second: DimensionProfile, n: int) -> None:
  for profile in (first, second):
    if len(profile) < n:
      raise exceptions.SequenceTooShort(
        f'{profile.name} has {len(profile)} terms, {n} required'
      )


def tensor_dims(
  first: DimensionProfile, second: DimensionProfile, n: int
) -> list[Fraction]:
  _require(first, second, n)
  return [first.dims[i] * second.dims[i] for i in range(n)]


def free_product_dims(
  first: DimensionProfile, second: DimensionProfile, n: int
) -> list[Fraction]:
  """dim (P * Q)_n, the moments of mu_P boxtimes mu_Q."""
  _require(first, second, n)
  return list(moments.free_mult_conv(first.profile, second.profile, n).moments)


@dataclasses.dataclass(frozen=True)
class BooleanDecomposition:
  """Dimensions of the Boolean pieces of P * Q.

  Attributes:
    dims: dim L(1), ..., dim L(N).
    per_partition: Contribution b_P(p) b_Q(K(p)) of each p in NC(N).
    interval_sums: sum over interval partitions I of prod dim L(i_j), for
      orders 1..N.
  """

  dims: tuple[Fraction, ...]
  per_partition: dict[partitions.Partition, Fraction]
  interval_sums: tuple[Fraction, ...]


def boolean_decomposition_dims(
  first: DimensionProfile, second: DimensionProfile, n: int
) -> BooleanDecomposition:
  _require(first, second, n)
  left = first.profile.prefix(n).boolean_cumulants().values
  right = second.profile.prefix(n).boolean_cumulants().values
  dims = tuple(
    moments.boolean_kreweras_sum(left, right, order)
    for order in range(1, n + 1)
  )
  per_partition = {
    p: moments.multiplicative_extension(left, p)
    * moments.multiplicative_extension(right, k)
    for p, k in moments.kreweras_pairs(n)
  }
  interval_sums = tuple(
    sum(
      (
        moments.multiplicative_extension(dims, interval)
        for interval in partitions.interval_partitions(order)
      ),
      Fraction(0),
    )
    for order in range(1, n + 1)
  )
  return BooleanDecomposition(dims, per_partition, interval_sums)


@dataclasses.dataclass(frozen=True)
class PartLabel:
  """Label of one interval part: p in NC(k) with block indices.

  Attributes:
    partition: p.
    p_indices: Index in 1..b_P(|B|) per block B of p.
    k_indices: Index in 1..b_Q(|C|) per block C of K(p).
  """

  partition: partitions.Partition
  p_indices: tuple[int, ...]
  k_indices: tuple[int, ...]

  def to_dict(self) -> dict[str, object]:
    return {
      'p': str(self.partition),
      'pIdx': list(self.p_indices),
      'kIdx': list(self.k_indices),
    }


@dataclasses.dataclass(frozen=True)
class BasisLabel:
  """Basis element of (P * Q)_n indexed along an interval composition."""

  composition: tuple[int, ...]
  parts: tuple[PartLabel, ...]

  def to_dict(self) -> dict[str, object]:
    return {
      'I': list(self.composition),
      'parts': [part.to_dict() for part in self.parts],
    }


def _part_labels(
  first: Sequence[int], second: Sequence[int], k: int
) -> list[PartLabel]:
  labels = []
  for p, kreweras in moments.kreweras_pairs(k):
    p_ranges = [range(1, first[len(b) - 1] + 1) for b in p.blocks]
    k_ranges = [range(1, second[len(c) - 1] + 1) for c in kreweras.blocks]
    for p_indices in itertools.product(*p_ranges):
      for k_indices in itertools.product(*k_ranges):
        labels.append(PartLabel(p, p_indices, k_indices))
  return labels


def basis_labels(
  first: DimensionProfile, second: DimensionProfile, n: int
) -> Iterator[BasisLabel]:
  """Labels of a basis of (P * Q)_n in deterministic order."""
  _require(first, second, n)
  left, right = first.boolean, second.boolean
  cache: dict[int, list[PartLabel]] = {}
  for interval in partitions.interval_partitions(n):
    composition = tuple(len(block) for block in interval.blocks)
    for size in composition:
      if size not in cache:
        cache[size] = _part_labels(left, right, size)
    for parts in itertools.product(*(cache[size] for size in composition)):
      yield BasisLabel(composition, parts)


def _labelled_images(
  spec: gpa.AlgebraSpec,
  tangle: tangles.Tangle,
  label_source: LabelSource,
) -> list[gpa.LoopVector]:
  """Z_T on all labels of its disks drawn from TL or from the full space."""
  if label_source == LabelSource.TL:
    images = []
    for diagrams in itertools.product(
      *(tangles.tl_diagrams(k) for k in tangle.disk_degrees)
    ):
      composed = tangle
      for disk in range(len(diagrams), 0, -1):
        composed = tangles.compose(composed, disk, diagrams[disk - 1])
      images.append(gpa.state_sum(spec, composed))
    return images
  bases = [
    [gpa.LoopVector.basis(loop) for loop in gpa.loop_basis(spec, k)]
    for k in tangle.disk_degrees
  ]
  return [
    gpa.state_sum(spec, tangle, inputs) for inputs in itertools.product(*bases)
  ]


@dataclasses.dataclass(frozen=True)
class SpanRank:
  """Rank of a spanning family inside P(A (x) B).

  Attributes:
    rank: Exact rank of the family.
    vectors: Number of vectors in the family.
  """

  rank: int
  vectors: int


def concrete_span_rank(
  first: gpa.AlgebraSpec,
  second: gpa.AlgebraSpec,
  n: int,
  label_source: LabelSource | str = LabelSource.TL,
  cap: int = CONCRETE_RANK_CAP,
) -> SpanRank:
  """Rank of the images of Z_T (x) Z_T' over reduced free pairs of degree n.

  Raises:
    CapExceeded: When n is above the cap.
  """
  if n > cap:
    raise exceptions.CapExceeded(f'Concrete rank degree {n} exceeds cap {cap}')
  label_source = LabelSource(label_source)
  product = gpa.tensor_spec(first, second)
  basis = linalg.SparseBasis(product.field)
  count = 0
  for partition in tangles.reduced_partitions(n):
    left, right = tangles.reduced_pair(partition)
    left_images = _labelled_images(first, left, label_source)
    right_images = _labelled_images(second, right, label_source)
    for x in left_images:
      for y in right_images:
        basis.add(gpa.tensor_vector(first, second, x, y).terms)
        count += 1
  logging.debug(
    'Concrete span of degree %d in %s: %d vectors, rank %d',
    n,
    product,
    count,
    basis.rank,
  )
  return SpanRank(basis.rank, count)


def generating_images(
  first: gpa.AlgebraSpec, second: gpa.AlgebraSpec, k: int
) -> list[gpa.LoopVector]:
  """U_P(k) (x) Q_k together with P_k (x) S_Q(k), Q and P the TL images."""
  u_image = gpa.state_sum(first, tangles.u_tangle(k))
  s_image = gpa.state_sum(second, tangles.s_tangle(k))
  return [
    gpa.tensor_vector(first, second, u_image, y)
    for y in gpa.tl_image(second, k)
  ] + [
    gpa.tensor_vector(first, second, x, s_image)
    for x in gpa.tl_image(first, k)
  ]


def generating_rank(
  first: gpa.AlgebraSpec, second: gpa.AlgebraSpec, k: int
) -> SpanRank:
  """Rank of `generating_images` inside P(A (x) B)_k."""
  images = generating_images(first, second, k)
  product = gpa.tensor_spec(first, second)
  basis = gpa.span_basis(images, product.field)
  return SpanRank(basis.rank, len(images))


def wreath_character_moments(
  alpha: moments.MomentProfile, beta: moments.MomentProfile, n: int
) -> moments.MomentProfile:
  """chi_alpha boxtimes chi_beta, the free wreath product character moments."""
  result = moments.free_mult_conv(alpha, beta, n)
  return moments.MomentProfile(f'{beta.name} wr* {alpha.name}', result.moments)
