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

"""Graph planar algebra of the inclusion C in A, A a multi-matrix algebra.

The principal graph of C in A = M_{m_1} + ... + M_{m_s} is a star: one even
vertex `a` joined to odd vertices b_1, ..., b_s by m_i edges each. Loops of
length 2n starting at `a` span the degree n space; a loop is stored as its
edge sequence ((i_1, k_1), (i_1, l_1), (i_2, k_2), ...), edge (i, k) being
the k-th edge between a and b_i.

Tangles act by state sums. A state labels strings with edges; the strings
around a shaded region must all use edges of the same odd vertex b. A state
is weighted by the product over shaded regions R of mu(b)^(1 - o(R)), o(R)
being the number of outer boundary arcs of R, times delta per closed loop.
0-tangles carry an extra factor delta^-1 and weight their unbounded region
by mu^-1 Z. With these weights degree 1 elements are matrix units and Tr_1
is the Markov trace.
"""

from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
import logging
import random
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from typing import Final

from freepa import exceptions, linalg, tangle_parser, tangles
from freepa.numeric import Scalar, Surd, SurdField

LOOP_DEGREE_CAP: Final[int] = 4
LOOP_DIMENSION_CAP: Final[int] = 9

Edge = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class AlgebraSpec:
  """Multi-matrix algebra A given by its block sizes.

  Attributes:
    name: Display name.
    blocks: Matrix sizes m_1, ..., m_s.
  """

  name: str
  blocks: tuple[int, ...]

  def __post_init__(self) -> None:
    object.__setattr__(self, 'blocks', tuple(self.blocks))
    if not self.blocks or any(m < 1 for m in self.blocks):
      raise ValueError(f'Algebra needs positive block sizes, got {self.blocks}')

  @classmethod
  def of(cls, *blocks: int, name: str | None = None) -> AlgebraSpec:
    return cls(name or 'A' + ''.join(map(str, blocks)), blocks)

  @property
  def dimension(self) -> int:
    """d = sum of m_i^2."""
    return sum(m * m for m in self.blocks)

  @functools.cached_property
  def delta(self) -> Surd:
    return Surd.sqrt(self.dimension)

  @functools.cached_property
  def field(self) -> SurdField:
    return SurdField([self.dimension])

  def delta_power(self, exponent: int) -> Surd:
    if exponent >= 0:
      return self.delta**exponent
    return Surd.sqrt(Fraction(1, self.dimension)) ** -exponent

  def size(self, block: int) -> int:
    return self.blocks[block - 1]

  def mu(self, block: int) -> Surd:
    """Spin vector at b_block; block 0 stands for the even vertex a."""
    if block == 0:
      return Surd.one()
    return Surd.sqrt(Fraction(self.size(block) ** 2, self.dimension))

  def mu_power(self, block: int, exponent: int) -> Surd:
    if exponent >= 0:
      return self.mu(block) ** exponent
    inverse = Surd.sqrt(Fraction(self.dimension, self.size(block) ** 2))
    return inverse**-exponent

  def partition_function(self, block: int) -> Fraction:
    """Z(a) = 1 and Z(b_i) = m_i^2 / d."""
    if block == 0:
      return Fraction(1)
    return Fraction(self.size(block) ** 2, self.dimension)

  def spin_vector_is_eigenvector(self) -> bool:
    """Checks adjacency * mu = sqrt(d) * mu on the star graph."""
    at_even = Surd.zero()
    for block, size in enumerate(self.blocks, start=1):
      at_even = at_even + self.mu(block) * size
      if self.mu(0) * size != self.delta * self.mu(block):
        return False
    return at_even == self.delta * self.mu(0)

  def __str__(self) -> str:
    return f'{self.name}{list(self.blocks)}'


@dataclasses.dataclass(frozen=True, order=True)
class Loop:
  """Closed walk of even length starting at the even vertex."""

  edges: tuple[Edge, ...]

  def __post_init__(self) -> None:
    object.__setattr__(self, 'edges', tuple(tuple(e) for e in self.edges))
    if len(self.edges) % 2:
      raise ValueError(f'Loop {self.edges} has odd length')
    for position in range(0, len(self.edges), 2):
      if self.edges[position][0] != self.edges[position + 1][0]:
        raise ValueError(
          f'Edges {position + 1} and {position + 2} of {self.edges} '
          'leave different odd vertices'
        )

  @property
  def degree(self) -> int:
    return len(self.edges) // 2

  def adjoint(self) -> Loop:
    return Loop(self.edges[::-1])

  def __add__(self, other: Loop) -> Loop:
    return Loop(self.edges + other.edges)

  def __str__(self) -> str:
    return '(' + ' '.join(f'b{i}.{k}' for i, k in self.edges) + ')'


EMPTY_LOOP: Final[Loop] = Loop(())


class LoopVector:
  """Finite linear combination of loops of a fixed degree.

  Attributes:
    degree: Half the length of the loops.
    terms: Nonzero coefficients by loop.
  """

  def __init__(
    self, degree: int, terms: Mapping[Loop, Scalar] | None = None
  ) -> None:
    self.degree = degree
    self.terms: dict[Loop, Surd] = {}
    for loop, coefficient in (terms or {}).items():
      if loop.degree != degree:
        raise exceptions.DegreeMismatch(
          f'Loop {loop} does not have degree {degree}'
        )
      if coefficient:
        self.terms[loop] = Surd.of(coefficient)

  @classmethod
  def basis(cls, loop: Loop) -> LoopVector:
    return cls(loop.degree, {loop: 1})

  @classmethod
  def scalar(cls, value: Scalar) -> LoopVector:
    return cls(0, {EMPTY_LOOP: value})

  @property
  def value(self) -> Surd:
    """Coefficient of the empty loop, the value of a degree 0 element."""
    return self.coefficient(EMPTY_LOOP)

  def coefficient(self, loop: Loop) -> Surd:
    return self.terms.get(loop, Surd.zero())

  def _require_degree(self, other: LoopVector) -> None:
    if self.degree != other.degree:
      raise exceptions.DegreeMismatch(
        f'Cannot combine degrees {self.degree} and {other.degree}'
      )

  def __add__(self, other: LoopVector) -> LoopVector:
    self._require_degree(other)
    terms = dict(self.terms)
    for loop, coefficient in other.terms.items():
      terms[loop] = terms.get(loop, Surd.zero()) + coefficient
    return LoopVector(self.degree, terms)

  def __neg__(self) -> LoopVector:
    return LoopVector(self.degree, {k: -v for k, v in self.terms.items()})

  def __sub__(self, other: LoopVector) -> LoopVector:
    return self + (-other)

  def __mul__(self, scalar: Scalar) -> LoopVector:
    return LoopVector(
      self.degree, {k: v * scalar for k, v in self.terms.items()}
    )

  __rmul__ = __mul__

  def __bool__(self) -> bool:
    return bool(self.terms)

  def __eq__(self, other: object) -> bool:
    if not isinstance(other, LoopVector):
      return NotImplemented
    return self.degree == other.degree and self.terms == other.terms

  def __len__(self) -> int:
    return len(self.terms)

  def __iter__(self) -> Iterator[tuple[Loop, Surd]]:
    return iter(sorted(self.terms.items()))

  def adjoint(self) -> LoopVector:
    return LoopVector(
      self.degree, {loop.adjoint(): v for loop, v in self.terms.items()}
    )

  def __repr__(self) -> str:
    body = ' + '.join(f'({v}){loop}' for loop, v in self) or '0'
    return f'LoopVector(degree={self.degree}: {body})'


def _edges(spec: AlgebraSpec) -> list[tuple[Edge, Edge]]:
  return [
    ((block, k), (block, l))
    for block, size in enumerate(spec.blocks, start=1)
    for k in range(1, size + 1)
    for l in range(1, size + 1)
  ]


def _require_caps(
  spec: AlgebraSpec, n: int, degree_cap: int, dimension_cap: int
) -> None:
  if n > degree_cap:
    raise exceptions.CapExceeded(f'Degree {n} exceeds cap {degree_cap}')
  if spec.dimension > dimension_cap:
    raise exceptions.CapExceeded(
      f'Dimension {spec.dimension} of {spec} exceeds cap {dimension_cap}'
    )


def loop_basis(
  spec: AlgebraSpec,
  n: int,
  degree_cap: int = LOOP_DEGREE_CAP,
  dimension_cap: int = LOOP_DIMENSION_CAP,
) -> list[Loop]:
  """All d^n loops of length 2n in lexicographic order.

  Raises:
    CapExceeded: When n or d is above its cap.
  """
  _require_caps(spec, n, degree_cap, dimension_cap)
  return [
    Loop(tuple(itertools.chain.from_iterable(steps)))
    for steps in itertools.product(_edges(spec), repeat=n)
  ]


def matrix_unit(
  spec: AlgebraSpec, block: int, row: int, col: int
) -> LoopVector:
  """Degree 1 element corresponding to e_{row, col} in block M_{m_block}."""
  if not 1 <= block <= len(spec.blocks) or not (
    1 <= row <= spec.size(block) and 1 <= col <= spec.size(block)
  ):
    raise ValueError(f'No matrix unit ({block}, {row}, {col}) in {spec}')
  return LoopVector.basis(Loop(((block, row), (block, col))))


def loop_to_matrix_unit(loop: Loop) -> tuple[int, int, int]:
  """(block, row, col) of a degree 1 loop."""
  if loop.degree != 1:
    raise exceptions.DegreeMismatch(f'{loop} is not a degree 1 loop')
  (block, row), (_, col) = loop.edges
  return block, row, col


def _state_sum_terms(
  spec: AlgebraSpec, tangle: tangles.Tangle, loops: Sequence[Loop]
) -> dict[Loop, Surd]:
  """State sum of a tangle with basis loops fed into its disks."""
  edge_at = {
    (disk, position): edge
    for disk, loop in enumerate(loops, start=1)
    for position, edge in enumerate(loop.edges, start=1)
  }
  face_block: dict[int, int] = {}
  fixed: dict[tangles.String, Edge] = {}
  free: list[tangles.String] = []
  for string in tangle.strings:
    edges = {edge_at[p] for p in string if p[0] != 0}
    if len(edges) > 1:
      return {}
    face = tangle.shaded_region_of(string[0])
    if not edges:
      free.append(string)
      continue
    (edge,) = edges
    if face_block.setdefault(face, edge[0]) != edge[0]:
      return {}
    fixed[string] = edge
  open_faces = sorted(
    {tangle.shaded_region_of(s[0]) for s in free} - set(face_block)
  )
  unbounded = tangle.unbounded_region
  result: dict[Loop, Surd] = collections.defaultdict(Surd.zero)
  blocks = range(1, len(spec.blocks) + 1)
  for choice in itertools.product(blocks, repeat=len(open_faces)):
    assigned = {**face_block, **dict(zip(open_faces, choice))}
    weight = spec.delta_power(tangle.loops)
    for index, region in enumerate(tangle.regions):
      if not region.shaded:
        continue
      block = assigned[index]
      if index == unbounded:
        weight = weight * spec.mu_power(block, -1)
        weight = weight * spec.partition_function(block)
      else:
        weight = weight * spec.mu_power(block, 1 - region.outer_arcs)
    sizes = [
      range(1, spec.size(assigned[tangle.shaded_region_of(s[0])]) + 1)
      for s in free
    ]
    for indices in itertools.product(*sizes):
      labels = dict(fixed)
      for string, k in zip(free, indices):
        labels[string] = (assigned[tangle.shaded_region_of(string[0])], k)
      outer = {}
      for string, edge in labels.items():
        for disk, position in string:
          if disk == 0:
            outer[position] = edge
      key = Loop(tuple(outer[j] for j in range(1, 2 * tangle.outer_degree + 1)))
      result[key] = result[key] + weight
  return result


def state_sum(
  spec: AlgebraSpec,
  tangle: tangles.Tangle,
  inputs: Sequence[LoopVector] = (),
) -> LoopVector:
  """Action Z_T of a tangle on loop vectors, without the expression factor.

  Raises:
    DegreeMismatch: When inputs do not match the inner disks.
    UnsupportedTangleShape: When the tangle is disconnected or a 0-tangle
      without a marked unbounded region.
  """
  if len(inputs) != tangle.n_disks:
    raise exceptions.DegreeMismatch(
      f'Tangle has {tangle.n_disks} inner disks, got {len(inputs)} inputs'
    )
  for disk, vector in enumerate(inputs, start=1):
    if vector.degree != tangle.degree(disk):
      raise exceptions.DegreeMismatch(
        f'Disk {disk} has degree {tangle.degree(disk)}, '
        f'input has degree {vector.degree}'
      )
  if not tangle.is_connected:
    raise exceptions.UnsupportedTangleShape(f'{tangle} is not connected')
  closed = tangle.outer_degree == 0
  if closed and tangle.regions and tangle.unbounded is None:
    raise exceptions.UnsupportedTangleShape(
      f'0-tangle {tangle} has no marked unbounded region'
    )
  total: dict[Loop, Surd] = collections.defaultdict(Surd.zero)
  terms_by_disk = [vector.terms.items() for vector in inputs]
  for combination in itertools.product(*terms_by_disk):
    coefficient = Surd.one()
    for _, value in combination:
      coefficient = coefficient * value
    terms = _state_sum_terms(spec, tangle, [loop for loop, _ in combination])
    for loop, weight in terms.items():
      total[loop] = total[loop] + coefficient * weight
  if closed:
    normalization = spec.delta_power(-1)
    total = {loop: value * normalization for loop, value in total.items()}
  result = LoopVector(tangle.outer_degree, total)
  logging.debug('State sum of %s: %d terms', tangle, len(result))
  return result


def evaluate(
  spec: AlgebraSpec,
  expr: tangle_parser.TangleExpr | str,
  inputs: Sequence[LoopVector] = (),
) -> LoopVector:
  """Evaluates a tangle expression, including its delta factors."""
  if isinstance(expr, str):
    expr = tangle_parser.parse(expr)
  return state_sum(spec, expr.build(), inputs) * spec.delta_power(
    expr.delta_exponent
  )


def unit_vector(spec: AlgebraSpec, k: int) -> LoopVector:
  return evaluate(spec, tangle_parser.Unit(k))


def multiply(spec: AlgebraSpec, x: LoopVector, y: LoopVector) -> LoopVector:
  """Product x y in P_k: x stacked on top of y."""
  x._require_degree(y)
  return evaluate(spec, tangle_parser.Mult(x.degree), [x, y])


def concatenate(spec: AlgebraSpec, x: LoopVector, y: LoopVector) -> LoopVector:
  """Graded multiplication U_{k,m}(x, y) of degree k + m."""
  return evaluate(spec, tangle_parser.M(x.degree, y.degree), [x, y])


def jones_projection(spec: AlgebraSpec, k: int, i: int) -> LoopVector:
  """e_i = delta^-1 times the cap-cup diagram at points i, i + 1."""
  return evaluate(spec, tangle_parser.E(k, i))


def trace(spec: AlgebraSpec, x: LoopVector, side: str = 'right') -> Surd:
  """Normalized trace Tr_k through the left or right closure tangle."""
  if side not in ('left', 'right'):
    raise ValueError(f'Unknown trace side {side!r}, expected left or right')
  if not x.degree:
    return x.value
  closure = tangle_parser.TrL if side == 'left' else tangle_parser.TrR
  return evaluate(spec, closure(x.degree), [x]).value


def loop_norm(spec: AlgebraSpec, loop: Loop) -> Fraction:
  """Tr(eta* eta) of a basis loop, the product of m_i over d^n."""
  result = Fraction(1)
  for block, _ in loop.edges[::2]:
    result *= Fraction(spec.size(block), spec.dimension)
  return result


def inner_product(
  spec: AlgebraSpec, x: LoopVector, y: LoopVector, via_tangles: bool = False
) -> Surd:
  """<x, y> = Tr(y* x).

  Loops are orthogonal, so the closed form sums coefficient products weighted
  by loop norms; `via_tangles` evaluates the multiplication and trace
  tangles instead.
  """
  x._require_degree(y)
  if via_tangles:
    return trace(spec, multiply(spec, y.adjoint(), x))
  result = Surd.zero()
  for loop, coefficient in x.terms.items():
    if loop in y.terms:
      result = result + coefficient * y.terms[loop] * loop_norm(spec, loop)
  return result


@dataclasses.dataclass(frozen=True)
class GramResult:
  matrix: list[list[Surd]]
  rank: int


def gram(
  spec: AlgebraSpec, vectors: Sequence[LoopVector], via_tangles: bool = False
) -> GramResult:
  """Gram matrix G_ij = Tr(v_j* v_i) and its exact rank.

  Raises:
    DegreeMismatch: When vectors have different degrees.
  """
  if len({vector.degree for vector in vectors}) > 1:
    raise exceptions.DegreeMismatch('Gram matrix needs vectors of one degree')
  matrix = [
    [inner_product(spec, v, w, via_tangles) for w in vectors] for v in vectors
  ]
  return GramResult(matrix, linalg.rank(matrix, spec.field))


def is_positive_semidefinite(
  spec: AlgebraSpec, vectors: Sequence[LoopVector], via_tangles: bool = False
) -> bool:
  matrix = gram(spec, vectors, via_tangles).matrix
  return linalg.is_positive_semidefinite(matrix, spec.field)


def random_vector(
  spec: AlgebraSpec,
  n: int,
  generator: random.Random,
  terms: int = 3,
  degree_cap: int = LOOP_DEGREE_CAP,
) -> LoopVector:
  """Sparse vector of degree n on distinct loops, coefficients in [-3, 3]."""
  basis = loop_basis(spec, n, degree_cap)
  loops = generator.sample(basis, k=min(terms, len(basis)))
  return LoopVector(
    n, {loop: generator.choice((-3, -2, -1, 1, 2, 3)) for loop in loops}
  )


def tl_image(
  spec: AlgebraSpec, n: int, degree_cap: int = LOOP_DEGREE_CAP
) -> list[LoopVector]:
  """Images of all Temperley-Lieb diagrams of degree n.

  Raises:
    CapExceeded: When n is above the degree cap.
  """
  if n > degree_cap:
    raise exceptions.CapExceeded(f'Degree {n} exceeds cap {degree_cap}')
  return [state_sum(spec, diagram) for diagram in tangles.tl_diagrams(n)]


def span_basis(
  vectors: Iterable[LoopVector], field: SurdField
) -> linalg.SparseBasis:
  basis = linalg.SparseBasis(field)
  for vector in vectors:
    basis.add(vector.terms)
  return basis


def boolean_subspace(
  spec: AlgebraSpec, realized: Mapping[int, Sequence[LoopVector]], n: int
) -> list[LoopVector]:
  """Orthogonal basis of the complement of all concatenations in degree n.

  Args:
    spec: Algebra whose graph planar algebra holds the vectors.
    realized: Spanning vectors of a planar subalgebra, by degree 1..n.
    n: Degree of the Boolean subspace.

  Raises:
    NotClosedUnderConcatenation: When a concatenation leaves the span of
      realized[n].
  """
  target = span_basis(realized[n], spec.field)
  concatenations = span_basis([], spec.field)
  independent = []
  for k in range(1, n):
    for x in realized[k]:
      for y in realized[n - k]:
        product = concatenate(spec, x, y)
        if not target.contains(product.terms):
          raise exceptions.NotClosedUnderConcatenation(
            f'U_{{{k},{n - k}}} of {x} and {y} leaves degree {n} span'
          )
        if concatenations.add(product.terms):
          independent.append(product)
  orthogonal = linalg.gram_schmidt(
    [*independent, *realized[n]],
    functools.partial(inner_product, spec),
    spec.field,
  )
  result = orthogonal[len(independent) :]
  logging.debug(
    'Boolean subspace of degree %d in %s: dimension %d', n, spec, len(result)
  )
  return result


def tensor_spec(first: AlgebraSpec, second: AlgebraSpec) -> AlgebraSpec:
  """A tensor B: blocks m_i n_j ordered first-major."""
  return AlgebraSpec(
    f'{first.name}x{second.name}',
    tuple(m * n for m in first.blocks for n in second.blocks),
  )


def tensor_edge(
  first: AlgebraSpec, second: AlgebraSpec, left: Edge, right: Edge
) -> Edge:
  (i, k), (j, l) = left, right
  return (
    (i - 1) * len(second.blocks) + j,
    (k - 1) * second.size(j) + l,
  )


def tensor_vector(
  first: AlgebraSpec, second: AlgebraSpec, x: LoopVector, y: LoopVector
) -> LoopVector:
  """x tensor y as an element of the graph planar algebra of A tensor B."""
  x._require_degree(y)
  terms: dict[Loop, Surd] = {}
  for left, a in x.terms.items():
    for right, b in y.terms.items():
      loop = Loop(
        tuple(
          tensor_edge(first, second, e, f)
          for e, f in zip(left.edges, right.edges)
        )
      )
      terms[loop] = a * b
  return LoopVector(x.degree, terms)
