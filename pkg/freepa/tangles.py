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

"""Combinatorial planar tangles.

A tangle of degree k has an outer disk D0 with 2k boundary points and inner
disks D1, ..., Dr of degrees k_i with 2k_i points each. Points are (disk,
index) pairs numbered clockwise from 1. Strings form a perfect matching of
all points; closed strings are only counted.

Arc j of a disk runs from point j to point j + 1 (cyclically). Odd arcs are
shaded and arc 2k is the marked one. Regions are recovered by tracing arcs:
outer arc j continues at point j + 1, inner arc j at point j; the string is
followed to its other end q, which continues with arc q on the outer disk
and arc q - 1 on an inner disk.

Tangles are only considered up to isotopy, so the matching together with the
disk numbering is the whole data. Every construction is validated with an
Euler count of the traced regions.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
from collections.abc import Iterable, Sequence

from freepa import exceptions, partitions

Point = tuple[int, int]
String = tuple[Point, Point]
Arc = tuple[int, int]


def _cyclic(index: int, size: int) -> int:
  """Maps any integer to 1..size cyclically."""
  return (index - 1) % size + 1


@dataclasses.dataclass(frozen=True)
class Region:
  """Connected region of a tangle, given by the disk arcs on its boundary.

  Attributes:
    arcs: Arcs (disk, arc index) in tracing order.
    shaded: Whether the region is shaded.
    outer_arcs: Number of outer disk arcs on the boundary.
  """

  arcs: tuple[Arc, ...]
  shaded: bool

  @property
  def outer_arcs(self) -> int:
    return sum(1 for disk, _ in self.arcs if disk == 0)


@dataclasses.dataclass(frozen=True)
class Tangle:
  """Planar tangle stored as a string matching.

  Attributes:
    outer_degree: Degree k of the outer disk.
    disk_degrees: Degrees of the inner disks D1, ..., Dr.
    strings: Sorted pairs of matched points.
    loops: Number of closed strings.
    unbounded: For 0-tangles, an arc lying in the unbounded region.
  """

  outer_degree: int
  disk_degrees: tuple[int, ...] = ()
  strings: tuple[String, ...] = ()
  loops: int = 0
  unbounded: Arc | None = None

  def __post_init__(self) -> None:
    object.__setattr__(self, 'disk_degrees', tuple(self.disk_degrees))
    object.__setattr__(
      self,
      'strings',
      tuple(sorted(tuple(sorted(string)) for string in self.strings)),
    )
    if any(degree < 1 for degree in self.disk_degrees):
      raise ValueError(f'Inner disks need positive degree: {self.disk_degrees}')
    self._validate_matching()
    self._validate_regions()
    if self.unbounded is not None:
      if self.outer_degree:
        raise ValueError('Only 0-tangles carry an unbounded region marker')
      disk, arc = self.unbounded
      if not (1 <= disk <= self.n_disks and 1 <= arc <= 2 * self.degree(disk)):
        raise ValueError(f'Unbounded marker {self.unbounded} is not an arc')

  def _validate_matching(self) -> None:
    expected = set(self.points())
    seen: list[Point] = [p for string in self.strings for p in string]
    if len(seen) != len(set(seen)) or set(seen) != expected:
      raise exceptions.NotPlanar(
        f'Strings {self.strings} are not a perfect matching of the points'
      )
    for first, second in self.strings:
      same_parity = first[1] % 2 == second[1] % 2
      crosses_boundary = (first[0] == 0) != (second[0] == 0)
      if same_parity != crosses_boundary:
        raise exceptions.NotPlanar(
          f'String {first}-{second} breaks the parity rule'
        )

  def _validate_regions(self) -> None:
    vertices = [d for d in range(self.n_disks + 1) if self.degree(d)]
    union = partitions.DisjointSet(vertices)
    for first, second in self.strings:
      union.unite(first[0], second[0])
    components = len(union.groups())
    euler = len(vertices) - len(self.strings) + len(self.regions)
    if euler != 2 * components:
      raise exceptions.NotPlanar(
        f'Tangle with strings {self.strings} is not planar '
        f'(V - E + F = {euler}, components = {components})'
      )

  @property
  def n_disks(self) -> int:
    return len(self.disk_degrees)

  def degree(self, disk: int) -> int:
    return self.outer_degree if disk == 0 else self.disk_degrees[disk - 1]

  def points(self, disk: int | None = None) -> list[Point]:
    disks = range(self.n_disks + 1) if disk is None else (disk,)
    return [
      (d, index) for d in disks for index in range(1, 2 * self.degree(d) + 1)
    ]

  @functools.cached_property
  def partners(self) -> dict[Point, Point]:
    result = {}
    for first, second in self.strings:
      result[first] = second
      result[second] = first
    return result

  def _next_arc(self, arc: Arc) -> Arc:
    disk, index = arc
    size = 2 * self.degree(disk)
    end = (disk, _cyclic(index + 1, size)) if disk == 0 else (disk, index)
    next_disk, point = self.partners[end]
    if next_disk == 0:
      return (0, point)
    return (next_disk, _cyclic(point - 1, 2 * self.degree(next_disk)))

  @functools.cached_property
  def regions(self) -> tuple[Region, ...]:
    """Regions bounded by disk arcs, traced around their boundary."""
    seen: set[Arc] = set()
    result = []
    for disk, index in self.points():
      arc = (disk, index)
      if arc in seen:
        continue
      cycle = []
      current = arc
      while current not in seen:
        seen.add(current)
        cycle.append(current)
        current = self._next_arc(current)
      if current != arc or len({a % 2 for _, a in cycle}) != 1:
        raise exceptions.NotPlanar(
          f'Inconsistent shading around arcs {cycle} of {self.strings}'
        )
      result.append(Region(tuple(cycle), shaded=index % 2 == 1))
    return tuple(result)

  @functools.cached_property
  def region_index(self) -> dict[Arc, int]:
    return {
      arc: position
      for position, region in enumerate(self.regions)
      for arc in region.arcs
    }

  def shaded_region_of(self, point: Point) -> int:
    """Index of the shaded region touching a point."""
    disk, index = point
    return self.region_index[(disk, index if index % 2 else index - 1)]

  @property
  def unbounded_region(self) -> int | None:
    if self.unbounded is None:
      return None
    return self.region_index[self.unbounded]

  def _node(self, point: Point) -> tuple[str, int]:
    return ('outer', point[1]) if point[0] == 0 else ('disk', point[0])

  @functools.cached_property
  def _components(self) -> partitions.DisjointSet:
    """Connectivity of the tangle with the outer boundary removed."""
    union = partitions.DisjointSet(
      [('outer', j) for j in range(1, 2 * self.outer_degree + 1)]
      + [('disk', d) for d in range(1, self.n_disks + 1)]
    )
    for first, second in self.strings:
      union.unite(self._node(first), self._node(second))
    return union

  @property
  def is_connected(self) -> bool:
    union = self._components
    if not self.outer_degree:
      disks = range(1, self.n_disks + 1)
      return len({union.find(('disk', d)) for d in disks}) <= 1
    outer_roots = {
      union.find(('outer', j)) for j in range(1, 2 * self.outer_degree + 1)
    }
    return all(
      union.find(('disk', d)) in outer_roots
      for d in range(1, self.n_disks + 1)
    )

  def require_connected(self) -> Tangle:
    if not self.is_connected:
      raise exceptions.NotConnected(f'{self} is not connected')
    return self

  def __str__(self) -> str:
    strings = ' '.join(f'{a[0]}.{a[1]}-{b[0]}.{b[1]}' for a, b in self.strings)
    text = f'Tangle(k={self.outer_degree}, disks={list(self.disk_degrees)}'
    if self.loops:
      text += f', loops={self.loops}'
    if self.unbounded:
      text += f', unbounded={self.unbounded}'
    return f'{text}: {strings})'


def regions(tangle: Tangle) -> tuple[Region, ...]:
  return tangle.regions


def identity(k: int) -> Tangle:
  """Outer point j joined to point j of the single inner disk."""
  return Tangle(k, (k,), tuple(((0, j), (1, j)) for j in range(1, 2 * k + 1)))


def s_tangle(k: int) -> Tangle:
  """Strings 2i-1 -- 2i, no inner disks."""
  arcs = tuple(((0, 2 * i - 1), (0, 2 * i)) for i in range(1, k + 1))
  return Tangle(k, (), arcs)


def u_tangle(k: int) -> Tangle:
  """Strings 2i -- 2i+1 read cyclically, no inner disks."""
  return Tangle(
    k,
    (),
    tuple(
      ((0, 2 * i), (0, _cyclic(2 * i + 1, 2 * k))) for i in range(1, k + 1)
    ),
  )


def mult(k: int) -> Tangle:
  """Multiplication: D1 on top of D2, top points 1..k, bottom 2k..k+1."""
  strings = []
  for j in range(1, k + 1):
    strings.append(((0, j), (1, j)))
    strings.append(((1, 2 * k + 1 - j), (2, j)))
    strings.append(((2, 2 * k + 1 - j), (0, 2 * k + 1 - j)))
  return Tangle(k, (k, k), tuple(strings))


def unit(k: int = 1) -> Tangle:
  """Unit of P_k: through strings j -- 2k+1-j."""
  return Tangle(
    k, (), tuple(((0, j), (0, 2 * k + 1 - j)) for j in range(1, k + 1))
  )


def jones_diagram(k: int, i: int) -> Tangle:
  """Cap on top points i, i+1 and cup below; other strings go through."""
  if not 1 <= i < k:
    raise ValueError(f'Jones diagram index {i} not in 1..{k - 1}')
  strings = [((0, i), (0, i + 1)), ((0, 2 * k + 1 - i), (0, 2 * k - i))]
  strings += [
    ((0, j), (0, 2 * k + 1 - j)) for j in range(1, k + 1) if j not in (i, i + 1)
  ]
  return Tangle(k, (), tuple(strings))


def rotation(k: int) -> Tangle:
  """Outer point j joined to inner point j + 2."""
  return Tangle(
    k,
    (k,),
    tuple(((0, j), (1, _cyclic(j + 2, 2 * k))) for j in range(1, 2 * k + 1)),
  )


def concatenation(k: int, m: int) -> Tangle:
  """Graded multiplication: D1 on outer points 1..2k, D2 on the rest."""
  strings = [((0, j), (1, j)) for j in range(1, 2 * k + 1)]
  strings += [((0, 2 * k + j), (2, j)) for j in range(1, 2 * m + 1)]
  return Tangle(k + m, (k, m), tuple(strings))


def _closure(k: int, arc: int) -> Tangle:
  strings = tuple(((1, j), (1, 2 * k + 1 - j)) for j in range(1, k + 1))
  return Tangle(0, (k,), strings, unbounded=(1, arc))


def trace_right(k: int) -> Tangle:
  """Right closure 0-tangle of a degree k disk."""
  return _closure(k, 2 * k)


def trace_left(k: int) -> Tangle:
  """Left closure 0-tangle of a degree k disk."""
  return _closure(k, k)


def _matchings(points: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
  if not points:
    return [()]
  first = points[0]
  result = []
  for position in range(1, len(points), 2):
    for inside in _matchings(points[1:position]):
      for outside in _matchings(points[position + 1 :]):
        result.append(((first, points[position]),) + inside + outside)
  return result


@functools.lru_cache(maxsize=16)
def tl_diagrams(k: int) -> tuple[Tangle, ...]:
  """All non-crossing perfect matchings of 2k outer points."""
  return tuple(
    Tangle(k, (), tuple(((0, a), (0, b)) for a, b in matching))
    for matching in _matchings(tuple(range(1, 2 * k + 1)))
  )


def _block_labels(block: Sequence[int]) -> dict[int, int]:
  """Disk label of each element; label 1 goes to the least odd element."""
  if block[0] % 2:
    return {point: label for label, point in enumerate(block, start=1)}
  return {
    point: (label - 1 if label > 1 else len(block))
    for label, point in enumerate(block, start=1)
  }


def t_pi(partition: partitions.Partition) -> Tangle:
  """Irreducible tangle T_pi with one inner disk per block.

  Disks follow the lexicographic order of blocks; outer point i is joined to
  the disk of its block.

  Raises:
    NotEven: When a block has odd size.
    NotNonCrossing: When the partition crosses.
  """
  if partition.n % 2 or not partition.is_even():
    raise exceptions.NotEven(f'{partition} has blocks of odd size')
  partition.require_noncrossing()
  strings = []
  for disk, block in enumerate(partition.blocks, start=1):
    strings += [
      ((0, point), (disk, label))
      for point, label in _block_labels(block).items()
    ]
  return Tangle(
    partition.n // 2,
    tuple(len(block) // 2 for block in partition.blocks),
    tuple(strings),
  )


def pi_of(tangle: Tangle) -> partitions.Partition:
  """Partition of outer points by connected components inside D0.

  Raises:
    NotConnected: When an inner component misses the outer boundary.
  """
  tangle.require_connected()
  union = tangle._components
  return partitions.Partition.from_labels(
    [union.find(('outer', j)) for j in range(1, 2 * tangle.outer_degree + 1)]
  )


def shading_partition(tangle: Tangle) -> partitions.Partition:
  """Outer points grouped by the shaded region they bound."""
  tangle.require_connected()
  return partitions.Partition.from_labels(
    [
      tangle.shaded_region_of((0, j))
      for j in range(1, 2 * tangle.outer_degree + 1)
    ]
  )


def _join_paths(
  partners: dict[Point, Point],
  endpoints: Iterable[Point],
  across: dict[Point, Point],
) -> tuple[list[String], int]:
  """Follows strings through glued points.

  Args:
    partners: Matching of all points, glued ones included.
    endpoints: Points that survive the gluing.
    across: Involution pairing glued points.

  Returns:
    Strings between surviving points and the number of closed loops.
  """
  strings, done, visited = [], set(), set()
  for start in endpoints:
    if start in done:
      continue
    node = partners[start]
    while node in across:
      visited.update((node, across[node]))
      node = partners[across[node]]
    done.update((start, node))
    strings.append((start, node))
  loops = 0
  for node in across:
    if node in visited:
      continue
    loops += 1
    current = node
    while True:
      visited.add(current)
      other = partners[current]
      visited.add(other)
      current = across[other]
      if current == node:
        break
  return strings, loops


def compose(outer: Tangle, disk: int, inner: Tangle) -> Tangle:
  """Glues `inner` into inner disk `disk` of `outer`.

  Disks of the result are the disks of outer before `disk`, then the disks
  of inner, then the remaining disks of outer.

  Raises:
    DegreeMismatch: When degrees of the glued boundaries differ.
  """
  if not 1 <= disk <= outer.n_disks:
    raise exceptions.DegreeMismatch(
      f'Tangle has {outer.n_disks} inner disks, cannot compose into {disk}'
    )
  if outer.degree(disk) != inner.outer_degree:
    raise exceptions.DegreeMismatch(
      f'Disk {disk} has degree {outer.degree(disk)}, '
      f'inserted tangle has degree {inner.outer_degree}'
    )
  shift = inner.n_disks

  def relabel(node: tuple[str, Point]) -> Point:
    side, (d, j) = node
    if side == 'inner':
      return (disk - 1 + d, j)
    if d == 0 or d < disk:
      return (d, j)
    return (d - 1 + shift, j)

  partners = {('outer', p): ('outer', q) for p, q in outer.partners.items()}
  partners.update(
    {('inner', p): ('inner', q) for p, q in inner.partners.items()}
  )
  across = {}
  for j in range(1, 2 * inner.outer_degree + 1):
    across[('outer', (disk, j))] = ('inner', (0, j))
    across[('inner', (0, j))] = ('outer', (disk, j))
  endpoints = [
    node
    for node in partners
    if node not in across
  ]
  joined, loops = _join_paths(partners, sorted(endpoints), across)
  unbounded = None
  if outer.unbounded is not None:
    unbounded = _carry_unbounded(outer, disk, inner, relabel)
  result = Tangle(
    outer.outer_degree,
    outer.disk_degrees[: disk - 1]
    + inner.disk_degrees
    + outer.disk_degrees[disk:],
    tuple((relabel(a), relabel(b)) for a, b in joined),
    loops=outer.loops + inner.loops + loops,
    unbounded=unbounded,
  )
  logging.debug('Composed into disk %d: %s', disk, result)
  return result


def _carry_unbounded(
  outer: Tangle, disk: int, inner: Tangle, relabel
) -> Arc | None:
  """Finds a surviving arc of the region holding the unbounded marker."""
  marker_disk, marker_arc = outer.unbounded
  if marker_disk != disk:
    return relabel(('outer', outer.unbounded))
  queue = [('outer', outer.region_index[outer.unbounded])]
  seen = set(queue)
  survivors = []
  while queue:
    side, index = queue.pop()
    tangle = outer if side == 'outer' else inner
    for d, a in tangle.regions[index].arcs:
      glued = (d == disk) if side == 'outer' else (d == 0)
      if not glued:
        survivors.append(relabel((side, (d, a))))
        continue
      if side == 'outer':
        target = ('inner', inner.region_index[(0, a)])
      else:
        target = ('outer', outer.region_index[(disk, a)])
      if target not in seen:
        seen.add(target)
        queue.append(target)
  return min(survivors) if survivors else None


def involution(tangle: Tangle) -> Tangle:
  """Mirror image: point j of each disk goes to 2k + 1 - j."""

  def mirror(point: Point) -> Point:
    disk, index = point
    return (disk, 2 * tangle.degree(disk) + 1 - index)

  unbounded = None
  if tangle.unbounded is not None:
    disk, arc = tangle.unbounded
    points = 2 * tangle.degree(disk)
    unbounded = (disk, _cyclic(points - arc, points))
  return Tangle(
    tangle.outer_degree,
    tangle.disk_degrees,
    tuple((mirror(a), mirror(b)) for a, b in tangle.strings),
    loops=tangle.loops,
    unbounded=unbounded,
  )


def canonical(tangle: Tangle, up_to_rotation: bool = False) -> Tangle:
  """Renumbers disks in order of discovery from the outer points.

  Disks are discovered by following strings from outer points 1..2k and
  then from the points of already discovered disks, in label order. With
  `up_to_rotation`, each disk's labels are shifted by an even amount so its
  entry point becomes 1 or 2.
  """
  order: list[int] = []
  shifts: dict[int, int] = {}

  def discover(point: Point) -> None:
    disk, index = tangle.partners[point]
    if disk and disk not in shifts:
      order.append(disk)
      shifts[disk] = (index - 1) // 2 * 2 if up_to_rotation else 0

  for point in tangle.points(0):
    discover(point)
  for start in range(1, tangle.n_disks + 1):
    if start not in shifts:
      order.append(start)
      shifts[start] = 0
    position = order.index(start)
    while position < len(order):
      for point in tangle.points(order[position]):
        discover(point)
      position += 1
  new_index = {disk: position for position, disk in enumerate(order, start=1)}

  def relabel(point: Point) -> Point:
    disk, index = point
    if disk == 0:
      return point
    return (
      new_index[disk],
      _cyclic(index - shifts[disk], 2 * tangle.degree(disk)),
    )

  unbounded = relabel(tangle.unbounded) if tangle.unbounded else None
  result = Tangle(
    tangle.outer_degree,
    tuple(tangle.degree(disk) for disk in order),
    tuple((relabel(a), relabel(b)) for a, b in tangle.strings),
    loops=tangle.loops,
    unbounded=unbounded,
  )
  if unbounded is not None:
    region = result.regions[result.region_index[unbounded]]
    result = dataclasses.replace(result, unbounded=min(region.arcs))
  return result


def same_tangle(
  first: Tangle, second: Tangle, up_to_rotation: bool = False
) -> bool:
  return canonical(first, up_to_rotation) == canonical(second, up_to_rotation)


def is_free_pair(first: Tangle, second: Tangle) -> bool:
  """Kreweras criterion: pi_{T'} <= kr'(pi_T)."""
  if first.outer_degree != second.outer_degree:
    raise exceptions.DegreeMismatch(
      f'Free pair needs equal degrees, got {first.outer_degree} '
      f'and {second.outer_degree}'
    )
  return pi_of(second).leq(partitions.nested_kreweras(pi_of(first)))


def free_compose(first: Tangle, second: Tangle) -> Tangle:
  """Free composition T * T' of degree 2k.

  Outer point i of T moves to 2i - delta(i) and outer point i of T' to
  2i - (1 - delta(i)); labels on the disks of T' shift down by one.

  Raises:
    NotFree: When the pair fails the Kreweras criterion.
  """
  if not is_free_pair(first, second):
    raise exceptions.NotFree(
      f'pi = {pi_of(second)} is not below '
      f'kr\'({pi_of(first)}) = {partitions.nested_kreweras(pi_of(first))}'
    )
  offset = first.n_disks

  def left(point: Point) -> Point:
    disk, index = point
    if disk == 0:
      return (0, 2 * index - partitions.parity(index))
    return point

  def right(point: Point) -> Point:
    disk, index = point
    if disk == 0:
      return (0, 2 * index - (1 - partitions.parity(index)))
    return (disk + offset, _cyclic(index - 1, 2 * second.degree(disk)))

  strings = [(left(a), left(b)) for a, b in first.strings]
  strings += [(right(a), right(b)) for a, b in second.strings]
  return Tangle(
    2 * first.outer_degree,
    first.disk_degrees + second.disk_degrees,
    tuple(strings),
    loops=first.loops + second.loops,
  )


def _require_reducible(partition: partitions.Partition) -> None:
  if partition.n % 2:
    raise exceptions.OddOrder(f'{partition} has odd order')
  pairs = partitions.Partition.pi0(partition.n // 2)
  if not pairs.leq(partition):
    raise exceptions.PrecedenceViolation(
      f'{partition} does not dominate pi0 = {pairs}'
    )


def reduced_pair(partition: partitions.Partition) -> tuple[Tangle, Tangle]:
  """Reduced free pair (T_pi, T_kr'(pi)) for pi >= pi0.

  Raises:
    PrecedenceViolation: When pi does not dominate pi0.
  """
  _require_reducible(partition)
  return t_pi(partition), t_pi(partitions.nested_kreweras(partition))


def is_reduced_pair(first: Tangle, second: Tangle) -> bool:
  try:
    partition = pi_of(first)
    _require_reducible(partition)
  except exceptions.FreepaError:
    return False
  expected_first, expected_second = reduced_pair(partition)
  return same_tangle(first, expected_first) and same_tangle(
    second, expected_second
  )


@dataclasses.dataclass(frozen=True)
class Factorization:
  """T = T_pi composed with one connected factor per block.

  Attributes:
    partition: pi_T.
    factors: Factors in block order.
  """

  partition: partitions.Partition
  factors: tuple[Tangle, ...]

  def recompose(self) -> Tangle:
    result = t_pi(self.partition)
    for disk in range(len(self.factors), 0, -1):
      result = compose(result, disk, self.factors[disk - 1])
    return result


def irreducible_factorization(tangle: Tangle) -> Factorization:
  """Splits a connected tangle along the components of pi_T.

  The outer labels of each factor start at the least odd element of its
  block, matching the disk labels of T_pi.

  Raises:
    NotConnected: When the tangle is not connected.
  """
  partition = pi_of(tangle)
  union = tangle._components
  factors = []
  for position, block in enumerate(partition.blocks):
    root = union.find(('outer', block[0]))
    disks = [
      d
      for d in range(1, tangle.n_disks + 1)
      if union.find(('disk', d)) == root
    ]
    local = {d: index for index, d in enumerate(disks, start=1)}
    labels = _block_labels(block)

    def relabel(point: Point) -> Point:
      disk, index = point
      return (0, labels[index]) if disk == 0 else (local[disk], index)

    strings = [
      (relabel(a), relabel(b))
      for a, b in tangle.strings
      if union.find(tangle._node(a)) == root
    ]
    factors.append(
      Tangle(
        len(block) // 2,
        tuple(tangle.degree(d) for d in disks),
        tuple(strings),
        loops=tangle.loops if position == 0 else 0,
      )
    )
  return Factorization(partition, tuple(factors))


@dataclasses.dataclass(frozen=True)
class InterleavingForm:
  """Tangle R with per-disk colors and generator assignments.

  Attributes:
    tangle: R, with the disks of T followed by the disks of T'.
    colors: 1 for disks coming from T, 2 for disks coming from T'.
    assignments: (X_i, X~_i) for every disk of R.
  """

  tangle: Tangle
  colors: tuple[int, ...]
  assignments: tuple[tuple[Tangle, Tangle], ...]

  def recompose(self, side: int) -> Tangle:
    """R composed with X (side 0) or X~ (side 1)."""
    result = self.tangle
    for disk in range(len(self.assignments), 0, -1):
      result = compose(result, disk, self.assignments[disk - 1][side])
    return result


def interleaving_form(first: Tangle, second: Tangle) -> InterleavingForm:
  """Tangle R with R(X) = T and R(X~) = T' for a reduced free pair.

  R is read off T * T' by joining, for every i, the strands at points 4i-1
  and 4i. Disks of T get (Id, S). A disk of T' of degree m takes U_m in its
  own labels, but free_compose shifts its labels down by one point, and U_m
  read one point later is S_m. In R such a disk therefore gets (S_m, Id).

  Raises:
    NotReduced: When (T, T') is not a reduced free pair.
  """
  if not is_reduced_pair(first, second):
    raise exceptions.NotReduced(f'{first} and {second} are not a reduced pair')
  k = first.outer_degree
  joined = free_compose(first, second)
  across = {}
  for i in range(1, k + 1):
    across[(0, 4 * i - 1)] = (0, 4 * i)
    across[(0, 4 * i)] = (0, 4 * i - 1)
  endpoints = sorted(p for p in joined.partners if p not in across)
  strings, loops = _join_paths(joined.partners, endpoints, across)

  def relabel(point: Point) -> Point:
    disk, index = point
    return point if disk else (0, index // 2 + 1)

  tangle = Tangle(
    k,
    joined.disk_degrees,
    tuple((relabel(a), relabel(b)) for a, b in strings),
    loops=joined.loops + loops,
  )
  colors = (1,) * first.n_disks + (2,) * second.n_disks
  assignments = tuple(
    (identity(degree), s_tangle(degree))
    if color == 1
    else (s_tangle(degree), identity(degree))
    for color, degree in zip(colors, tangle.disk_degrees)
  )
  return InterleavingForm(tangle, colors, assignments)


def _boundary_order(
  partition: partitions.Partition, upper: int
) -> partitions.Partition:
  n = partition.n
  if not 0 <= upper <= n:
    raise exceptions.OrderMismatch(
      f'{upper} upper points do not fit a partition of order {n}'
    )

  def position(i: int) -> int:
    return i if i <= upper else n + upper + 1 - i

  return partitions.Partition(
    n, tuple(tuple(position(i) for i in block) for block in partition.blocks)
  )


def fatten(
  partition: partitions.Partition, upper: int | None = None
) -> Tangle:
  """Temperley-Lieb diagram drawn around the blocks of a partition.

  With `upper` = k the partition is a (k, l)-partition of a rectangle, upper
  points 1..k and lower points k+1..k+l both numbered left to right. The lower
  row is reversed into the boundary order, upper points left to right then
  lower points right to left, and non-crossing is checked in that order.
  Without `upper` the points are already in boundary order.

  Point i becomes outer points 2i-1 and 2i; a block b_1 < ... < b_t gives
  strings 2b_j -- 2b_{j+1} - 1 and 2b_t -- 2b_1 - 1.

  Raises:
    NotNonCrossing: When the partition crosses in boundary order.
    OrderMismatch: When upper is not in 0..n.
  """
  if upper is not None:
    partition = _boundary_order(partition, upper)
  partition.require_noncrossing()
  strings = []
  for block in partition.blocks:
    for current, following in zip(block, block[1:] + block[:1]):
      strings.append(((0, 2 * current), (0, 2 * following - 1)))
  return Tangle(partition.n, (), tuple(strings))


@functools.lru_cache(maxsize=16)
def reduced_partitions(k: int) -> tuple[partitions.Partition, ...]:
  """Even non-crossing partitions of order 2k dominating pi0."""
  pairs = partitions.Partition.pi0(k)
  return tuple(
    p
    for p in partitions.noncrossing_partitions(2 * k)
    if p.is_even() and pairs.leq(p)
  )
