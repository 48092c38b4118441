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

"""Non-crossing partition calculus.

Partitions are stored canonically: elements 1..n, each block sorted, blocks
sorted by least element. The module covers the lattice operations, the usual,
partial and nested Kreweras complements, the parity maps between orders n and
2n, block depth, block surgery and enveloping blocks.

Text format is `{1,3,4},{2},{5,6}`. Partial partitions add their support and,
optionally, their ambient order: `{1,3}|S={1,3}|n=3`.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import itertools
import re
from collections.abc import Iterable, Iterator, Sequence
from typing import Final

from freepa import exceptions

NC_CAP: Final[int] = 14
ALL_PARTITIONS_CAP: Final[int] = 10

Block = tuple[int, ...]

_PARTITION_PATTERN = re.compile(r'(\{\d+(,\d+)*\})(,\{\d+(,\d+)*\})*')
_BLOCK_PATTERN = re.compile(r'\{([^{}]*)\}')


class PartitionClass(str, enum.Enum):
  """Classes of partitions available for enumeration."""

  ALL = 'all'
  NONCROSSING = 'noncrossing'
  INTERVAL = 'interval'
  EVEN_NONCROSSING = 'even-noncrossing'


class KrewerasDirection(str, enum.Enum):
  FORWARD = 'forward'
  INVERSE = 'inverse'


class ParityMap(str, enum.Enum):
  F = 'F'
  G = 'G'
  F_INV = 'F_inv'
  G_INV = 'G_inv'


class DisjointSet:
  """Union-find over hashable elements."""

  def __init__(self, elements: Iterable[object] = ()) -> None:
    self.parent: dict[object, object] = {}
    for element in elements:
      self.add(element)

  def add(self, element: object) -> None:
    self.parent.setdefault(element, element)

  def find(self, element: object) -> object:
    self.add(element)
    root = element
    while self.parent[root] != root:
      root = self.parent[root]
    while self.parent[element] != root:
      self.parent[element], element = root, self.parent[element]
    return root

  def unite(self, first: object, second: object) -> bool:
    root_first, root_second = self.find(first), self.find(second)
    if root_first == root_second:
      return False
    self.parent[root_second] = root_first
    return True

  def groups(self) -> list[list[object]]:
    grouped: dict[object, list[object]] = {}
    for element in self.parent:
      grouped.setdefault(self.find(element), []).append(element)
    return list(grouped.values())


def _crosses(first: Block, second: Block) -> bool:
  """Whether two disjoint blocks interleave as a < b < c < d."""
  merged = sorted(
    [(element, 0) for element in first] + [(e, 1) for e in second]
  )
  runs = [side for side, _ in itertools.groupby(merged, key=lambda x: x[1])]
  return len(runs) >= 4


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[Block, ...]:
  return tuple(
    sorted((tuple(sorted(block)) for block in blocks if block), key=min)
  )


def _parse_blocks(text: str) -> tuple[Block, ...]:
  compact = re.sub(r'\s+', '', text)
  if not compact:
    return ()
  if not _PARTITION_PATTERN.fullmatch(compact):
    raise exceptions.PartitionSyntaxError(
      f'Cannot parse partition {text!r}, expected format {{1,3}},{{2}}'
    )
  return tuple(
    tuple(int(element) for element in body.split(','))
    for body in _BLOCK_PATTERN.findall(compact)
  )


def _format_blocks(blocks: Iterable[Block]) -> str:
  return ','.join('{' + ','.join(map(str, block)) + '}' for block in blocks)


@dataclasses.dataclass(frozen=True)
class PartitionClassFlags:
  """Membership of a partition in the classes NC, interval and even."""

  noncrossing: bool
  interval: bool
  even: bool


@dataclasses.dataclass(frozen=True)
class Partition:
  """Set partition of {1, ..., n}.

  Attributes:
    n: Order of the partition.
    blocks: Canonically ordered blocks.
  """

  n: int
  blocks: tuple[Block, ...]

  def __post_init__(self) -> None:
    blocks = _canonical_blocks(self.blocks)
    elements = sorted(itertools.chain.from_iterable(blocks))
    if elements != list(range(1, self.n + 1)):
      raise ValueError(
        f'Blocks {_format_blocks(blocks)} do not partition 1..{self.n}'
      )
    object.__setattr__(self, 'blocks', blocks)

  @classmethod
  def from_string(cls, text: str, n: int | None = None) -> Partition:
    """Parses `{1,3},{2}`; order defaults to the largest element."""
    blocks = _parse_blocks(text)
    order = n if n is not None else max(itertools.chain((0,), *blocks))
    try:
      return cls(order, blocks)
    except ValueError as e:
      raise exceptions.PartitionSyntaxError(str(e)) from e

  @classmethod
  def from_labels(cls, labels: Sequence[object]) -> Partition:
    """Builds partition where i ~ j iff labels[i-1] == labels[j-1]."""
    grouped: dict[object, list[int]] = {}
    for position, label in enumerate(labels, start=1):
      grouped.setdefault(label, []).append(position)
    return cls(len(labels), tuple(tuple(block) for block in grouped.values()))

  @classmethod
  def discrete(cls, n: int) -> Partition:
    return cls(n, tuple((i,) for i in range(1, n + 1)))

  @classmethod
  def full(cls, n: int) -> Partition:
    return cls(n, (tuple(range(1, n + 1)),) if n else ())

  @classmethod
  def pi0(cls, k: int) -> Partition:
    """Pairs {2i, 2i+1} of order 2k, read cyclically so {1, 2k} is a block."""
    return cls(
      2 * k, ((1, 2 * k),) + tuple((2 * i, 2 * i + 1) for i in range(1, k))
    )

  @classmethod
  def pi1(cls, k: int) -> Partition:
    """Pairs {2i-1, 2i} of order 2k."""
    return cls(2 * k, tuple((2 * i - 1, 2 * i) for i in range(1, k + 1)))

  @functools.cached_property
  def labels(self) -> dict[int, int]:
    """Maps each element to the index of its block."""
    return {
      element: index
      for index, block in enumerate(self.blocks)
      for element in block
    }

  def block_of(self, element: int) -> Block:
    return self.blocks[self.labels[element]]

  def related(self, first: int, second: int) -> bool:
    return self.labels[first] == self.labels[second]

  def __len__(self) -> int:
    return len(self.blocks)

  def __str__(self) -> str:
    return _format_blocks(self.blocks)

  def __repr__(self) -> str:
    return f"Partition({self.n}, '{self}')"

  def sort_key(self) -> tuple[int, ...]:
    """Restricted growth string, used as canonical enumeration order."""
    return tuple(self.labels[i] for i in range(1, self.n + 1))

  def is_noncrossing(self) -> bool:
    return not any(
      _crosses(first, second)
      for first, second in itertools.combinations(self.blocks, 2)
    )

  def is_interval(self) -> bool:
    return all(block[-1] - block[0] + 1 == len(block) for block in self.blocks)

  def is_even(self) -> bool:
    return all(len(block) % 2 == 0 for block in self.blocks)

  def flags(self) -> PartitionClassFlags:
    return PartitionClassFlags(
      noncrossing=self.is_noncrossing(),
      interval=self.is_interval(),
      even=self.is_even(),
    )

  def require_noncrossing(self) -> Partition:
    if not self.is_noncrossing():
      raise exceptions.NotNonCrossing(f'{self} is not non-crossing')
    return self

  def _require_same_order(self, other: Partition) -> None:
    if self.n != other.n:
      raise exceptions.OrderMismatch(
        f'Partitions {self} and {other} have orders {self.n} and {other.n}'
      )

  def leq(self, other: Partition) -> bool:
    """Whether every block of self lies inside a block of other."""
    self._require_same_order(other)
    return all(
      len({other.labels[element] for element in block}) == 1
      for block in self.blocks
    )

  __le__ = leq

  def meet(self, other: Partition) -> Partition:
    self._require_same_order(other)
    return Partition.from_labels(
      [(self.labels[i], other.labels[i]) for i in range(1, self.n + 1)]
    )

  def join(self, other: Partition) -> Partition:
    self._require_same_order(other)
    union = DisjointSet(range(1, self.n + 1))
    for block in itertools.chain(self.blocks, other.blocks):
      for element in block[1:]:
        union.unite(block[0], element)
    return Partition(self.n, tuple(tuple(g) for g in union.groups()))

  def relabel(self, mapping: dict[int, int], n: int) -> Partition:
    return Partition(
      n, tuple(tuple(mapping[e] for e in block) for block in self.blocks)
    )

  def restrict(self, support: Iterable[int]) -> PartialPartition:
    """Restriction of self to a subset, as a partial partition."""
    support = frozenset(support)
    return PartialPartition(
      self.n,
      support,
      tuple(
        tuple(e for e in block if e in support)
        for block in self.blocks
      ),
    )


@dataclasses.dataclass(frozen=True)
class PartialPartition:
  """Partition of a support S inside {1, ..., n}.

  Attributes:
    n: Ambient order.
    support: Subset S the blocks partition.
    blocks: Canonically ordered blocks covering S.
  """

  n: int
  support: frozenset[int]
  blocks: tuple[Block, ...]

  def __post_init__(self) -> None:
    blocks = _canonical_blocks(self.blocks)
    support = frozenset(self.support)
    elements = sorted(itertools.chain.from_iterable(blocks))
    if elements != sorted(support):
      raise ValueError(
        f'Blocks {_format_blocks(blocks)} do not partition support '
        f'{sorted(support)}'
      )
    if support and (min(support) < 1 or max(support) > self.n):
      raise ValueError(f'Support {sorted(support)} is outside 1..{self.n}')
    object.__setattr__(self, 'blocks', blocks)
    object.__setattr__(self, 'support', support)

  @classmethod
  def from_string(cls, text: str, n: int | None = None) -> PartialPartition:
    """Parses `{1,3}|S={1,3}` with optional `|n=5` suffix."""
    parts = [part.strip() for part in text.split('|')]
    blocks = _parse_blocks(parts[0])
    support: frozenset[int] | None = None
    for part in parts[1:]:
      if part.startswith('S='):
        body = part[2:].strip()
        if not re.fullmatch(r'\{\s*(\d+(\s*,\s*\d+)*)?\s*\}', body):
          raise exceptions.PartitionSyntaxError(
            f'Cannot parse support {body!r}'
          )
        support = frozenset(int(e) for e in re.findall(r'\d+', body))
      elif part.startswith('n='):
        n = int(part[2:])
      else:
        raise exceptions.PartitionSyntaxError(
          f'Unknown partial partition field {part!r}'
        )
    if support is None:
      support = frozenset(itertools.chain.from_iterable(blocks))
    if n is None:
      n = max(itertools.chain((0,), support))
    try:
      return cls(n, support, blocks)
    except ValueError as e:
      raise exceptions.PartitionSyntaxError(str(e)) from e

  @functools.cached_property
  def labels(self) -> dict[int, int]:
    return {
      element: index
      for index, block in enumerate(self.blocks)
      for element in block
    }

  @property
  def complement(self) -> frozenset[int]:
    return frozenset(range(1, self.n + 1)) - self.support

  def is_noncrossing(self) -> bool:
    return not any(
      _crosses(first, second)
      for first, second in itertools.combinations(self.blocks, 2)
    )

  def __str__(self) -> str:
    support = ','.join(map(str, sorted(self.support)))
    return f'{_format_blocks(self.blocks)}|S={{{support}}}|n={self.n}'


def join_partial(
  first: PartialPartition, second: PartialPartition
) -> Partition:
  """Partition (p, S) v (p', S^c) obtained from complementary supports."""
  if first.n != second.n:
    raise exceptions.OrderMismatch(
      f'Partial partitions have orders {first.n} and {second.n}'
    )
  if first.support & second.support or (
    len(first.support) + len(second.support) != first.n
  ):
    raise ValueError('Supports must be complementary')
  return Partition(first.n, first.blocks + second.blocks)


interleave = join_partial


def _set_partitions(n: int) -> Iterator[Partition]:
  """All partitions of 1..n in restricted growth order."""

  def grow(prefix: list[int], blocks: int) -> Iterator[list[int]]:
    if len(prefix) == n:
      yield prefix
      return
    for label in range(blocks + 1):
      yield from grow(prefix + [label], max(blocks, label + 1))

  for labels in grow([], 0):
    yield Partition.from_labels(labels)


def _noncrossing_blocks(
  elements: tuple[int, ...],
) -> Iterator[tuple[Block, ...]]:
  if not elements:
    yield ()
    return
  yield from _extend_block((elements[0],), elements[1:])


def _extend_block(
  block: Block, rest: tuple[int, ...]
) -> Iterator[tuple[Block, ...]]:
  for tail in _noncrossing_blocks(rest):
    yield (block,) + tail
  for position, element in enumerate(rest):
    for inner in _noncrossing_blocks(rest[:position]):
      for tail in _extend_block(block + (element,), rest[position + 1 :]):
        yield inner + tail


@functools.lru_cache(maxsize=32)
def noncrossing_partitions(n: int) -> tuple[Partition, ...]:
  """NC(n) in canonical order; NC(0) holds the empty partition."""
  partitions = [
    Partition(n, blocks)
    for blocks in _noncrossing_blocks(tuple(range(1, n + 1)))
  ]
  return tuple(sorted(partitions, key=Partition.sort_key))


@functools.lru_cache(maxsize=32)
def interval_partitions(n: int) -> tuple[Partition, ...]:
  """Interval partitions of order n, one per composition of n."""
  result = []
  for cuts in itertools.product((False, True), repeat=max(n - 1, 0)):
    blocks, start = [], 1
    for position, cut in enumerate(cuts, start=1):
      if cut:
        blocks.append(tuple(range(start, position + 1)))
        start = position + 1
    blocks.append(tuple(range(start, n + 1)))
    result.append(Partition(n, tuple(blocks)))
  return tuple(sorted(result, key=Partition.sort_key))


def enumerate_partitions(
  n: int,
  partition_class: PartitionClass | str = PartitionClass.NONCROSSING,
  cap: int | None = None,
) -> list[Partition]:
  """Enumerates partitions of a class in canonical order.

  Args:
    n: Order of partitions.
    partition_class: One of all, noncrossing, interval, even-noncrossing.
    cap: Largest allowed order; defaults depend on the class.

  Returns:
    Duplicate free list of partitions.

  Raises:
    CapExceeded: When n is above the cap.
  """
  partition_class = PartitionClass(partition_class)
  if cap is None:
    cap = (
      ALL_PARTITIONS_CAP if partition_class == PartitionClass.ALL else NC_CAP
    )
  if n < 1:
    raise ValueError(f'Order must be positive, got {n}')
  if n > cap:
    raise exceptions.CapExceeded(
      f'Order {n} exceeds cap {cap} for {partition_class.value} partitions'
    )
  if partition_class == PartitionClass.ALL:
    return list(_set_partitions(n))
  if partition_class == PartitionClass.INTERVAL:
    return list(interval_partitions(n))
  partitions = noncrossing_partitions(n)
  if partition_class == PartitionClass.EVEN_NONCROSSING:
    return [p for p in partitions if p.is_even()]
  return list(partitions)


def lattice_ops(first: Partition, second: Partition) -> dict[str, object]:
  """Meet, join and order relation of two partitions."""
  return {
    'meet': first.meet(second),
    'join': first.join(second),
    'leq': first.leq(second),
  }


def partial_kreweras(partial: PartialPartition) -> PartialPartition:
  """Kreweras complement kr(p, S), a partial partition supported on S^c.

  For i < j in S^c, i ~ j iff no k in [i, j] of S is related to an element
  of S outside [i, j].

  Raises:
    NotNonCrossing: When the partial partition crosses on its support.
  """
  if not partial.is_noncrossing():
    raise exceptions.NotNonCrossing(f'{partial} is not non-crossing')
  complement = sorted(partial.complement)
  labels = partial.labels
  union = DisjointSet(complement)
  for i, j in itertools.combinations(complement, 2):
    inside = {labels[k] for k in partial.support if i < k < j}
    outside = {labels[k] for k in partial.support if k < i or k > j}
    if not inside & outside:
      union.unite(i, j)
  return PartialPartition(
    partial.n,
    frozenset(complement),
    tuple(tuple(group) for group in union.groups()),
  )


def kreweras(
  partition: Partition,
  direction: KrewerasDirection | str = KrewerasDirection.FORWARD,
) -> Partition:
  """Kreweras complement K(p) or its inverse.

  K(p) is read on the even points of the order 2n partial complement of p
  placed on the odd points; the inverse swaps the roles of odds and evens.
  """
  partition.require_noncrossing()
  n = partition.n
  if KrewerasDirection(direction) == KrewerasDirection.FORWARD:
    placed, read = (lambda i: 2 * i - 1), (lambda i: 2 * i)
  else:
    placed, read = (lambda i: 2 * i), (lambda i: 2 * i - 1)
  support = frozenset(placed(i) for i in range(1, n + 1))
  lifted = PartialPartition(
    2 * n,
    support,
    tuple(tuple(placed(e) for e in block) for block in partition.blocks),
  )
  complement = partial_kreweras(lifted)
  back = {read(i): i for i in range(1, n + 1)}
  return Partition(
    n, tuple(tuple(back[e] for e in block) for block in complement.blocks)
  )


def kreweras_inverse(partition: Partition) -> Partition:
  return kreweras(partition, KrewerasDirection.INVERSE)


def parity(i: int) -> int:
  """delta(i): 1 for odd i, 0 for even i."""
  return i % 2


def nested_kreweras(partition: Partition) -> Partition:
  """Nested Kreweras complement kr'(pi) of an order 2k partition.

  pi is placed on f(i) = 2i - delta(i) inside 4k points; the partial
  complement lives on f~(i) = 2i - (1 - delta(i)) and is read back through
  f~.

  Raises:
    OddOrder: When the order is odd.
    NotNonCrossing: When pi crosses.
  """
  if partition.n % 2:
    raise exceptions.OddOrder(f'{partition} has odd order {partition.n}')
  partition.require_noncrossing()
  n = partition.n

  def f(i: int) -> int:
    return 2 * i - parity(i)

  def f_tilde(i: int) -> int:
    return 2 * i - (1 - parity(i))

  lifted = PartialPartition(
    2 * n,
    frozenset(f(i) for i in range(1, n + 1)),
    tuple(tuple(f(e) for e in block) for block in partition.blocks),
  )
  complement = partial_kreweras(lifted)
  back = {f_tilde(i): i for i in range(1, n + 1)}
  return Partition(
    n, tuple(tuple(back[e] for e in block) for block in complement.blocks)
  )


def parity_map(partition: Partition, which: ParityMap | str) -> Partition:
  """Parity maps F, G between orders 2n and n, and their inverses.

  F(pi): i ~ j iff 2i-1 ~ 2j-1, defined for pi >= pi0.
  G(pi): i ~ j iff 2i ~ 2j, defined for pi >= pi1.
  F_inv(p) adds 2i-2 (cyclically) to each 2i-1; G_inv(p) adds 2i.

  Raises:
    PrecedenceViolation: When pi does not dominate the pair partition.
  """
  which = ParityMap(which)
  if which in (ParityMap.F, ParityMap.G):
    if partition.n % 2:
      raise exceptions.OddOrder(f'{partition} has odd order {partition.n}')
    k = partition.n // 2
    pairs, offset, name = (
      (Partition.pi0(k), 1, 'pi0')
      if which == ParityMap.F
      else (Partition.pi1(k), 0, 'pi1')
    )
    if not pairs.leq(partition):
      raise exceptions.PrecedenceViolation(
        f'{partition} does not dominate {name} = {pairs}'
      )
    return Partition.from_labels(
      [partition.labels[2 * i - offset] for i in range(1, k + 1)]
    )
  n = partition.n
  if which == ParityMap.F_INV:
    partner = lambda i: (2 * i - 2) if i > 1 else 2 * n  # noqa: E731
  else:
    partner = lambda i: 2 * i  # noqa: E731
  return Partition(
    2 * n,
    tuple(
      tuple(
        itertools.chain.from_iterable((2 * i - 1, partner(i)) for i in block)
      )
      for block in partition.blocks
    ),
  )


def _encloses(outer: Block, inner: Block) -> bool:
  return outer[0] < inner[0] and inner[-1] < outer[-1]


def depth(partition: Partition) -> dict[Block, int]:
  """Depth of each block: 1 plus the longest chain of enclosing blocks."""
  partition.require_noncrossing()

  @functools.lru_cache(maxsize=None)
  def block_depth(block: Block) -> int:
    enclosing = [b for b in partition.blocks if _encloses(b, block)]
    return 1 + max((block_depth(b) for b in enclosing), default=0)

  return {block: block_depth(block) for block in partition.blocks}


def _require_block(partition: Partition, block: Iterable[int]) -> Block:
  block = tuple(sorted(block))
  if block not in partition.blocks:
    raise exceptions.FreepaError(f'{set(block)} is not a block of {partition}')
  return block


def merge_blocks(
  partition: Partition, first: Iterable[int], second: Iterable[int]
) -> Partition:
  """p_{B,B'}: merges two blocks whose union keeps p non-crossing.

  Raises:
    NotAdjacent: When the merge introduces a crossing.
  """
  first = _require_block(partition, first)
  second = _require_block(partition, second)
  if first == second:
    raise exceptions.NotAdjacent(f'Cannot merge block {set(first)} with itself')
  blocks = [b for b in partition.blocks if b not in (first, second)]
  merged = Partition(partition.n, tuple(blocks) + (first + second,))
  if not merged.is_noncrossing():
    raise exceptions.NotAdjacent(
      f'Blocks {set(first)} and {set(second)} of {partition} are not adjacent'
    )
  return merged


def split_block(
  partition: Partition, block: Iterable[int], index: int
) -> Partition:
  """p_{B,i}: splits B into its first `index` elements and the rest.

  Raises:
    InvalidSplitIndex: Unless 1 <= index <= |B| - 1.
  """
  block = _require_block(partition, block)
  if not 1 <= index < len(block):
    raise exceptions.InvalidSplitIndex(
      f'Split index {index} not in 1..{len(block) - 1} for block {set(block)}'
    )
  blocks = [b for b in partition.blocks if b != block]
  return Partition(
    partition.n, tuple(blocks) + (block[:index], block[index:])
  )


def block_surgery(
  partition: Partition,
  action: str,
  block: Iterable[int],
  other: Iterable[int] | int,
) -> Partition:
  """Dispatches `merge` (other is a block) or `split` (other is an index)."""
  if action == 'merge':
    return merge_blocks(partition, block, other)
  if action == 'split':
    return split_block(partition, block, int(other))
  raise ValueError(f'Unknown surgery action {action!r}, use merge or split')


def split_candidates(block: Sequence[int]) -> list[int]:
  return list(range(1, len(block)))


def adjacent_blocks(partition: Partition, block: Iterable[int]) -> list[Block]:
  """Blocks that can be merged with the given one."""
  block = _require_block(partition, block)
  adjacent = []
  for other in partition.blocks:
    if other == block:
      continue
    try:
      merge_blocks(partition, block, other)
    except exceptions.NotAdjacent:
      continue
    adjacent.append(other)
  return adjacent


def dual_point_partition(partition: Partition) -> Partition:
  """p° of order 2n: p on odd points, K(p) on even points."""
  complement = kreweras(partition)
  return Partition(
    2 * partition.n,
    tuple(tuple(2 * e - 1 for e in b) for b in partition.blocks)
    + tuple(tuple(2 * e for e in b) for b in complement.blocks),
  )


@dataclasses.dataclass(frozen=True)
class EnvelopingBlocks:
  """Enveloping blocks of a block B, given as blocks of K(p).

  Attributes:
    upper: Upper enveloping block C^B.
    lower: Lower enveloping blocks C^B_1, ..., C^B_{r-1}, left to right.
  """

  upper: Block
  lower: tuple[Block, ...]


def enveloping_blocks(
  partition: Partition, block: Iterable[int]
) -> EnvelopingBlocks:
  """Enveloping blocks of B = {b_1 < ... < b_r} inside p°.

  The K(p) blocks adjacent to B in p° are those through the even points
  2b_j. The one through 2b_r has depth at most d(B) and is the upper block;
  the others are nested inside B.
  """
  partition.require_noncrossing()
  block = _require_block(partition, block)
  complement = kreweras(partition)
  return EnvelopingBlocks(
    upper=complement.block_of(block[-1]),
    lower=tuple(complement.block_of(element) for element in block[:-1]),
  )


@dataclasses.dataclass(frozen=True)
class SurgeryConvention:
  """Index convention under which K(p_{B,i}) = K(p)_{C^B, C^B_{i+offset}}.

  Attributes:
    offset: Shift between split rank and lower enveloping block index.
    max_n: Largest order checked.
    cases: Number of (p, B, i) cases checked.
  """

  offset: int
  max_n: int
  cases: int


def surgery_holds(
  partition: Partition, block: Block, index: int, offset: int
) -> bool:
  """Checks K(p_{B,i}) = K(p) with C^B merged into C^B_{i+offset}."""
  envelope = enveloping_blocks(partition, block)
  target = index + offset
  if not 1 <= target <= len(envelope.lower):
    return False
  complement = kreweras(partition)
  lower = envelope.lower[target - 1]
  try:
    expected = merge_blocks(complement, envelope.upper, lower)
  except exceptions.NotAdjacent:
    return False
  return kreweras(split_block(partition, block, index)) == expected


def surgery_convention(
  max_n: int = 7, offsets: Sequence[int] = (-1, 0, 1)
) -> SurgeryConvention:
  """Finds the index offset for which the surgery identity always holds.

  Raises:
    FreepaError: When no candidate offset works.
  """
  cases = [
    (p, block, index)
    for n in range(1, max_n + 1)
    for p in noncrossing_partitions(n)
    for block in p.blocks
    for index in split_candidates(block)
  ]
  for offset in offsets:
    if all(surgery_holds(p, b, i, offset) for p, b, i in cases):
      return SurgeryConvention(offset=offset, max_n=max_n, cases=len(cases))
  raise exceptions.FreepaError(
    f'No surgery offset among {tuple(offsets)} holds up to order {max_n}'
  )
