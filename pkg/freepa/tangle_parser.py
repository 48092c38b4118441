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

"""Text language for tangle expressions.

Grammar (whitespace-insensitive):

  expr := 'Tpi[' partition ']' | 'S' int | 'U' int | 'M(' int ',' int ')'
        | 'Mult' int | 'Unit' [int] | 'TrL' int | 'TrR' int
        | 'E(' int ',' int ')' | 'Rot' int
        | 'compose(' expr ',' int ',' expr ')' | 'free(' expr ',' expr ')'
        | 'inv(' expr ')'

Parsed trees are type-checked eagerly: degrees must agree at every compose
node and the children of a free node must form a free pair.
"""

from __future__ import annotations

import abc
import dataclasses
import functools
import re
from collections.abc import Iterator
from typing import Final

from typing_extensions import override

from freepa import exceptions, partitions, tangles

CONSTRUCTORS: Final[tuple[str, ...]] = (
  'Tpi',
  'S',
  'U',
  'M',
  'Mult',
  'Unit',
  'TrL',
  'TrR',
  'E',
  'Rot',
  'compose',
  'free',
  'inv',
)

_TOKEN_PATTERN = re.compile(
  r'(?P<name>[A-Za-z_]+)|(?P<int>\d+)|(?P<punct>[\[\]{}(),])'
  r'|(?P<newline>\n)|(?P<space>[ \t\r]+)|(?P<bad>.)'
)


class TangleExpr(abc.ABC):
  """Node of a tangle expression tree."""

  @abc.abstractmethod
  def build(self) -> tangles.Tangle:
    """Constructs the combinatorial tangle of the expression."""

  @property
  def delta_exponent(self) -> int:
    """Power of delta carried by the expression as a scalar factor."""
    return sum(child.delta_exponent for child in self.children)

  @property
  def children(self) -> tuple[TangleExpr, ...]:
    return ()

  @property
  def degree(self) -> int:
    return self.build().outer_degree

  def check(self) -> None:
    """Type-checks the tree bottom-up."""
    for child in self.children:
      child.check()


@dataclasses.dataclass(frozen=True)
class Tpi(TangleExpr):
  partition: partitions.Partition

  @override
  def build(self) -> tangles.Tangle:
    return tangles.t_pi(self.partition)

  def __str__(self) -> str:
    return f'Tpi[{self.partition}]'


@dataclasses.dataclass(frozen=True)
class _Generator(TangleExpr):
  k: int

  def __str__(self) -> str:
    return f'{type(self).__name__} {self.k}'


class S(_Generator):
  @override
  def build(self) -> tangles.Tangle:
    return tangles.s_tangle(self.k)


class U(_Generator):
  @override
  def build(self) -> tangles.Tangle:
    return tangles.u_tangle(self.k)


class Mult(_Generator):
  @override
  def build(self) -> tangles.Tangle:
    return tangles.mult(self.k)


class Rot(_Generator):
  @override
  def build(self) -> tangles.Tangle:
    return tangles.rotation(self.k)


class TrL(_Generator):
  @override
  def build(self) -> tangles.Tangle:
    return tangles.trace_left(self.k)

  @property
  @override
  def delta_exponent(self) -> int:
    return 1 - self.k


class TrR(_Generator):
  @override
  def build(self) -> tangles.Tangle:
    return tangles.trace_right(self.k)

  @property
  @override
  def delta_exponent(self) -> int:
    return 1 - self.k


@dataclasses.dataclass(frozen=True)
class Unit(TangleExpr):
  k: int = 1

  @override
  def build(self) -> tangles.Tangle:
    return tangles.unit(self.k)

  def __str__(self) -> str:
    return 'Unit' if self.k == 1 else f'Unit {self.k}'


@dataclasses.dataclass(frozen=True)
class M(TangleExpr):
  """Graded multiplication of degrees k and m."""

  k: int
  m: int

  @override
  def build(self) -> tangles.Tangle:
    return tangles.concatenation(self.k, self.m)

  def __str__(self) -> str:
    return f'M({self.k}, {self.m})'


@dataclasses.dataclass(frozen=True)
class E(TangleExpr):
  """Jones projection e_i of degree k, including its delta^-1 factor."""

  k: int
  i: int

  @override
  def build(self) -> tangles.Tangle:
    return tangles.jones_diagram(self.k, self.i)

  @property
  @override
  def delta_exponent(self) -> int:
    return -1

  def __str__(self) -> str:
    return f'E({self.k}, {self.i})'


@dataclasses.dataclass(frozen=True)
class Compose(TangleExpr):
  outer: TangleExpr
  disk: int
  inner: TangleExpr

  @property
  @override
  def children(self) -> tuple[TangleExpr, ...]:
    return (self.outer, self.inner)

  @override
  def check(self) -> None:
    super().check()
    outer = self.outer.build()
    if not 1 <= self.disk <= outer.n_disks:
      raise exceptions.DegreeMismatch(
        f'{self.outer} has {outer.n_disks} inner disks, no disk {self.disk}'
      )
    if outer.degree(self.disk) != self.inner.degree:
      raise exceptions.DegreeMismatch(
        f'Disk {self.disk} of {self.outer} has degree '
        f'{outer.degree(self.disk)}, {self.inner} has degree '
        f'{self.inner.degree}'
      )

  @override
  def build(self) -> tangles.Tangle:
    return tangles.compose(self.outer.build(), self.disk, self.inner.build())

  def __str__(self) -> str:
    return f'compose({self.outer}, {self.disk}, {self.inner})'


@dataclasses.dataclass(frozen=True)
class Free(TangleExpr):
  first: TangleExpr
  second: TangleExpr

  @property
  @override
  def children(self) -> tuple[TangleExpr, ...]:
    return (self.first, self.second)

  @override
  def check(self) -> None:
    super().check()
    if not tangles.is_free_pair(self.first.build(), self.second.build()):
      raise exceptions.NotFree(f'{self.first} and {self.second} are not free')

  @override
  def build(self) -> tangles.Tangle:
    return tangles.free_compose(self.first.build(), self.second.build())

  def __str__(self) -> str:
    return f'free({self.first}, {self.second})'


@dataclasses.dataclass(frozen=True)
class Inv(TangleExpr):
  expr: TangleExpr

  @property
  @override
  def children(self) -> tuple[TangleExpr, ...]:
    return (self.expr,)

  @override
  def build(self) -> tangles.Tangle:
    return tangles.involution(self.expr.build())

  def __str__(self) -> str:
    return f'inv({self.expr})'


_GENERATORS: Final[dict[str, type[_Generator]]] = {
  'S': S,
  'U': U,
  'Mult': Mult,
  'Rot': Rot,
  'TrL': TrL,
  'TrR': TrR,
}


@dataclasses.dataclass(frozen=True)
class Token:
  kind: str
  value: str
  line: int
  col: int


def tokenize(text: str) -> Iterator[Token]:
  """Splits text into tokens with 1-based source positions."""
  line, line_start = 1, 0
  for match in _TOKEN_PATTERN.finditer(text):
    kind = match.lastgroup
    col = match.start() - line_start + 1
    if kind == 'newline':
      line, line_start = line + 1, match.end()
      continue
    if kind == 'space':
      continue
    if kind == 'bad':
      raise exceptions.TangleSyntaxError(
        f'Unexpected character {match.group()!r}', line, col, 'a token'
      )
    yield Token(kind, match.group(), line, col)
  yield Token('end', '', line, len(text) - line_start + 1)


class _Parser:
  """Recursive-descent parser over a token list."""

  def __init__(self, text: str) -> None:
    self.tokens = list(tokenize(text))
    self.position = 0

  @property
  def current(self) -> Token:
    return self.tokens[self.position]

  def _fail(self, expected: str, token: Token | None = None) -> None:
    token = token or self.current
    found = repr(token.value) if token.kind != 'end' else 'end of input'
    raise exceptions.TangleSyntaxError(
      f'Unexpected {found}', token.line, token.col, expected
    )

  def _expect(self, value: str) -> Token:
    token = self.current
    if token.value != value or token.kind == 'end':
      self._fail(repr(value))
    self.position += 1
    return token

  def _integer(self) -> int:
    token = self.current
    if token.kind != 'int' or int(token.value) < 1:
      self._fail('a positive integer')
    self.position += 1
    return int(token.value)

  def parse(self) -> TangleExpr:
    expr = self._expr()
    if self.current.kind != 'end':
      self._fail('end of input')
    return expr

  def _expr(self) -> TangleExpr:
    token = self.current
    if token.kind != 'name' or token.value not in CONSTRUCTORS:
      self._fail('one of ' + ', '.join(CONSTRUCTORS))
    self.position += 1
    name = token.value
    if name in _GENERATORS:
      return _GENERATORS[name](self._integer())
    if name == 'Unit':
      return Unit(self._integer()) if self.current.kind == 'int' else Unit()
    if name == 'Tpi':
      return self._tpi(token)
    self._expect('(')
    if name in ('M', 'E'):
      first = self._integer()
      self._expect(',')
      index_token = self.current
      second = self._integer()
      if name == 'E' and second >= first:
        self._fail(f'an index below {first}', index_token)
      result = M(first, second) if name == 'M' else E(first, second)
    elif name == 'compose':
      outer = self._expr()
      self._expect(',')
      disk = self._integer()
      self._expect(',')
      result = Compose(outer, disk, self._expr())
    elif name == 'free':
      first = self._expr()
      self._expect(',')
      result = Free(first, self._expr())
    else:
      result = Inv(self._expr())
    self._expect(')')
    return result

  def _tpi(self, start: Token) -> Tpi:
    self._expect('[')
    blocks = []
    while True:
      self._expect('{')
      block = [self._integer()]
      while self.current.value == ',':
        self.position += 1
        block.append(self._integer())
      self._expect('}')
      blocks.append(block)
      if self.current.value != ',':
        break
      self.position += 1
    self._expect(']')
    text = ','.join('{' + ','.join(map(str, b)) + '}' for b in blocks)
    try:
      partition = partitions.Partition.from_string(text)
    except exceptions.PartitionSyntaxError as e:
      raise exceptions.TangleSyntaxError(
        str(e), start.line, start.col, 'a partition of 1..n'
      ) from e
    return Tpi(partition)


@functools.lru_cache(maxsize=256)
def parse(text: str) -> TangleExpr:
  """Parses and type-checks a tangle expression.

  Raises:
    TangleSyntaxError: On malformed text, with the source position.
    DegreeMismatch: When a compose node glues disks of different degrees.
    NotFree: When a free node fails the freeness criterion.
  """
  expr = _Parser(text).parse()
  expr.check()
  return expr


def normalize(text: str) -> str:
  """Canonical spelling of an expression."""
  return str(parse(text))
