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

"""JSON models for algebra specs, profiles and loop vectors.

Rationals and surds travel as strings (`"2/5"`, `"1/2*sqrt(2)"`) so that
output parses back losslessly.
"""

from __future__ import annotations

import json
import pathlib
from collections.abc import Sequence
from fractions import Fraction
from typing import Union

import pydantic

from freepa import exceptions, gpa, moments
from freepa.numeric import Surd

Number = Union[int, str]


def format_number(value: Fraction | Surd | int) -> str:
  return str(value)


def format_numbers(values: Sequence[Fraction | Surd | int]) -> list[str]:
  return [format_number(value) for value in values]


class AlgebraSpecModel(pydantic.BaseModel):
  """`{"name": "C2", "blocks": [1, 1]}`."""

  name: str
  blocks: list[pydantic.PositiveInt] = pydantic.Field(min_length=1)

  def to_spec(self) -> gpa.AlgebraSpec:
    return gpa.AlgebraSpec(self.name, tuple(self.blocks))

  @classmethod
  def from_spec(cls, spec: gpa.AlgebraSpec) -> AlgebraSpecModel:
    return cls(name=spec.name, blocks=list(spec.blocks))


class ProfileModel(pydantic.BaseModel):
  """`{"name": "catalan", "moments": ["1", "2", "5"]}`."""

  name: str
  moments: list[str] = pydantic.Field(min_length=1)

  @pydantic.field_validator('moments', mode='before')
  @classmethod
  def _as_strings(cls, values: list[Number]) -> list[str]:
    result = []
    for value in values:
      try:
        result.append(str(Fraction(str(value))))
      except ValueError as e:
        raise ValueError(f'Moment {value!r} is not a rational') from e
    return result

  def to_profile(self) -> moments.MomentProfile:
    return moments.MomentProfile(
      self.name, tuple(Fraction(value) for value in self.moments)
    )

  @classmethod
  def from_profile(cls, profile: moments.MomentProfile) -> ProfileModel:
    return cls(name=profile.name, moments=format_numbers(profile.moments))


class TermModel(pydantic.BaseModel):
  loop: list[tuple[int, int]]
  coeff: str


class LoopVectorModel(pydantic.BaseModel):
  """`{"degree": 1, "terms": [{"loop": [[1, 1], [1, 1]], "coeff": "1"}]}`."""

  degree: pydantic.NonNegativeInt
  terms: list[TermModel] = pydantic.Field(default_factory=list)

  def to_vector(self) -> gpa.LoopVector:
    vector = gpa.LoopVector(self.degree)
    for term in self.terms:
      vector = vector + gpa.LoopVector(
        self.degree, {gpa.Loop(tuple(term.loop)): Surd.from_string(term.coeff)}
      )
    return vector

  @classmethod
  def from_vector(cls, vector: gpa.LoopVector) -> LoopVectorModel:
    return cls(
      degree=vector.degree,
      terms=[
        TermModel(loop=list(loop.edges), coeff=str(value))
        for loop, value in vector
      ],
    )


def _read(path: str | pathlib.Path) -> object:
  try:
    return json.loads(pathlib.Path(path).read_text(encoding='utf-8'))
  except (OSError, json.JSONDecodeError) as e:
    raise exceptions.FreepaError(f'Cannot read JSON from {path}: {e}') from e


def _validate(model: type[pydantic.BaseModel], data: object, source: str):
  try:
    return model.model_validate(data)
  except pydantic.ValidationError as e:
    raise exceptions.FreepaError(
      f'Invalid {model.__name__} in {source}: {e}'
    ) from e


def load_spec(source: str) -> gpa.AlgebraSpec:
  """Reads a spec file, or parses inline block sizes like `1,2`."""
  if pathlib.Path(source).is_file():
    return _validate(AlgebraSpecModel, _read(source), source).to_spec()
  try:
    blocks = tuple(int(part) for part in source.split(','))
  except ValueError as e:
    raise exceptions.FreepaError(
      f'{source!r} is neither a spec file nor block sizes like 1,2'
    ) from e
  return gpa.AlgebraSpec.of(*blocks)


def load_profile(source: str, n: int) -> moments.MomentProfile:
  """Reads a profile file; missing files fall back to the named profile.

  `catalan.json` resolves to the built-in catalan profile when no such file
  exists.
  """
  path = pathlib.Path(source)
  if path.is_file():
    return _validate(ProfileModel, _read(path), source).to_profile()
  return moments.named_profile(path.name.removesuffix('.json'), n)


def load_vectors(source: str) -> list[gpa.LoopVector]:
  """Reads a loop vector or a list of loop vectors."""
  data = _read(source)
  items = data if isinstance(data, list) else [data]
  return [
    _validate(LoopVectorModel, item, source).to_vector() for item in items
  ]
