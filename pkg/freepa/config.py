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

"""Module for defining configuration of verification runs."""

from __future__ import annotations

import enum

import pydantic
from pydantic_settings import BaseSettings, SettingsConfigDict


class OutputFormat(str, enum.Enum):
  JSON = 'json'
  TABLE = 'table'


class Config(BaseSettings):
  """Specifies caps and defaults of freepa.

  Values are read from FREEPA_* environment variables, e.g.
  export FREEPA_MAX_N=4.

  Attributes:
    max_n: Default order cap of every verification suite.
    suite_caps: Per-suite overrides of max_n.
    spec_paths: Algebra spec JSON files used by the gpa suites.
    output_format: How the CLI prints results.
    seed: Seed of randomized property tests.
    nc_cap: Largest n for which NC(n) is enumerated.
    all_partitions_cap: Largest n for which all partitions are enumerated.
    loop_degree_cap: Largest degree of loop bases.
    loop_dimension_cap: Largest algebra dimension d for loop bases.
    group_order_cap: Largest permutation group order that is enumerated.
    concrete_rank_cap: Largest degree of concrete free product ranks.
  """

  model_config = SettingsConfigDict(env_prefix='FREEPA_')

  max_n: int = 5
  suite_caps: dict[str, int] = pydantic.Field(default_factory=dict)
  spec_paths: list[str] = pydantic.Field(default_factory=list)
  output_format: OutputFormat = OutputFormat.JSON
  seed: int = 42
  nc_cap: int = 14
  all_partitions_cap: int = 10
  loop_degree_cap: int = 4
  loop_dimension_cap: int = 9
  group_order_cap: int = 3628800
  concrete_rank_cap: int = 3

  @pydantic.field_validator(
    'max_n',
    'nc_cap',
    'all_partitions_cap',
    'loop_degree_cap',
    'loop_dimension_cap',
    'group_order_cap',
    'concrete_rank_cap',
  )
  @classmethod
  def _positive(cls, value: int) -> int:
    if value < 1:
      raise ValueError(f'Caps must be positive, got {value}')
    return value

  @pydantic.field_validator('suite_caps')
  @classmethod
  def _positive_suite_caps(cls, value: dict[str, int]) -> dict[str, int]:
    for suite, cap in value.items():
      if cap < 1:
        raise ValueError(f'Cap of suite {suite} must be positive, got {cap}')
    return value

  def cap_for(self, suite: str) -> int:
    return self.suite_caps.get(suite, self.max_n)

  @property
  def caps(self) -> dict[str, int]:
    return {
      'max_n': self.max_n,
      'nc_cap': self.nc_cap,
      'all_partitions_cap': self.all_partitions_cap,
      'loop_degree_cap': self.loop_degree_cap,
      'loop_dimension_cap': self.loop_dimension_cap,
      'group_order_cap': self.group_order_cap,
      'concrete_rank_cap': self.concrete_rank_cap,
      **{f'{suite}.max_n': cap for suite, cap in self.suite_caps.items()},
    }
