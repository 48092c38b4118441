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

"""Runs verification suites and collects their reports.

Suites are plugins registered under the `freepa_suites` entry point group.
Each suite yields checks; a failing check carries the smallest instance that
witnesses the failure, rendered in the text formats of the modules.
"""

from __future__ import annotations

import abc
import logging
from collections.abc import Callable, Iterable, Iterator, Sequence
from typing import Any, ClassVar, TypeVar

import pydantic
from typing_extensions import Self

from freepa import config as freepa_config

_T = TypeVar('_T')


class Check(pydantic.BaseModel):
  """Outcome of a single property check."""

  name: str
  passed: bool
  detail: str = ''
  witness: str | None = None


class SuiteReport(pydantic.BaseModel):
  """Checks of one suite together with the seed and caps used."""

  suite: str
  seed: int
  caps: dict[str, int]
  checks: list[Check] = pydantic.Field(default_factory=list)

  @property
  def passed(self) -> bool:
    return all(check.passed for check in self.checks)

  @property
  def failures(self) -> list[Check]:
    return [check for check in self.checks if not check.passed]


class VerifyRequest(pydantic.BaseModel):
  suites: list[str] = pydantic.Field(default_factory=lambda: ['all'])
  max_n: pydantic.PositiveInt | None = None
  seed: int | None = None


class VerifyResponse(pydantic.BaseModel):
  passed: bool
  reports: list[SuiteReport]


class Suite(abc.ABC):
  """Group of related property checks.

  Attributes:
    name: Name the suite is registered under.
    config: Caps and seed of the run.
  """

  name: ClassVar[str] = ''

  def __init__(self, config: freepa_config.Config | None = None) -> None:
    """Initializes Suite."""
    self.config = config or freepa_config.Config()

  @property
  def max_n(self) -> int:
    return self.config.cap_for(self.name)

  @abc.abstractmethod
  def checks(self) -> Iterator[Check]:
    """Yields checks of the suite."""

  def run(self) -> SuiteReport:
    report = SuiteReport(
      suite=self.name, seed=self.config.seed, caps=self.config.caps
    )
    logging.info('Running suite %s (max_n=%d)', self.name, self.max_n)
    for check in self.checks():
      if not check.passed:
        logging.error(
          'Suite %s: %s failed: %s; witness %s',
          self.name,
          check.name,
          check.detail,
          check.witness,
        )
      report.checks.append(check)
    return report


def exhaustive(
  name: str,
  instances: Iterable[_T],
  predicate: Callable[[_T], bool],
  render: Callable[[_T], str] = str,
) -> Check:
  """Checks predicate on instances given in increasing size.

  Returns:
    A passing check with the number of instances, or a failing check with
    the first, hence smallest, counterexample.
  """
  count = 0
  for instance in instances:
    count += 1
    if not predicate(instance):
      return Check(
        name=name,
        passed=False,
        detail=f'fails after {count - 1} passing instances',
        witness=render(instance),
      )
  return Check(name=name, passed=True, detail=f'{count} instances')


def expect(name: str, actual: Any, expected: Any) -> Check:
  """Compares a computed value against a known one."""
  if actual == expected:
    return Check(name=name, passed=True, detail=f'{actual}')
  return Check(
    name=name,
    passed=False,
    detail=f'expected {expected}',
    witness=f'{actual}',
  )


class Verifier:
  """Builds and runs a verification run."""

  def __init__(self, config: freepa_config.Config | None = None) -> None:
    """Initializes Verifier."""
    self.config = config or freepa_config.Config()
    self._suites: list[str] = []
    self._reports: list[SuiteReport] = []

  def with_config(self, config: freepa_config.Config) -> Self:
    self.config = config
    return self

  def with_suites(self, *names: str) -> Self:
    from freepa.plugins import discovery

    for name in names:
      if name == 'all':
        self._suites.extend(discovery.list_suites())
      else:
        self._suites.append(name)
    return self

  def run(self) -> Self:
    from freepa.plugins import discovery

    if not self._suites:
      self.with_suites('all')
    for name in dict.fromkeys(self._suites):
      suite_type = discovery.load_suite(name)
      self._reports.append(suite_type(self.config).run())
    return self

  @property
  def reports(self) -> Sequence[SuiteReport]:
    return tuple(self._reports)

  def report(self) -> VerifyResponse:
    return VerifyResponse(
      passed=all(report.passed for report in self._reports),
      reports=self._reports,
    )

  def verify(self, request: VerifyRequest) -> VerifyResponse:
    """Executes a verification request."""
    updates = {}
    if request.max_n is not None:
      updates['max_n'] = request.max_n
    if request.seed is not None:
      updates['seed'] = request.seed
    if updates:
      self.config = self.config.model_copy(update=updates)
    return self.with_suites(*request.suites).run().report()
