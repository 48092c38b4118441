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

"""Discovers available verification suites."""

from __future__ import annotations

import importlib
import inspect
from importlib.metadata import entry_points
from typing import Final

from freepa import exceptions, verification

BUILTIN_SUITES: Final[dict[str, str]] = {
  'partitions': 'freepa.plugins.suites.partitions',
  'kreweras': 'freepa.plugins.suites.kreweras',
  'moments': 'freepa.plugins.suites.moments',
  'tangles': 'freepa.plugins.suites.tangles',
  'gpa': 'freepa.plugins.suites.gpa',
  'freeprod': 'freepa.plugins.suites.freeprod',
}


def _registered() -> dict[str, str]:
  """Suite modules by name; entry points override the builtin ones."""
  modules = dict(BUILTIN_SUITES)
  for suite in entry_points(group='freepa_suites'):
    modules[suite.name] = suite.value
  return modules


def load_suite(suite_name: str) -> type[verification.Suite]:
  """Locates suite with a specified name.

  Args:
    suite_name: Name of a suite to load.

  Returns:
    Suite class defined in the registered module.

  Raises:
    FreepaError: If suite not found or cannot be loaded.
  """
  modules = _registered()
  if module_name := modules.get(suite_name):
    try:
      module = importlib.import_module(module_name)
    except ModuleNotFoundError as e:
      raise exceptions.FreepaError(
        f'Failed to import suite {suite_name}'
      ) from e
    for _, obj in inspect.getmembers(module, inspect.isclass):
      if (
        issubclass(obj, verification.Suite)
        and not inspect.isabstract(obj)
        and obj.name == suite_name
      ):
        return obj
  available_suites = ', '.join(sorted(modules))
  raise exceptions.FreepaError(
    f'Unsupported suite <{suite_name}>, '
    f'select one of available: {available_suites}'
  )


def list_suites() -> list[str]:
  """Finds all available suites."""
  return list(_registered())
