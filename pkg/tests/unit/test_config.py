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

from __future__ import annotations

import pydantic
import pytest

from freepa import config


class TestConfig:
  def test_defaults(self):
    settings = config.Config()
    assert settings.max_n == 5
    assert settings.output_format == config.OutputFormat.JSON
    assert settings.concrete_rank_cap == 3

  def test_values_are_read_from_prefixed_environment(self, monkeypatch):
    monkeypatch.setenv('FREEPA_MAX_N', '3')
    monkeypatch.setenv('FREEPA_OUTPUT_FORMAT', 'table')
    monkeypatch.setenv('FREEPA_SUITE_CAPS', '{"gpa": 2}')
    settings = config.Config()
    assert settings.max_n == 3
    assert settings.output_format == config.OutputFormat.TABLE
    assert settings.suite_caps == {'gpa': 2}

  @pytest.mark.parametrize('field', ['max_n', 'nc_cap', 'loop_degree_cap'])
  def test_non_positive_caps_raise_validation_error(self, field):
    with pytest.raises(pydantic.ValidationError, match='must be positive'):
      config.Config(**{field: 0})

  def test_non_positive_suite_cap_raises_validation_error(self):
    with pytest.raises(pydantic.ValidationError, match='suite gpa'):
      config.Config(suite_caps={'gpa': -1})

  def test_cap_for_prefers_suite_override(self):
    settings = config.Config(max_n=4, suite_caps={'tangles': 2})
    assert settings.cap_for('tangles') == 2
    assert settings.cap_for('gpa') == 4

  def test_caps_lists_suite_overrides(self):
    settings = config.Config(suite_caps={'moments': 6})
    assert settings.caps['moments.max_n'] == 6
    assert settings.caps['max_n'] == 5
