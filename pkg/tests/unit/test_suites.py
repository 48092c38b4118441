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

from freepa import config, gpa
from freepa.plugins.suites import gpa as gpa_suite
from freepa.plugins.suites import kreweras, moments


class TestKrewerasSuite:
  def test_ranges_do_not_follow_max_n(self):
    checks = list(kreweras.KrewerasSuite(config.Config(max_n=2)).checks())
    assert checks[0].passed
    assert checks[0].detail == '6917 instances'
    surgery = next(c for c in checks if c.name == 'surgery identity')
    assert surgery.passed
    assert surgery.detail.endswith('1728 cases up to n=7')


class TestMomentsSuite:
  def test_random_profiles_pass_all_checks(self):
    report = moments.MomentsSuite(config.Config(max_n=2)).run()
    assert report.passed
    names = [check.name for check in report.checks]
    assert 'random profiles are integer and Hankel PSD' in names


class TestGpaSuite:
  def test_inner_products_agree_on_random_vectors(self):
    suite = gpa_suite.GpaSuite(config.Config(max_n=3))
    check = suite._inner_products(gpa.AlgebraSpec.of(1, 2), 3)
    assert check.passed
    assert check.detail == f'{gpa_suite.RANDOM_PAIRS} instances'

  def test_far_commutation_needs_degree_four(self):
    suite = gpa_suite.GpaSuite(config.Config(max_n=3))
    assert not list(suite._far_commutation())

  def test_far_commutation_holds(self):
    suite = gpa_suite.GpaSuite(config.Config(max_n=4))
    assert all(check.passed for check in suite._far_commutation())
