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

import pytest

pytest.importorskip('fastapi')

from fastapi import testclient  # noqa: E402

from freepa.entrypoints import server  # noqa: E402


@pytest.fixture
def client():
  return testclient.TestClient(server.app)


class TestServer:
  def test_dims_of_named_profiles(self, client):
    response = client.post(
      '/dims', json={'first': 'tlj', 'second': 'tlj', 'n': 3}
    )
    assert response.status_code == 200
    assert response.json() == {
      'tensor': ['1', '4', '25'],
      'free': ['1', '3', '12'],
      'boolean': ['1', '2', '7'],
      'interval_sums': ['1', '3', '12'],
    }

  def test_dims_of_inline_profile(self, client):
    response = client.post(
      '/dims',
      json={
        'first': {'name': 'point', 'moments': [2, 4]},
        'second': 'tlj',
        'n': 2,
      },
    )
    assert response.json()['free'] == ['2', '8']

  def test_impossible_profile_is_unprocessable(self, client):
    response = client.post(
      '/dims',
      json={
        'first': {'name': 'bad', 'moments': [2, 3]},
        'second': 'tlj',
        'n': 2,
      },
    )
    assert response.status_code == 422
    assert 'Boolean cumulant' in response.json()['detail']

  def test_verify_runs_suite(self, client):
    response = client.post(
      '/verify', json={'suites': ['partitions'], 'max_n': 3}
    )
    assert response.status_code == 200
    assert response.json()['passed']
