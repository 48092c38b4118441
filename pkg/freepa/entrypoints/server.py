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

"""HTTP surface of freepa; install with the `server` extra."""

from __future__ import annotations

import fastapi
import pydantic

import freepa
from freepa import exceptions, freeprod
from freepa.adapters import codecs

settings = freepa.Config()

app = fastapi.FastAPI()


class DimsRequest(pydantic.BaseModel):
  """Two dimension profiles, inline or by name, and the order N."""

  first: codecs.ProfileModel | str
  second: codecs.ProfileModel | str
  n: pydantic.PositiveInt


class DimsResponse(pydantic.BaseModel):
  tensor: list[str]
  free: list[str]
  boolean: list[str]
  interval_sums: list[str]


def _profile(
  profile: codecs.ProfileModel | str, n: int
) -> freeprod.DimensionProfile:
  if isinstance(profile, str):
    return freeprod.DimensionProfile.named(profile, n)
  return freeprod.DimensionProfile(profile.to_profile())


@app.post('/verify')
def verify(request: freepa.VerifyRequest) -> freepa.VerifyResponse:
  """Runs verification suites."""
  return freepa.Verifier(settings).verify(request)


@app.post('/dims')
def dims(request: DimsRequest) -> DimsResponse:
  """Dimensions of the tensor and free products of two profiles."""
  try:
    first = _profile(request.first, request.n)
    second = _profile(request.second, request.n)
    decomposition = freeprod.boolean_decomposition_dims(
      first, second, request.n
    )
    return DimsResponse(
      tensor=codecs.format_numbers(
        freeprod.tensor_dims(first, second, request.n)
      ),
      free=codecs.format_numbers(
        freeprod.free_product_dims(first, second, request.n)
      ),
      boolean=codecs.format_numbers(decomposition.dims),
      interval_sums=codecs.format_numbers(decomposition.interval_sums),
    )
  except exceptions.FreepaError as e:
    raise fastapi.HTTPException(status_code=422, detail=str(e)) from e
