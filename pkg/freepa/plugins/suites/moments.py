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

"""Checks of cumulant transforms and the multiplicative free convolution."""

from __future__ import annotations

from collections.abc import Iterator

from typing_extensions import override

from freepa import moments, verification
from freepa.verification import Check

RANDOM_PROFILES = 50


class MomentsSuite(verification.Suite):
  name = 'moments'

  @override
  def checks(self) -> Iterator[Check]:
    n = min(self.max_n + 3, 8)
    profiles = [
      moments.random_positive_profile(self.config.seed + i, n)
      for i in range(RANDOM_PROFILES)
    ]
    yield verification.exhaustive(
      'Boolean cumulants of boxtimes are Kreweras sums',
      [(a, b) for a, b in zip(profiles, profiles[1:] + profiles[:1])]
      + [(moments.catalan(n), moments.catalan(n))],
      lambda pair: moments.boolean_conv_check(*pair, n).equal,
      lambda pair: f'{pair[0].name}: {pair[0].moments} and {pair[1].moments}',
    )
    yield verification.exhaustive(
      'moments round-trip through free and Boolean cumulants',
      profiles,
      lambda p: all(
        moments.moments_from_cumulants(
          moments.cumulants_from_moments(p, kind)
        ).moments
        == p.moments
        for kind in moments.CumulantKind
      ),
      lambda p: f'{p.name}: {p.moments}',
    )
    yield verification.exhaustive(
      'random profiles are integer and Hankel PSD',
      profiles,
      lambda p: all(m.denominator == 1 for m in p.moments)
      and moments.hankel_is_psd(p),
      lambda p: f'{p.name}: {p.moments}',
    )
    fuss = min(self.max_n, 5)
    yield verification.expect(
      'catalan boxtimes catalan is Fuss-Catalan',
      moments.free_mult_conv(
        moments.catalan(fuss), moments.catalan(fuss), fuss
      ).moments,
      moments.fuss_catalan(fuss).moments,
    )
    yield verification.expect(
      'fixed points of S_3 have Bell moments',
      moments.perm_group_character_moments(
        [(2, 1, 3), (2, 3, 1)], 3, cap=self.config.group_order_cap
      ).moments,
      moments.bell(3).moments,
    )
