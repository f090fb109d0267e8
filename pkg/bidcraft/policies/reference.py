# coding=utf-8
# Copyright 2026 The Bidcraft Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Lint as: python3
"""Deterministic reference policies used as sanity rows."""

from typing import Optional

import numpy as np

from bidcraft import auction_core
from bidcraft.policies import base

_POINT_MASS = np.ones(1)


class ConstantBidPolicy(base.BasePolicy):
  """Bids the same amount every round."""

  def __init__(
      self,
      horizon: int,
      bid: float = 0.0,
      seed: Optional[int] = None,
      stream: int = 0):
    super(ConstantBidPolicy, self).__init__(
        name='constant', horizon=horizon, seed=seed, stream=stream)
    if not 0.0 <= bid <= 1.0:
      raise ValueError('bid must lie in [0, 1], got {!r}'.format(bid))
    self.bid = float(bid)

  def _propose(self, valuation: float,
               rival_high_bid: Optional[float]) -> base.Proposal:
    return base.Proposal(self.bid, _POINT_MASS, np.array([self.bid]), 0)

  def _update(self, auction_round: auction_core.AuctionRound,
              proposal: base.Proposal) -> None:
    pass

  def _reset(self) -> None:
    pass


class ClairvoyantPolicy(base.BasePolicy):
  """Plays the per-round optimal bid, which needs the current rival bid.

  Its dynamic regret is zero by definition; it is not an admissible learner.
  """

  requires_rival_bid = True

  def __init__(
      self,
      horizon: int,
      seed: Optional[int] = None,
      stream: int = 0):
    super(ClairvoyantPolicy, self).__init__(
        name='oracle', horizon=horizon, seed=seed, stream=stream)

  def _propose(self, valuation: float,
               rival_high_bid: Optional[float]) -> base.Proposal:
    if rival_high_bid is None:
      raise ValueError('{} needs the current rival_high_bid.'.format(self.name))
    bid = auction_core.optimal_bid(
        auction_core.AuctionRound(valuation, rival_high_bid))
    return base.Proposal(bid, _POINT_MASS, np.array([bid]), 0)

  def _update(self, auction_round: auction_core.AuctionRound,
              proposal: base.Proposal) -> None:
    pass

  def _reset(self) -> None:
    pass
