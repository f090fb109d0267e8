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
"""Best-of-both-worlds combiner over two bidding policies."""

import dataclasses
import math
from typing import List, Optional

import numpy as np

from bidcraft import auction_core
from bidcraft.policies import ar_omd
from bidcraft.policies import base
from bidcraft.policies import prod


@dataclasses.dataclass
class BOBWState:
  """Meta-weights of the combiner.

  Attributes:
    weight_a: w^A, multiplied by (1 + eta * delta_t) every round.
    weight_b: w^B, fixed at its initial value.
    learning_rate: eta.
    log_weight_a: running sum of log(1 + eta * delta_t).
    reward_gaps: delta_t = r(b^A) - r(b^B) for every observed round.
  """
  weight_a: float
  weight_b: float
  learning_rate: float
  log_weight_a: float = 0.0
  reward_gaps: List[float] = dataclasses.field(default_factory=list)

  @property
  def mix_probability(self) -> float:
    return self.weight_a / (self.weight_a + self.weight_b)


class BOBWPolicy(base.BasePolicy):
  """Plays child A with probability w^A / (w^A + w^B), otherwise child B.

  By default A is the adaptive-restart Prod forecaster, which handles slowly
  drifting rival bids, and B is the switch-restarted optimistic forecaster,
  which handles few abrupt switches. Both children see every round.
  """

  def __init__(
      self,
      horizon: int,
      policy_a: Optional[base.BasePolicy] = None,
      policy_b: Optional[base.BasePolicy] = None,
      learning_rate: Optional[float] = None,
      seed: Optional[int] = None,
      stream: int = 0):
    super(BOBWPolicy, self).__init__(
        name='bobw', horizon=horizon, seed=seed, stream=stream)
    if policy_a is None:
      policy_a = prod.ARProdPolicy(horizon, seed=seed, stream=stream + 1)
    if policy_b is None:
      policy_b = ar_omd.AROMDPolicy(horizon, seed=seed, stream=stream + 2)
    self.policy_a = policy_a
    self.policy_b = policy_b
    if learning_rate is None:
      learning_rate = 0.5 * math.sqrt(math.log(horizon) / horizon)
    if not 0.0 <= learning_rate < 1.0:
      raise ValueError('learning_rate must lie in [0, 1), got {!r}'.format(
          learning_rate))
    self._learning_rate = learning_rate
    self._children_proposals = None
    self._reset()

  @property
  def requires_rival_bid(self) -> bool:
    return self.policy_a.requires_rival_bid or self.policy_b.requires_rival_bid

  def reset(self) -> None:
    super(BOBWPolicy, self).reset()
    self.policy_a.reset()
    self.policy_b.reset()

  def _reset(self) -> None:
    self.state = BOBWState(
        weight_a=self._learning_rate,
        weight_b=1.0 - self._learning_rate,
        learning_rate=self._learning_rate)
    self._children_proposals = None

  def _propose(self, valuation: float,
               rival_high_bid: Optional[float]) -> base.Proposal:
    proposal_a = self.policy_a.propose(valuation, rival_high_bid)
    proposal_b = self.policy_b.propose(valuation, rival_high_bid)
    self._children_proposals = (proposal_a, proposal_b)
    mix = self.state.mix_probability
    distribution = np.concatenate([mix * proposal_a.distribution,
                                   (1.0 - mix) * proposal_b.distribution])
    bids = np.concatenate([proposal_a.bids, proposal_b.bids])
    if self._rng.random() < mix:
      return base.Proposal(proposal_a.bid, distribution, bids, proposal_a.index)
    return base.Proposal(proposal_b.bid, distribution, bids,
                         proposal_a.bids.size + proposal_b.index)

  def _update(self, auction_round: auction_core.AuctionRound,
              proposal: base.Proposal) -> None:
    del proposal
    proposal_a, proposal_b = self._children_proposals
    self._children_proposals = None
    self.policy_a.observe(auction_round)
    self.policy_b.observe(auction_round)
    gap = (auction_core.reward(proposal_a.bid, auction_round) -
           auction_core.reward(proposal_b.bid, auction_round))
    factor = 1.0 + self.state.learning_rate * gap
    self.state.weight_a *= factor
    self.state.log_weight_a += math.log(factor)
    self.state.reward_gaps.append(gap)
