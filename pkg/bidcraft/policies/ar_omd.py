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
"""Optimistic exponential weights restarted whenever the rival bid switches."""

import dataclasses
import math
from typing import Optional

from absl import logging
import numpy as np
from scipy import special

from bidcraft import auction_core
from bidcraft.policies import base


@dataclasses.dataclass
class AROMDState:
  """Mutable state of the switch-restarted optimistic forecaster.

  Attributes:
    cumulative_rewards: per-expert rewards summed over the open batch.
    learning_rate: eta.
    last_rival_bid: m_{t-1}, None before the first round.
    optimism_vector: the optimism used for the latest proposal.
    batch_index: zero-based index of the open batch.
    batch_length: rounds observed in the open batch.
    switch_tolerance: minimum rival bid change that closes a batch.
  """
  cumulative_rewards: np.ndarray
  learning_rate: float
  last_rival_bid: Optional[float] = None
  optimism_vector: Optional[np.ndarray] = None
  batch_index: int = 0
  batch_length: int = 0
  switch_tolerance: float = auction_core.SWITCH_TOLERANCE


class AROMDPolicy(base.ExpertPolicy):
  """Optimistic mirror descent with the negative-entropy regularizer.

  Plays p_{t,i} proportional to exp(eta * (R_i + o_{t,i})), where R_i sums
  expert i's rewards over the open batch and o_{t,i} = r(min{v_t, tau_i};
  v_t, m_{t-1}) guesses this round's reward from the last rival bid. A batch
  closes when the rival bid moves by at least the switch tolerance.
  """

  def __init__(
      self,
      horizon: int,
      epsilon: Optional[float] = None,
      learning_rate: Optional[float] = None,
      switch_tolerance: float = auction_core.SWITCH_TOLERANCE,
      seed: Optional[int] = None,
      stream: int = 0):
    if epsilon is None:
      epsilon = min(1.0, horizon ** -0.9)
    super(AROMDPolicy, self).__init__(
        name='ar_omd', horizon=horizon, epsilon=epsilon, seed=seed,
        stream=stream)
    if learning_rate is None:
      learning_rate = math.sqrt(0.9 * math.log(horizon))
    if learning_rate < 0:
      raise ValueError('learning_rate must be nonnegative, got {!r}'.format(
          learning_rate))
    if switch_tolerance < 0:
      raise ValueError('switch_tolerance must be nonnegative, got {!r}'.format(
          switch_tolerance))
    self._learning_rate = learning_rate
    self._switch_tolerance = switch_tolerance
    self._reset()

  def _reset(self) -> None:
    self.state = AROMDState(
        cumulative_rewards=np.zeros(self.num_experts),
        learning_rate=self._learning_rate,
        switch_tolerance=self._switch_tolerance)

  def optimism(self, valuation: float) -> np.ndarray:
    """o_{t,i}; all zeros before any rival bid has been seen."""
    if self.state.last_rival_bid is None:
      return np.zeros(self.num_experts)
    bids = self.grid.bids(valuation)
    return np.where(bids >= self.state.last_rival_bid, valuation - bids, 0.0)

  def _expert_distribution(self, valuation: float) -> np.ndarray:
    state = self.state
    state.optimism_vector = self.optimism(valuation)
    scores = state.cumulative_rewards + state.optimism_vector
    distribution = special.softmax(state.learning_rate * scores)
    if not np.all(np.isfinite(distribution)):
      raise FloatingPointError(
          'Non-finite weights in batch {}'.format(state.batch_index))
    return distribution

  def _switched(self, rival: float) -> bool:
    state = self.state
    if state.batch_length == 0 or state.last_rival_bid is None:
      return False
    change = abs(rival - state.last_rival_bid)
    if state.switch_tolerance == 0:
      return change > 0
    return change >= state.switch_tolerance

  def _update(self, auction_round: auction_core.AuctionRound,
              proposal: base.Proposal) -> None:
    del proposal
    state = self.state
    rival = auction_round.rival_high_bid
    if self._switched(rival):
      # The switching round closes its batch; the next round starts fresh.
      if self._record_restart():
        logging.vlog(1, '%s closes batch %d at round %d', self.name,
                     state.batch_index, self.round_index)
      state.cumulative_rewards = np.zeros(self.num_experts)
      state.batch_index += 1
      state.batch_length = 0
    else:
      state.cumulative_rewards = (
          state.cumulative_rewards + self.expert_rewards(auction_round))
      state.batch_length += 1
    state.last_rival_bid = rival
