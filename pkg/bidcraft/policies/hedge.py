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
"""Exponential weights over the bid grid, with and without restarts."""

import math
from typing import Optional

from absl import logging
import numpy as np
from scipy import special

from bidcraft import auction_core
from bidcraft import utils
from bidcraft.policies import base


def hedge_step(weights: np.ndarray, rewards: np.ndarray,
               learning_rate: float) -> np.ndarray:
  """Returns p_{t+1} proportional to p_t * exp(learning_rate * r_t).

  Computed in log space, so zero weights stay at zero and large exponents
  cannot overflow. A [batch, experts] `weights` matrix updates every row.

  Args:
    weights: the current distribution over experts, or one per row.
    rewards: the experts' rewards this round, shaped like `weights`.
    learning_rate: eta > 0.

  Returns:
    The updated distribution.
  """
  if learning_rate <= 0:
    raise ValueError('learning_rate must be positive, got {!r}'.format(
        learning_rate))
  with np.errstate(divide='ignore'):
    logits = np.log(weights) + learning_rate * np.asarray(rewards)
  updated = special.softmax(logits, axis=-1)
  if not np.all(np.isfinite(updated)):
    raise FloatingPointError('Hedge produced non-finite weights.')
  return updated


def restart_batch_size(horizon: int, variation_budget: float,
                       scale: float = 1.0) -> int:
  """Batch size ceil(scale * (T / V)^(2/3)), clipped to [1, T].

  Args:
    horizon: T.
    variation_budget: V_T + V_T^v, the combined rival bid and valuation
      variation. Zero means one batch.
    scale: the constant in front of the rate.

  Returns:
    The batch size.
  """
  if variation_budget < 0:
    raise ValueError('variation_budget must be nonnegative, got {!r}'.format(
        variation_budget))
  if variation_budget == 0:
    return horizon
  size = math.ceil(scale * (horizon / variation_budget) ** (2.0 / 3.0))
  return int(min(max(size, 1), horizon))


class RestartHedgePolicy(base.ExpertPolicy):
  """Hedge over the grid experts, reset every batch_size rounds."""

  def __init__(
      self,
      horizon: int,
      epsilon: Optional[float] = None,
      batch_size: Optional[int] = None,
      variation_budget: Optional[float] = None,
      batch_scale: float = 1.0,
      learning_rate: Optional[float] = None,
      seed: Optional[int] = None,
      stream: int = 0,
      name: str = 'restart_hedge'):
    """Create a restarted Hedge policy.

    Args:
      horizon: the number of rounds T.
      epsilon: grid precision, defaults to 4 / sqrt(T).
      batch_size: rounds between restarts. Takes precedence over
        `variation_budget`.
      variation_budget: V_T + V_T^v, used to tune the batch size when
        `batch_size` is not given. With neither, Hedge never restarts.
      batch_scale: constant in front of the tuned batch size.
      learning_rate: eta, defaults to sqrt(8 ln N / batch_size).
      seed: the replication seed.
      stream: the random stream key.
      name: the name of this policy.
    """
    if epsilon is None:
      epsilon = base.default_epsilon(horizon)
    super(RestartHedgePolicy, self).__init__(
        name=name, horizon=horizon, epsilon=epsilon, seed=seed, stream=stream)
    if batch_size is None:
      if variation_budget is None:
        batch_size = horizon
      else:
        batch_size = restart_batch_size(horizon, variation_budget, batch_scale)
    if batch_size < 1:
      raise ValueError('batch_size must be positive, got {!r}'.format(
          batch_size))
    self.batch_size = int(batch_size)
    if learning_rate is None:
      learning_rate = math.sqrt(
          8.0 * math.log(max(self.num_experts, 2)) / self.batch_size)
    self.learning_rate = learning_rate
    self._reset()

  def _reset(self) -> None:
    self.weights = utils.uniform_distribution(self.num_experts)
    self._rounds_in_batch = 0

  def _expert_distribution(self, valuation: float) -> np.ndarray:
    del valuation
    return self.weights

  def _update(self, auction_round: auction_core.AuctionRound,
              proposal: base.Proposal) -> None:
    del proposal
    self.weights = hedge_step(
        self.weights, self.expert_rewards(auction_round), self.learning_rate)
    self._rounds_in_batch += 1
    if self._rounds_in_batch >= self.batch_size and self._record_restart():
      logging.vlog(1, '%s restarts after round %d', self.name,
                   self.round_index)
      self.weights = utils.uniform_distribution(self.num_experts)
      self._rounds_in_batch = 0


class HedgePolicy(RestartHedgePolicy):
  """Plain Hedge, the single-batch special case."""

  def __init__(
      self,
      horizon: int,
      epsilon: Optional[float] = None,
      learning_rate: Optional[float] = None,
      seed: Optional[int] = None,
      stream: int = 0):
    super(HedgePolicy, self).__init__(
        horizon=horizon,
        epsilon=epsilon,
        batch_size=horizon,
        learning_rate=learning_rate,
        seed=seed,
        stream=stream,
        name='hedge')
