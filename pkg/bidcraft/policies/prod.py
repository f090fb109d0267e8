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
"""The Prod forecaster with benchmark optimism and its restart schemes.

The optimism of round t is the dynamic-benchmark reward max{v_t - m_t, 0}.
It is the same for every expert, so the weights played at round t never depend
on m_t even though the update uses it.
"""

import dataclasses
import math
from typing import Optional, Union

from absl import logging
import numpy as np

from bidcraft import auction_core
from bidcraft import utils
from bidcraft.policies import base

# Multiplicative factors are floored here before renormalizing.
FACTOR_FLOOR = 1e-12


def prod_update(weights: np.ndarray, rewards: np.ndarray,
                optimism: Union[float, np.ndarray],
                learning_rate: float) -> np.ndarray:
  """Returns p_{t+1} proportional to (1 + eta * (r_t - mu_t)) * p_t.

  A [batch, experts] `weights` matrix updates every row at once, with
  `rewards` of the same shape and one optimism per row.

  Args:
    weights: the current distribution over experts, or one per row.
    rewards: the experts' rewards this round.
    optimism: mu_t, the scalar optimism, or one per row.
    learning_rate: eta.

  Returns:
    The updated distribution. A row whose factors all equal one is returned
    unchanged (as a copy).

  Raises:
    ValueError: if `weights` is not a distribution.
  """
  weights = np.asarray(weights, dtype=np.float64)
  optimism = np.asarray(optimism, dtype=np.float64)
  if weights.ndim == 2:
    utils.check_distributions(weights)
    optimism = optimism.reshape(-1, 1)
  else:
    utils.check_distribution(weights)
  factors = 1.0 + learning_rate * (np.asarray(rewards) - optimism)
  unchanged = np.all(factors == 1.0, axis=-1, keepdims=True)
  updated = weights * np.maximum(factors, FACTOR_FLOOR)
  updated /= np.sum(updated, axis=-1, keepdims=True)
  return np.where(unchanged, weights, updated)


def compute_optimism(auction_round: auction_core.AuctionRound) -> float:
  """mu_t = max{v_t - m_t, 0}."""
  return max(auction_round.valuation - auction_round.rival_high_bid, 0.0)


@dataclasses.dataclass
class ProdState:
  """Mutable state of a restarted Prod forecaster.

  Attributes:
    weights: p_t over the grid experts.
    learning_rate: eta.
    optimism: the last optimism used in an update.
    batch_length: rounds played in the open batch.
    batch_variation: rival bid variation inside the open batch.
    cumulative_variation: variation summed over all batches, the open one
      included.
    batch_index: zero-based index of the open batch.
    regularizer_floor: c, added to the cumulative variation in the restart
      guard.
  """
  weights: np.ndarray
  learning_rate: float
  optimism: float = 0.0
  batch_length: int = 0
  batch_variation: float = 0.0
  cumulative_variation: float = 0.0
  batch_index: int = 0
  regularizer_floor: float = 0.0


class ARProdPolicy(base.ExpertPolicy):
  """Prod with benchmark optimism and adaptive restarts.

  A batch closes as soon as its length reaches sqrt(T / (V + c)), where V is
  the rival bid variation observed so far. Variation is accounted batch-locally:
  the jump between the last round of one batch and the first round of the next
  is not charged to either.
  """

  def __init__(
      self,
      horizon: int,
      epsilon: Optional[float] = None,
      learning_rate: float = 1.0,
      regularizer_floor: Optional[float] = None,
      seed: Optional[int] = None,
      stream: int = 0,
      name: str = 'ar_prod'):
    if epsilon is None:
      epsilon = base.default_epsilon(horizon)
    super(ARProdPolicy, self).__init__(
        name=name, horizon=horizon, epsilon=epsilon, seed=seed, stream=stream)
    if learning_rate <= 0:
      raise ValueError('learning_rate must be positive, got {!r}'.format(
          learning_rate))
    if regularizer_floor is None:
      regularizer_floor = 1.0 / horizon
    if regularizer_floor <= 0:
      raise ValueError('regularizer_floor must be positive, got {!r}'.format(
          regularizer_floor))
    self._learning_rate = learning_rate
    self._regularizer_floor = regularizer_floor
    self._reset()

  @classmethod
  def from_theory(cls, horizon: int, seed: Optional[int] = None,
                  stream: int = 0) -> 'ARProdPolicy':
    """The analyzed constants eta = 1/2, epsilon = 1/T and c = 1/T."""
    return cls(
        horizon,
        epsilon=1.0 / horizon,
        learning_rate=0.5,
        regularizer_floor=1.0 / horizon,
        seed=seed,
        stream=stream,
        name='ar_prod_theory')

  def _reset(self) -> None:
    self.state = ProdState(
        weights=utils.uniform_distribution(self.num_experts),
        learning_rate=self._learning_rate,
        regularizer_floor=self._regularizer_floor)
    self._previous_rival = None

  @property
  def restart_threshold(self) -> float:
    """sqrt(T / (sum of batch variations + c)) for the open batch."""
    return math.sqrt(self.horizon / (self.state.cumulative_variation +
                                     self.state.regularizer_floor))

  def _expert_distribution(self, valuation: float) -> np.ndarray:
    del valuation
    return self.state.weights

  def _update(self, auction_round: auction_core.AuctionRound,
              proposal: base.Proposal) -> None:
    del proposal
    state = self.state
    rival = auction_round.rival_high_bid
    if state.batch_length > 0:
      step = abs(rival - self._previous_rival)
      state.batch_variation += step
      state.cumulative_variation += step
    self._previous_rival = rival
    state.optimism = compute_optimism(auction_round)
    state.weights = prod_update(
        state.weights, self.expert_rewards(auction_round), state.optimism,
        state.learning_rate)
    state.batch_length += 1
    if (state.batch_length >= self.restart_threshold and
        self._record_restart()):
      logging.vlog(1, '%s closes batch %d after %d rounds (variation %g)',
                   self.name, state.batch_index, state.batch_length,
                   state.batch_variation)
      state.weights = utils.uniform_distribution(self.num_experts)
      state.batch_index += 1
      state.batch_length = 0
      state.batch_variation = 0.0


class RestartProdPolicy(base.ExpertPolicy):
  """Prod with benchmark optimism restarted every ceil(sqrt(T / V_T)) rounds.

  This is the variant for a known variation budget V_T.
  """

  def __init__(
      self,
      horizon: int,
      variation_budget: float,
      epsilon: Optional[float] = None,
      learning_rate: float = 1.0,
      seed: Optional[int] = None,
      stream: int = 0):
    if epsilon is None:
      epsilon = base.default_epsilon(horizon)
    super(RestartProdPolicy, self).__init__(
        name='restart_prod', horizon=horizon, epsilon=epsilon, seed=seed,
        stream=stream)
    if variation_budget < 0:
      raise ValueError('variation_budget must be nonnegative, got {!r}'.format(
          variation_budget))
    if variation_budget == 0:
      self.batch_size = horizon
    else:
      self.batch_size = int(min(
          horizon, math.ceil(math.sqrt(horizon / variation_budget))))
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
    self.weights = prod_update(
        self.weights, self.expert_rewards(auction_round),
        compute_optimism(auction_round), self.learning_rate)
    self._rounds_in_batch += 1
    if self._rounds_in_batch >= self.batch_size and self._record_restart():
      self.weights = utils.uniform_distribution(self.num_experts)
      self._rounds_in_batch = 0
