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
"""Reward model, dynamic benchmark and non-stationarity metrics.

A round of a repeated first-price auction is a pair (v, m) of the learner's
private valuation and the highest bid among the opponents. Bidding b pays

  r(b; v, m) = (v - b) * 1(b >= m),

so ties are won by the learner. Everything in this module is a pure function of
its inputs.
"""

import dataclasses
import math
from typing import Iterator, Sequence, Tuple, Union

import numpy as np

# Default tolerance for counting switches of the rival bid sequence.
SWITCH_TOLERANCE = 1e-6

_ArrayLike = Union[Sequence[float], np.ndarray]


def _check_unit_interval(value: float, name: str) -> None:
  if not 0.0 <= value <= 1.0:
    raise ValueError('{} must lie in [0, 1], got {!r}'.format(name, value))


@dataclasses.dataclass(frozen=True)
class AuctionRound:
  """One round: the learner's valuation and the opponents' highest bid."""
  valuation: float
  rival_high_bid: float

  def __post_init__(self):
    _check_unit_interval(self.valuation, 'valuation')
    _check_unit_interval(self.rival_high_bid, 'rival_high_bid')


class AuctionSequence(object):
  """An ordered, immutable sequence of auction rounds stored column-wise."""

  def __init__(self, valuations: _ArrayLike, rival_high_bids: _ArrayLike):
    valuations = np.array(valuations, dtype=np.float64)
    rival_high_bids = np.array(rival_high_bids, dtype=np.float64)
    if valuations.ndim != 1 or valuations.shape != rival_high_bids.shape:
      raise ValueError(
          'valuations and rival_high_bids must be vectors of equal length, got '
          'shapes {} and {}'.format(valuations.shape, rival_high_bids.shape))
    if valuations.size < 1:
      raise ValueError('An auction sequence needs at least one round.')
    for name, column in (('valuations', valuations),
                         ('rival_high_bids', rival_high_bids)):
      if np.any(column < 0.0) or np.any(column > 1.0):
        raise ValueError('{} must lie in [0, 1]'.format(name))
    valuations.setflags(write=False)
    rival_high_bids.setflags(write=False)
    self._valuations = valuations
    self._rival_high_bids = rival_high_bids

  @classmethod
  def from_rounds(cls, rounds: Sequence[AuctionRound]) -> 'AuctionSequence':
    return cls([r.valuation for r in rounds],
               [r.rival_high_bid for r in rounds])

  @property
  def valuations(self) -> np.ndarray:
    return self._valuations

  @property
  def rival_high_bids(self) -> np.ndarray:
    return self._rival_high_bids

  @property
  def horizon(self) -> int:
    return int(self._valuations.size)

  def __len__(self) -> int:
    return self.horizon

  def __getitem__(self, index: int) -> AuctionRound:
    return AuctionRound(float(self._valuations[index]),
                        float(self._rival_high_bids[index]))

  def __iter__(self) -> Iterator[AuctionRound]:
    for index in range(self.horizon):
      yield self[index]


@dataclasses.dataclass(frozen=True)
class BidGrid:
  """The truncated-constant experts f(v; tau) = min{v, tau}, tau = i * epsilon.

  Attributes:
    epsilon: grid precision in (0, 1].
  """
  epsilon: float

  def __post_init__(self):
    if not 0.0 < self.epsilon <= 1.0:
      raise ValueError('epsilon must lie in (0, 1], got {!r}'.format(
          self.epsilon))

  @classmethod
  def from_count(cls, count: int) -> 'BidGrid':
    if count < 1:
      raise ValueError('count must be positive, got {!r}'.format(count))
    return cls(1.0 / count)

  @property
  def count(self) -> int:
    # The slack absorbs 1/epsilon landing just below an integer.
    return max(1, int(math.floor(1.0 / self.epsilon + 1e-9)))

  @property
  def thresholds(self) -> np.ndarray:
    return np.minimum(np.arange(1, self.count + 1) * self.epsilon, 1.0)

  def bids(self, valuation: float) -> np.ndarray:
    """Returns every expert's bid for `valuation`; never exceeds it."""
    return np.minimum(valuation, self.thresholds)


def _rewards(bids: np.ndarray, valuation: Union[float, np.ndarray],
             rival_high_bid: Union[float, np.ndarray]) -> np.ndarray:
  bids = np.asarray(bids, dtype=np.float64)
  return np.where(bids >= rival_high_bid, valuation - bids, 0.0)


def reward(bid: float, auction_round: AuctionRound) -> float:
  """Returns (v - b) * 1(b >= m) for one bid."""
  if not 0.0 <= bid <= 1.0:
    raise ValueError('bid must lie in [0, 1], got {!r}'.format(bid))
  if bid >= auction_round.rival_high_bid:
    return auction_round.valuation - bid
  return 0.0


def bid_rewards(bids: _ArrayLike, auction_round: AuctionRound) -> np.ndarray:
  """Vectorized `reward` over an array of bids."""
  bids = np.asarray(bids, dtype=np.float64)
  if np.any(bids < 0.0) or np.any(bids > 1.0):
    raise ValueError('bids must lie in [0, 1]')
  return _rewards(bids, auction_round.valuation, auction_round.rival_high_bid)


def sequence_rewards(bids: _ArrayLike, seq: AuctionSequence) -> np.ndarray:
  """Rewards of bidding bids[t] in round t of `seq`."""
  bids = np.asarray(bids, dtype=np.float64)
  if bids.shape != (seq.horizon,):
    raise ValueError('expected {} bids, got shape {}'.format(
        seq.horizon, bids.shape))
  if np.any(bids < 0.0) or np.any(bids > 1.0):
    raise ValueError('bids must lie in [0, 1]')
  return _rewards(bids, seq.valuations, seq.rival_high_bids)


def expert_reward_vector(grid: BidGrid,
                         auction_round: AuctionRound) -> np.ndarray:
  """Returns r_{t,i} = r(min{v, tau_i}; v, m) for every grid expert."""
  return _rewards(grid.bids(auction_round.valuation), auction_round.valuation,
                  auction_round.rival_high_bid)


def expert_reward_matrix(grid: BidGrid, seq: AuctionSequence) -> np.ndarray:
  """Returns the [T, N] matrix of expert rewards over a whole sequence."""
  valuations = seq.valuations[:, np.newaxis]
  bids = np.minimum(valuations, grid.thresholds[np.newaxis, :])
  return np.where(bids >= seq.rival_high_bids[:, np.newaxis],
                  valuations - bids, 0.0)


def optimal_bid(auction_round: AuctionRound) -> float:
  """The per-round optimal bid: m if v >= m, otherwise v."""
  if auction_round.valuation >= auction_round.rival_high_bid:
    return auction_round.rival_high_bid
  return auction_round.valuation


def benchmark_rewards(seq: AuctionSequence) -> np.ndarray:
  """Per-round dynamic benchmark increments max{v_t - m_t, 0}."""
  return np.maximum(seq.valuations - seq.rival_high_bids, 0.0)


def dynamic_benchmark(seq: AuctionSequence) -> float:
  """Sum over rounds of max{v_t - m_t, 0}."""
  return float(np.sum(benchmark_rewards(seq)))


def grid_dynamic_benchmark(grid: BidGrid, seq: AuctionSequence) -> float:
  """Sum over rounds of the best grid expert's reward in that round."""
  return float(np.sum(np.max(expert_reward_matrix(grid, seq), axis=1)))


def best_fixed_expert(grid: BidGrid, seq: AuctionSequence) -> Tuple[int, float]:
  """Returns (index, cumulative reward) of the best fixed grid expert.

  The index is zero based, so the expert's threshold is (index + 1) * epsilon.
  """
  totals = np.sum(expert_reward_matrix(grid, seq), axis=0)
  index = int(np.argmax(totals))
  return index, float(totals[index])


def temporal_variation(values: _ArrayLike) -> float:
  """Sum of absolute successive differences; 0 for a single value."""
  values = np.asarray(values, dtype=np.float64)
  if values.size < 1:
    raise ValueError('temporal_variation needs at least one value.')
  return float(np.sum(np.abs(np.diff(values))))


def switch_count(values: _ArrayLike,
                 tolerance: float = SWITCH_TOLERANCE) -> int:
  """Counts t >= 2 with |x_t - x_{t-1}| >= tolerance.

  With tolerance 0 every nonzero difference counts, which is the exact
  definition of the switching number.

  Args:
    values: the sequence, usually the rival bids.
    tolerance: minimum absolute change that counts as a switch.

  Returns:
    The number of switches.
  """
  if tolerance < 0:
    raise ValueError('tolerance must be nonnegative, got {!r}'.format(
        tolerance))
  differences = np.abs(np.diff(np.asarray(values, dtype=np.float64)))
  if tolerance == 0:
    return int(np.count_nonzero(differences))
  return int(np.count_nonzero(differences >= tolerance))


def _left_limit_rewards(points: np.ndarray, valuations: np.ndarray,
                        rival_high_bids: np.ndarray) -> np.ndarray:
  # As b increases to a point, the bid eventually clears m iff m < point.
  return np.where(rival_high_bids < points, valuations - points, 0.0)


def sup_reward_differences(valuations_a: _ArrayLike,
                           rival_high_bids_a: _ArrayLike,
                           valuations_b: _ArrayLike,
                           rival_high_bids_b: _ArrayLike) -> np.ndarray:
  """Elementwise `sup_reward_difference` over broadcastable arrays of rounds.

  The difference is piecewise linear in b with breakpoints at m_a and m_b only,
  so its supremum is attained at 0, 1, m_a, m_b or at a left limit into m_a or
  m_b.

  Args:
    valuations_a: v_a of the first rounds.
    rival_high_bids_a: m_a of the first rounds.
    valuations_b: v_b of the second rounds.
    rival_high_bids_b: m_b of the second rounds.

  Returns:
    The suprema, each satisfying |m_a - m_b| <= 2 * result.
  """
  va, ma, vb, mb = np.broadcast_arrays(
      *(np.asarray(values, dtype=np.float64) for values in (
          valuations_a, rival_high_bids_a, valuations_b, rival_high_bids_b)))
  best = np.zeros(va.shape)
  for bids in (np.zeros(va.shape), np.ones(va.shape), ma, mb):
    best = np.maximum(best, np.abs(_rewards(bids, va, ma) -
                                   _rewards(bids, vb, mb)))
  for points in (ma, mb):
    gap = np.abs(_left_limit_rewards(points, va, ma) -
                 _left_limit_rewards(points, vb, mb))
    best = np.maximum(best, np.where(points > 0.0, gap, 0.0))
  return best


def sup_reward_difference(round_a: AuctionRound,
                          round_b: AuctionRound) -> float:
  """Exact sup over b in [0, 1] of |r(b; v_a, m_a) - r(b; v_b, m_b)|."""
  return float(sup_reward_differences(
      round_a.valuation, round_a.rival_high_bid, round_b.valuation,
      round_b.rival_high_bid))


def reward_function_variation(seq: AuctionSequence) -> float:
  """Sum over t of sup_b |r(b; v_t, m_t) - r(b; v_{t-1}, m_{t-1})|."""
  valuations, rivals = seq.valuations, seq.rival_high_bids
  return float(np.sum(sup_reward_differences(
      valuations[:-1], rivals[:-1], valuations[1:], rivals[1:])))


def two_segment_instance(horizon: int) -> AuctionSequence:
  """v = 1 throughout; m = 0 for the first half and 1/2 afterwards.

  No single truncated bid is optimal on both halves, so the dynamic benchmark
  (3T/4) beats every fixed policy (T/2) by T/4.

  Args:
    horizon: the number of rounds, even.

  Returns:
    The auction sequence.
  """
  if horizon < 2 or horizon % 2:
    raise ValueError('horizon must be a positive even integer, got {!r}'.format(
        horizon))
  rivals = np.where(np.arange(1, horizon + 1) <= horizon // 2, 0.0, 0.5)
  return AuctionSequence(np.ones(horizon), rivals)


def alternating_rival_instance(horizon: int, epsilon: float) -> AuctionSequence:
  """v = 1; m alternates 0 (odd t) and epsilon (even t).

  V_T is (T - 1) * epsilon while the reward-function variation is T - 1.

  Args:
    horizon: the number of rounds.
    epsilon: the rival bid on even rounds.

  Returns:
    The auction sequence.
  """
  rounds = np.arange(1, horizon + 1)
  rivals = np.where(rounds % 2 == 1, 0.0, epsilon)
  return AuctionSequence(np.ones(horizon), rivals)


def alternating_valuation_instance(horizon: int,
                                   rival_high_bid: float) -> AuctionSequence:
  """m is constant; v alternates 0 (odd t) and 1 (even t).

  V_T is 0 while the reward-function variation is T - 1.

  Args:
    horizon: the number of rounds.
    rival_high_bid: the constant rival bid.

  Returns:
    The auction sequence.
  """
  rounds = np.arange(1, horizon + 1)
  valuations = np.where(rounds % 2 == 1, 0.0, 1.0)
  return AuctionSequence(valuations, np.full(horizon, rival_high_bid))
