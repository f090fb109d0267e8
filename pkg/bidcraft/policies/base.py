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
"""Abstract base classes which define the interface for bidding policies."""

import abc
import collections
import math
from typing import List, Optional, Tuple

import numpy as np

from bidcraft import auction_core
from bidcraft import utils


# One round's decision: the played bid, the full distribution it was sampled
# from, the bid attached to each entry of the distribution, and the sampled
# entry.
Proposal = collections.namedtuple(
    'Proposal', ['bid', 'distribution', 'bids', 'index'])


def expected_reward(proposal: Proposal,
                    auction_round: auction_core.AuctionRound) -> float:
  """Returns the reward of `proposal` in expectation over its distribution."""
  rewards = auction_core.bid_rewards(proposal.bids, auction_round)
  return float(np.dot(proposal.distribution, rewards))


def default_epsilon(horizon: int) -> float:
  """Grid precision 4 / sqrt(T), capped at 1."""
  return min(1.0, 4.0 / math.sqrt(horizon))


class BasePolicy(abc.ABC):
  """Abstract base bidding policy.

  A round is played by calling `propose` with the round's valuation and then
  `observe` with the completed round. Requires subclasses to override
  _propose, _update and _reset.
  """

  # Policies that peek at the current round's rival bid are not admissible
  # learners; the harness only hands them the rival bid when this is set.
  requires_rival_bid = False

  def __init__(
      self,
      name: str,
      horizon: int,
      seed: Optional[int] = None,
      stream: int = 0):
    """Create a bidding policy.

    Args:
      name: the name of this policy.
      horizon: the number of rounds T the policy is tuned for.
      seed: the replication seed. None draws fresh entropy.
      stream: identifies this policy's random stream among others sharing the
        same seed, e.g. the children of a combiner.
    """
    if horizon < 1:
      raise ValueError('horizon must be a positive integer, got {!r}'.format(
          horizon))
    self.name = name
    self.horizon = int(horizon)
    self.seed = seed
    self._stream = stream
    self._rng = utils.make_rng(seed, stream)
    self._pending = None
    self.round_index = 0
    self.batch_starts = [0]

  def propose(self,
              valuation: float,
              rival_high_bid: Optional[float] = None) -> Proposal:
    """Returns this round's bid distribution and the sampled bid.

    Args:
      valuation: the learner's valuation v_t.
      rival_high_bid: m_t, only used by policies with `requires_rival_bid`.

    Raises:
      RuntimeError: if the previous proposal was never observed.
    """
    if self._pending is not None:
      raise RuntimeError(
          '{}: propose called twice without observe at round {}'.format(
              self.name, self.round_index))
    proposal = self._propose(valuation, rival_high_bid)
    utils.check_distribution(proposal.distribution, self.name + ' distribution')
    self._pending = proposal
    return proposal

  def observe(self, auction_round: auction_core.AuctionRound) -> None:
    """Feeds the completed round back to the policy."""
    if self._pending is None:
      raise RuntimeError(
          '{}: observe called without a pending proposal at round {}'.format(
              self.name, self.round_index))
    proposal, self._pending = self._pending, None
    self._update(auction_round, proposal)
    self.round_index += 1

  def reset(self) -> None:
    """Returns the policy to its initial state, keeping its random stream."""
    self._pending = None
    self.round_index = 0
    self.batch_starts = [0]
    self._reset()

  def _record_restart(self) -> bool:
    """Records that the next round opens a batch, unless the horizon is over."""
    next_round = self.round_index + 1
    if next_round >= self.horizon:
      return False
    self.batch_starts.append(next_round)
    return True

  def _sample(self, distribution: np.ndarray, bids: np.ndarray) -> Proposal:
    index = int(self._rng.choice(distribution.size, p=distribution))
    return Proposal(float(bids[index]), distribution, bids, index)

  def _propose(self, valuation: float,
               rival_high_bid: Optional[float]) -> Proposal:
    raise NotImplementedError('Must override policy _propose!')

  def _update(self, auction_round: auction_core.AuctionRound,
              proposal: Proposal) -> None:
    raise NotImplementedError('Must override policy _update!')

  def _reset(self) -> None:
    raise NotImplementedError('Must override policy _reset!')


class ExpertPolicy(BasePolicy):
  """A policy that mixes the truncated-constant experts of a `BidGrid`.

  Requires subclasses to override _expert_distribution and _update.
  """

  def __init__(
      self,
      name: str,
      horizon: int,
      epsilon: float,
      seed: Optional[int] = None,
      stream: int = 0):
    super(ExpertPolicy, self).__init__(
        name=name, horizon=horizon, seed=seed, stream=stream)
    self.grid = auction_core.BidGrid(epsilon)

  @property
  def num_experts(self) -> int:
    return self.grid.count

  def _expert_distribution(self, valuation: float) -> np.ndarray:
    raise NotImplementedError('Must override policy _expert_distribution!')

  def _propose(self, valuation: float,
               rival_high_bid: Optional[float]) -> Proposal:
    del rival_high_bid
    return self._sample(self._expert_distribution(valuation),
                        self.grid.bids(valuation))

  def expert_rewards(self,
                     auction_round: auction_core.AuctionRound) -> np.ndarray:
    return auction_core.expert_reward_vector(self.grid, auction_round)


def batch_spans(batch_starts: List[int],
                horizon: int) -> List[Tuple[int, int]]:
  """Turns restart rounds into half-open (start, stop) batches."""
  stops = list(batch_starts[1:]) + [horizon]
  return list(zip(batch_starts, stops))
