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
"""Runs one bidding policy against one environment and records its regret."""

import dataclasses
import time
from typing import Any, Optional, Union

from absl import logging
import numpy as np
import pandas as pd

from bidcraft import auction_core
from bidcraft.environments import base as environments_base
from bidcraft.environments import environments
from bidcraft.policies import base as policies_base
from bidcraft.policies import policies

# Slack allowed when checking the budget-pacing market's books.
BUDGET_ATOL = 1e-6

TRACE_COLUMNS = (
    'round', 'valuation', 'rival_high_bid', 'bid', 'reward_expected',
    'reward_realized', 'benchmark', 'cumulative_regret',
    'cumulative_regret_realized')

# Policies restarted on a fixed schedule tuned by a known variation budget,
# mapped to whether that budget also counts the valuations' variation.
BUDGETED_POLICIES = {'restart_hedge': True, 'restart_prod': False}

EnvironmentLike = Union[environments_base.BaseEnvironment,
                        environments_base.EnvironmentSpec,
                        auction_core.AuctionSequence]


class EpisodeError(RuntimeError):
  """A failure inside an episode, tagged with the zero-based round index."""

  def __init__(self, round_index: int, message: str):
    super(EpisodeError, self).__init__(
        'round {}: {}'.format(round_index, message))
    self.round_index = round_index


@dataclasses.dataclass
class RegretTrace:
  """Per-round record of one episode.

  Attributes:
    policy_name: name of the policy that played.
    spec_digest: `EnvironmentSpec.digest()`, None for a raw sequence.
    seed: the environment seed of the replication.
    valuations: v_t.
    rival_high_bids: m_t as realized, for auditing V_T and L_T.
    bids: the sampled bids.
    expected_rewards: <p_t, r_t>, the reward in expectation over the policy's
      own randomization.
    realized_rewards: the reward of the sampled bid.
    benchmark_increments: max{v_t - m_t, 0}.
    batch_starts: the rounds at which the policy restarted.
    epsilon: grid precision of the policy's experts, if it has a grid.
    budget_spent: total opponent spend, for interactive markets.
    budget_total: total opponent budget, for interactive markets.
  """
  policy_name: str
  spec_digest: Optional[str]
  seed: Optional[int]
  valuations: np.ndarray
  rival_high_bids: np.ndarray
  bids: np.ndarray
  expected_rewards: np.ndarray
  realized_rewards: np.ndarray
  benchmark_increments: np.ndarray
  batch_starts: tuple = (0,)
  epsilon: Optional[float] = None
  budget_spent: Optional[float] = None
  budget_total: Optional[float] = None

  @property
  def horizon(self) -> int:
    return int(self.valuations.size)

  @property
  def cumulative_regret(self) -> np.ndarray:
    """DR_t against expected rewards."""
    return (np.cumsum(self.benchmark_increments) -
            np.cumsum(self.expected_rewards))

  @property
  def cumulative_regret_realized(self) -> np.ndarray:
    return (np.cumsum(self.benchmark_increments) -
            np.cumsum(self.realized_rewards))

  @property
  def final_regret(self) -> float:
    return float(self.cumulative_regret[-1])

  @property
  def final_regret_realized(self) -> float:
    return float(self.cumulative_regret_realized[-1])

  @property
  def total_reward(self) -> float:
    return float(np.sum(self.realized_rewards))

  @property
  def variation_measured(self) -> float:
    return auction_core.temporal_variation(self.rival_high_bids)

  @property
  def switches_measured(self) -> int:
    return auction_core.switch_count(self.rival_high_bids, 0.0)

  def sequence(self) -> auction_core.AuctionSequence:
    return auction_core.AuctionSequence(self.valuations, self.rival_high_bids)

  def to_frame(self) -> pd.DataFrame:
    return pd.DataFrame({
        'round': np.arange(1, self.horizon + 1),
        'valuation': self.valuations,
        'rival_high_bid': self.rival_high_bids,
        'bid': self.bids,
        'reward_expected': self.expected_rewards,
        'reward_realized': self.realized_rewards,
        'benchmark': self.benchmark_increments,
        'cumulative_regret': self.cumulative_regret,
        'cumulative_regret_realized': self.cumulative_regret_realized,
    }, columns=list(TRACE_COLUMNS))

  def write_csv(self, path: str) -> None:
    self.to_frame().to_csv(path, index=False, lineterminator='\n')


def _resolve_environment(environment: EnvironmentLike):
  if isinstance(environment, environments_base.EnvironmentSpec):
    return environments.from_spec(environment)
  return environment


def known_variation_budget(spec: environments_base.EnvironmentSpec,
                           seed: Optional[int] = None,
                           with_valuations: bool = True) -> float:
  """The variation budget a fixed-schedule policy is told in advance.

  The rival part is the spec's V_T; when the spec sets none (the lower-bound
  switch sequence, or a market without `alpha`) it is the measured variation
  of the generated rival bids, or 0 for a market. The valuation part V_T^v is
  the measured variation of the replication's valuations.

  Args:
    spec: the replication's environment.
    seed: the replication seed; defaults to the spec's.
    with_valuations: add V_T^v to the rival budget.

  Returns:
    V_T, or V_T + V_T^v.
  """
  environment = environments.from_spec(spec)
  seed = environment._seed(seed)  # pylint: disable=protected-access
  budget = spec.variation_budget
  if environment.interactive:
    valuations = environment.market(seed).valuations
    rival_budget = 0.0 if budget is None else budget
  else:
    sequence = environment.generate(seed)
    valuations = sequence.valuations
    rival_budget = (auction_core.temporal_variation(sequence.rival_high_bids)
                    if budget is None else budget)
  if not with_valuations:
    return float(rival_budget)
  return float(rival_budget + auction_core.temporal_variation(valuations))


def build_policy(policy_name: str,
                 spec: environments_base.EnvironmentSpec,
                 seed: Optional[int] = None,
                 **params: Any) -> policies_base.BasePolicy:
  """Builds a policy for one replication of `spec`.

  Policies in BUDGETED_POLICIES get `variation_budget` from
  `known_variation_budget` unless `params` already fixes it or a batch size.
  Everything else is passed to `policies.get` unchanged.
  """
  if (policy_name in BUDGETED_POLICIES and
      'variation_budget' not in params and 'batch_size' not in params):
    params['variation_budget'] = known_variation_budget(
        spec, seed, with_valuations=BUDGETED_POLICIES[policy_name])
    logging.info('Tuning %s with variation budget %.3f', policy_name,
                 params['variation_budget'])
  return policies.get(policy_name, spec.horizon, seed=seed, **params)


def _play_round(policy: policies_base.BasePolicy, valuation: float,
                rival_high_bid: float):
  """Asks the policy for a bid; the rival bid is shown only to oracles."""
  shown = rival_high_bid if policy.requires_rival_bid else None
  return policy.propose(valuation, shown)


def run_episode(policy: policies_base.BasePolicy,
                environment: EnvironmentLike,
                seed: Optional[int] = None) -> RegretTrace:
  """Plays `policy` for the environment's whole horizon.

  Args:
    policy: a fresh policy. One that has already played is reset first.
    environment: an environment, an `EnvironmentSpec` or a pre-generated
      `AuctionSequence`.
    seed: the environment seed; defaults to the spec's seed.

  Returns:
    The episode's `RegretTrace`.

  Raises:
    EpisodeError: if the policy or the environment fails in some round, or the
      budget-pacing market's books do not balance.
  """
  if policy.round_index:
    policy.reset()
  environment = _resolve_environment(environment)
  spec_digest = None
  if isinstance(environment, environments_base.BaseEnvironment):
    spec_digest = environment.spec.digest()
    if seed is None:
      seed = environment.spec.seed
  start = time.perf_counter()
  logging.info('Starting episode of %s with seed %s', policy.name, seed)
  if getattr(environment, 'interactive', False):
    trace = _run_market(policy, environment.market(seed))
  else:
    if isinstance(environment, environments_base.BaseEnvironment):
      sequence = environment.generate(seed)
    else:
      sequence = environment
    trace = _run_sequence(policy, sequence)
  trace.spec_digest = spec_digest
  trace.seed = seed
  logging.info('Finished episode of %s in %.1f ms: final regret %s',
               policy.name, 1000.0 * (time.perf_counter() - start),
               trace.final_regret)
  return trace


def _empty_columns(horizon: int):
  return {name: np.zeros(horizon) for name in ('valuations', 'rival_high_bids',
                                                'bids', 'expected_rewards',
                                                'realized_rewards')}


def _build_trace(policy: policies_base.BasePolicy, columns,
                 **extra) -> RegretTrace:
  benchmark = np.maximum(columns['valuations'] - columns['rival_high_bids'],
                         0.0)
  return RegretTrace(
      policy_name=policy.name,
      spec_digest=None,
      seed=None,
      benchmark_increments=benchmark,
      batch_starts=tuple(policy.batch_starts),
      epsilon=getattr(getattr(policy, 'grid', None), 'epsilon', None),
      **columns,
      **extra)


def _record(columns, t: int, auction_round: auction_core.AuctionRound,
            proposal: policies_base.Proposal) -> None:
  columns['valuations'][t] = auction_round.valuation
  columns['rival_high_bids'][t] = auction_round.rival_high_bid
  columns['bids'][t] = proposal.bid
  columns['expected_rewards'][t] = policies_base.expected_reward(
      proposal, auction_round)
  columns['realized_rewards'][t] = auction_core.reward(proposal.bid,
                                                       auction_round)


def _run_sequence(policy: policies_base.BasePolicy,
                  sequence: auction_core.AuctionSequence) -> RegretTrace:
  columns = _empty_columns(sequence.horizon)
  for t, auction_round in enumerate(sequence):
    try:
      proposal = _play_round(policy, auction_round.valuation,
                             auction_round.rival_high_bid)
      _record(columns, t, auction_round, proposal)
      policy.observe(auction_round)
    except Exception as e:  # pylint: disable=broad-except
      raise EpisodeError(t, '{}: {}'.format(type(e).__name__, e)) from e
  return _build_trace(policy, columns)


def _run_market(policy: policies_base.BasePolicy, market) -> RegretTrace:
  """Plays against a live budget-pacing market, one auction at a time."""
  columns = _empty_columns(market.horizon)
  for t in range(market.horizon):
    try:
      valuation = float(market.valuations[t])
      proposal = _play_round(policy, valuation, market.rival_high_bid())
      outcome = market.resolve(proposal.bid)
      auction_round = auction_core.AuctionRound(valuation,
                                                outcome.rival_high_bid)
      _record(columns, t, auction_round, proposal)
      policy.observe(auction_round)
    except Exception as e:  # pylint: disable=broad-except
      raise EpisodeError(t, '{}: {}'.format(type(e).__name__, e)) from e
  spent, total = market.total_spent(), market.total_budget()
  if (spent > total + BUDGET_ATOL or
      abs(spent - market.opponent_payments) > BUDGET_ATOL):
    message = 'budget conservation violated: spent {!r} of {!r}, {!r} paid'
    raise EpisodeError(market.horizon - 1,
                       message.format(spent, total, market.opponent_payments))
  return _build_trace(policy, columns, budget_spent=spent, budget_total=total)
