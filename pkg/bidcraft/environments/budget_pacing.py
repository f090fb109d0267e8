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
"""A first-price market of budget-pacing opponents.

Each opponent shades its value by a dual multiplier, b = v / (1 + mu), and
moves mu towards its target spend rate rho = B / T after every auction:

  mu <- clip(mu - eps * (rho - z), 0, mu_bar),

where z is what it paid. The market is adaptive: the learner's wins change
the opponents' spending and therefore their later bids.
"""

import collections
import dataclasses
import math
from typing import List, Optional, Tuple

import numpy as np
from scipy import stats

from bidcraft import utils
from bidcraft.environments import base
from bidcraft.environments import patterns

TRUNCATED_GAUSSIAN_MEAN = 0.4
TRUNCATED_GAUSSIAN_STD = 0.2
BETA_SHAPE = 3.0

# The outcome of one auction. `winner` is -1 when the learner wins, otherwise
# the index of the paying opponent.
RoundOutcome = collections.namedtuple(
    'RoundOutcome', ['rival_high_bid', 'learner_won', 'winner', 'payment'])


@dataclasses.dataclass
class PacingAgentState:
  """Mutable state of one budget-pacing bidder.

  Attributes:
    budget: the initial budget B.
    remaining_budget: budget left, never negative.
    multiplier: the dual multiplier mu in [0, multiplier_cap].
    multiplier_cap: mu_bar = T / B - 1.
    step_size: eps = 1 / sqrt(T).
    target_rate: rho = B / T.
  """
  budget: float
  remaining_budget: float
  multiplier: float
  multiplier_cap: float
  step_size: float
  target_rate: float

  @classmethod
  def create(cls, budget: float, horizon: int) -> 'PacingAgentState':
    if budget <= 0:
      raise ValueError('budget must be positive, got {!r}'.format(budget))
    return cls(
        budget=budget,
        remaining_budget=budget,
        multiplier=0.0,
        multiplier_cap=max(horizon / budget - 1.0, 0.0),
        step_size=1.0 / math.sqrt(horizon),
        target_rate=budget / horizon)


def pacing_bid(state: PacingAgentState, value: float) -> float:
  """min{v / (1 + mu), remaining budget}."""
  return min(value / (1.0 + state.multiplier), state.remaining_budget)


def pacing_update(state: PacingAgentState, won: bool,
                  payment: float) -> PacingAgentState:
  """Charges the payment if the agent won and moves its multiplier."""
  spend = payment if won else 0.0
  state.remaining_budget -= spend
  multiplier = state.multiplier - state.step_size * (state.target_rate - spend)
  state.multiplier = min(max(multiplier, 0.0), state.multiplier_cap)
  return state


def pacing_agent_step(state: PacingAgentState, value: float, won: bool,
                      payment: float) -> Tuple[PacingAgentState, float]:
  """Resolves the last auction for the agent and returns its next bid."""
  state = pacing_update(state, won, payment)
  return state, pacing_bid(state, value)


def draw_values(distribution: str, size,
                rng: np.random.Generator) -> np.ndarray:
  """i.i.d. values in [0, 1] from one of the robustness distributions."""
  if distribution == 'uniform':
    return rng.random(size)
  if distribution == 'truncated_gaussian':
    lower = (0.0 - TRUNCATED_GAUSSIAN_MEAN) / TRUNCATED_GAUSSIAN_STD
    upper = (1.0 - TRUNCATED_GAUSSIAN_MEAN) / TRUNCATED_GAUSSIAN_STD
    return stats.truncnorm.rvs(
        lower, upper, loc=TRUNCATED_GAUSSIAN_MEAN,
        scale=TRUNCATED_GAUSSIAN_STD, size=size, random_state=rng)
  if distribution == 'beta':
    return stats.beta.rvs(BETA_SHAPE, BETA_SHAPE, size=size, random_state=rng)
  raise ValueError('Unrecognized value distribution: {!r}'.format(distribution))


class BudgetPacingMarket(object):
  """One replication of the multi-agent market, played round by round.

  Each round the caller reads `valuations[t]`, may read `rival_high_bid()`,
  and then submits the learner's bid to `resolve`.
  """

  def __init__(self, spec: base.EnvironmentSpec, seed: Optional[int] = None):
    self.spec = spec
    horizon = spec.horizon
    self.agents = [PacingAgentState.create(b, horizon)
                   for b in spec.opponent_budgets()]
    valuation_rng = utils.make_rng(seed, base.VALUATION_STREAM)
    opponent_rng = utils.make_rng(seed, base.OPPONENT_STREAM)
    if spec.value_distribution == 'pattern':
      self.valuations = valuation_rng.random(horizon)
      common = spec.value_scale * patterns.gen_pattern(
          spec.pattern, spec, utils.make_rng(seed, base.RIVAL_STREAM))
      values = np.tile(common, (spec.opponents, 1))
      if spec.opponent_noise > 0:
        values += opponent_rng.uniform(
            -spec.opponent_noise, spec.opponent_noise, size=values.shape)
      self.opponent_values = np.clip(values, 0.0, 1.0)
    else:
      self.valuations = draw_values(spec.value_distribution, horizon,
                                    valuation_rng)
      self.opponent_values = draw_values(
          spec.value_distribution, (spec.opponents, horizon), opponent_rng)
    self.round_index = 0
    self.opponent_payments = 0.0
    self.rival_history: List[float] = []
    self._bids = None

  @property
  def horizon(self) -> int:
    return self.spec.horizon

  def opponent_bids(self) -> np.ndarray:
    """This round's opponent bids; they do not depend on the learner's bid."""
    if self._bids is None:
      if self.round_index >= self.horizon:
        raise IndexError('The market has run for its {} rounds.'.format(
            self.horizon))
      values = self.opponent_values[:, self.round_index]
      self._bids = np.array(
          [pacing_bid(agent, value) for agent, value in zip(self.agents,
                                                            values)])
    return self._bids

  def rival_high_bid(self) -> float:
    return float(np.max(self.opponent_bids()))

  def resolve(self, learner_bid: float) -> RoundOutcome:
    """Runs the auction; the learner wins ties, then the lowest index wins."""
    bids = self.opponent_bids()
    rival = float(np.max(bids))
    if learner_bid >= rival:
      winner, payment = -1, float(learner_bid)
    else:
      winner = int(np.argmax(bids))
      payment = float(bids[winner])
      self.opponent_payments += payment
    for index, agent in enumerate(self.agents):
      won = index == winner
      pacing_update(agent, won, float(bids[index]) if won else 0.0)
    self.rival_history.append(rival)
    self.round_index += 1
    self._bids = None
    return RoundOutcome(rival, winner == -1, winner, payment)

  def total_spent(self) -> float:
    return float(sum(a.budget - a.remaining_budget for a in self.agents))

  def total_budget(self) -> float:
    return float(sum(a.budget for a in self.agents))


class BudgetPacingEnvironment(base.BaseEnvironment):
  """Builds a fresh `BudgetPacingMarket` per replication."""

  kinds = ('budget_pacing',)
  interactive = True

  def market(self, seed: Optional[int] = None) -> BudgetPacingMarket:
    return BudgetPacingMarket(self.spec, self._seed(seed))
