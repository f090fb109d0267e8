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
"""Splits dynamic regret into per-batch static regret and transition cost.

Over a partition of the rounds into batches T_1, ..., T_n and a grid of
truncated-constant experts,

  grid dynamic regret = sum_j S_j + sum_j C_j,

where S_j is the learner's regret against the best fixed expert of batch j and
C_j is what that expert loses to the per-round best expert within the batch.
"""

import dataclasses
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from bidcraft import auction_core
from bidcraft.harness import episode
from bidcraft.policies import base as policies_base

Boundaries = Union[Sequence[int], Sequence[Tuple[int, int]]]


@dataclasses.dataclass(frozen=True)
class DecompositionReport:
  """Per-batch static regret and transition cost.

  Attributes:
    spans: half-open (start, stop) round ranges of the batches.
    best_experts: zero-based index of each batch's best fixed expert.
    static_regret: S_j, the best fixed expert's reward minus the learner's.
    transition_cost: C_j, the per-round best expert's reward minus the best
      fixed expert's.
    epsilon: the grid precision the experts were built with.
  """
  spans: Tuple[Tuple[int, int], ...]
  best_experts: np.ndarray
  static_regret: np.ndarray
  transition_cost: np.ndarray
  epsilon: float

  @property
  def total_static_regret(self) -> float:
    return float(np.sum(self.static_regret))

  @property
  def total_transition_cost(self) -> float:
    return float(np.sum(self.transition_cost))

  @property
  def grid_dynamic_regret(self) -> float:
    return self.total_static_regret + self.total_transition_cost

  def to_frame(self) -> pd.DataFrame:
    return pd.DataFrame({
        'start': [span[0] for span in self.spans],
        'stop': [span[1] for span in self.spans],
        'best_expert': self.best_experts,
        'static_regret': self.static_regret,
        'transition_cost': self.transition_cost,
    })


def _as_spans(batch_boundaries: Boundaries,
              horizon: int) -> Tuple[Tuple[int, int], ...]:
  """Accepts batch start rounds or (start, stop) pairs covering [0, T)."""
  boundaries = list(batch_boundaries)
  if not boundaries:
    raise ValueError('batch_boundaries must not be empty')
  if np.ndim(boundaries[0]) == 0:
    spans = policies_base.batch_spans([int(b) for b in boundaries], horizon)
  else:
    spans = [(int(a), int(b)) for a, b in boundaries]
  expected_start = 0
  for start, stop in spans:
    if start != expected_start or stop <= start:
      raise ValueError(
          'batch_boundaries must partition rounds [0, {}), got {!r}'.format(
              horizon, boundaries))
    expected_start = stop
  if expected_start != horizon:
    raise ValueError(
        'batch_boundaries must partition rounds [0, {}), got {!r}'.format(
            horizon, boundaries))
  return tuple(spans)


def regret_decomposition(
    trace: episode.RegretTrace,
    batch_boundaries: Optional[Boundaries] = None,
    epsilon: Optional[float] = None,
    realized: bool = False) -> DecompositionReport:
  """Decomposes a trace's grid-restricted dynamic regret over batches.

  Args:
    trace: the episode to decompose.
    batch_boundaries: zero-based batch start rounds, or half-open (start, stop)
      pairs. Defaults to the policy's own restarts.
    epsilon: grid precision; defaults to the policy's grid, else 4 / sqrt(T).
    realized: use sampled rewards instead of expected ones.

  Returns:
    A `DecompositionReport`.

  Raises:
    ValueError: if the boundaries do not partition the horizon.
  """
  horizon = trace.horizon
  if batch_boundaries is None:
    batch_boundaries = trace.batch_starts
  spans = _as_spans(batch_boundaries, horizon)
  if epsilon is None:
    epsilon = trace.epsilon or policies_base.default_epsilon(horizon)
  grid = auction_core.BidGrid(epsilon)
  rewards = auction_core.expert_reward_matrix(grid, trace.sequence())
  learner = trace.realized_rewards if realized else trace.expected_rewards

  best_experts, static_regret, transition_cost = [], [], []
  for start, stop in spans:
    batch = rewards[start:stop]
    totals = np.sum(batch, axis=0)
    best = int(np.argmax(totals))
    best_experts.append(best)
    static_regret.append(totals[best] - np.sum(learner[start:stop]))
    transition_cost.append(np.sum(np.max(batch, axis=1)) - totals[best])
  return DecompositionReport(
      spans=spans,
      best_experts=np.array(best_experts),
      static_regret=np.array(static_regret),
      transition_cost=np.array(transition_cost),
      epsilon=grid.epsilon)


def grid_dynamic_regret(trace: episode.RegretTrace,
                        epsilon: Optional[float] = None,
                        realized: bool = False) -> float:
  """Sum over rounds of the best grid expert's reward minus the learner's."""
  if epsilon is None:
    epsilon = trace.epsilon or policies_base.default_epsilon(trace.horizon)
  grid = auction_core.BidGrid(epsilon)
  learner = trace.realized_rewards if realized else trace.expected_rewards
  return (auction_core.grid_dynamic_benchmark(grid, trace.sequence()) -
          float(np.sum(learner)))
