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
"""Adversarial rival bid sequences made of alternating single-jump batches.

Each batch has length H and one jump at a uniformly random round tau: odd
batches rise from 0 to a level delta, even batches fall back from delta to 0.
Valuations are identically 1. A learner that bids low loses the jump round,
and one that bids delta early overpays until the jump.
"""

import math
from typing import NamedTuple

import numpy as np

from bidcraft.environments import base

SWITCH_JUMP = 0.5


class BatchLayout(NamedTuple):
  batch_length: int
  batches: int
  level: float


def jump_batch(length: int, tau: int, level: float,
               descending: bool = False) -> np.ndarray:
  """Returns a batch equal to `level` from round tau on (0 before).

  Args:
    length: the batch length H.
    tau: the jump round in 1..H.
    level: the jump size delta.
    descending: start at `level` and fall to 0 at tau instead.

  Returns:
    The batch as a length-H array.
  """
  if not 1 <= tau <= length:
    raise ValueError('tau must lie in [1, {}], got {!r}'.format(length, tau))
  after = np.arange(1, length + 1) >= tau
  if descending:
    after = ~after
  return np.where(after, level, 0.0)


def alternating_batches(horizon: int, layout: BatchLayout,
                        rng: np.random.Generator) -> np.ndarray:
  """Concatenates `layout.batches` alternating batches, padding to `horizon`.

  The padding repeats the last batch's final level, so it adds no variation.
  """
  pieces = []
  last = 0.0
  for index in range(layout.batches):
    tau = int(rng.integers(1, layout.batch_length + 1))
    batch = jump_batch(layout.batch_length, tau, layout.level,
                       descending=index % 2 == 1)
    pieces.append(batch)
    last = batch[-1]
  remainder = horizon - layout.batches * layout.batch_length
  if remainder < 0:
    raise ValueError('{} batches of length {} exceed horizon {}'.format(
        layout.batches, layout.batch_length, horizon))
  pieces.append(np.full(remainder, last))
  return np.concatenate(pieces)


def variation_layout(spec: base.EnvironmentSpec) -> BatchLayout:
  """H = floor(sqrt(T / V_T)), floor(H * V_T) batches with jumps of 1/H."""
  horizon = spec.horizon
  variation = spec.variation_budget
  if variation is None:
    raise ValueError('alpha or variation_target is required for '
                     'lower_bound_vt')
  if not 36.0 / horizon <= variation <= horizon / 4.0:
    raise ValueError(
        'variation_target must lie in [36/T, T/4] = [{}, {}], got {!r}'.format(
            36.0 / horizon, horizon / 4.0, variation))
  length = int(math.floor(math.sqrt(horizon / variation)))
  batches = min(int(math.floor(length * variation)), horizon // length)
  return BatchLayout(length, max(batches, 1), 1.0 / length)


def switch_layout(spec: base.EnvironmentSpec) -> BatchLayout:
  """L_T batches of length floor(T / L_T) with jumps of 1/2."""
  switches = spec.switch_target
  if switches is None:
    raise ValueError('switch_target is required for lower_bound_lt')
  if switches > spec.horizon / 3.0:
    raise ValueError('switch_target must be at most T/3 = {}, got {!r}'.format(
        spec.horizon / 3.0, switches))
  return BatchLayout(spec.horizon // switches, int(switches), SWITCH_JUMP)


def gen_lower_bound_vt(spec: base.EnvironmentSpec,
                       rng: np.random.Generator) -> np.ndarray:
  """Rival bids with temporal variation at most V_T."""
  return alternating_batches(spec.horizon, variation_layout(spec), rng)


def gen_lower_bound_lt(spec: base.EnvironmentSpec,
                       rng: np.random.Generator) -> np.ndarray:
  """Rival bids with at most L_T switches."""
  return alternating_batches(spec.horizon, switch_layout(spec), rng)


class LowerBoundEnvironment(base.BaseEnvironment):
  """The variation- and switch-constrained adversarial sequences."""

  kinds = base.LOWER_BOUND_KINDS

  @property
  def layout(self) -> BatchLayout:
    if self.spec.kind == 'lower_bound_vt':
      return variation_layout(self.spec)
    return switch_layout(self.spec)

  def _rival_bids(self, rng: np.random.Generator) -> np.ndarray:
    return alternating_batches(self.spec.horizon, self.layout, rng)

  def _valuations(self, rng: np.random.Generator) -> np.ndarray:
    del rng
    return np.ones(self.spec.horizon)
