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
"""Slowly varying rival bid patterns built from jump blocks and sine waves."""

import math
from typing import Optional

import numpy as np

from bidcraft.environments import base

BLOCK_KINDS = ('constant', 'exponential', 'linear')
MIN_BLOCK_LENGTH = 3


def draw_jump_location(length: int, rng: np.random.Generator,
                       beta: float = 2.0 / 3.0) -> int:
  """tau uniform on {1, ..., floor(beta * length)}."""
  upper = max(1, int(math.floor(beta * length)))
  return int(rng.integers(1, upper + 1))


def gen_building_block(kind: str,
                       length: int,
                       rng: Optional[np.random.Generator] = None,
                       tau: Optional[int] = None,
                       beta: float = 2.0 / 3.0) -> np.ndarray:
  """Returns one block: zero up to round tau, then a rise towards one.

  For t in 1..H the block is 0 while t <= tau and afterwards

    constant:    1
    exponential: 1 - exp(-10 (t - tau) / H)
    linear:      (t - tau) / (H - tau)

  Args:
    kind: one of BLOCK_KINDS.
    length: the block length H, at least 3.
    rng: draws tau when it is not given.
    tau: the last round before the rise, in 1..H.
    beta: tau is drawn uniformly from {1, ..., floor(beta * H)}.

  Returns:
    A length-H array in [0, 1] with temporal variation at most 1.
  """
  if kind not in BLOCK_KINDS:
    raise ValueError('Unrecognized block kind: {!r}'.format(kind))
  if length < MIN_BLOCK_LENGTH:
    raise ValueError('length must be at least {}, got {!r}'.format(
        MIN_BLOCK_LENGTH, length))
  if tau is None:
    if rng is None:
      raise ValueError('Either tau or rng must be given.')
    tau = draw_jump_location(length, rng, beta)
  if not 1 <= tau <= length:
    raise ValueError('tau must lie in [1, {}], got {!r}'.format(length, tau))
  rounds = np.arange(1, length + 1, dtype=np.float64)
  after = rounds > tau
  elapsed = np.where(after, rounds - tau, 0.0)
  if kind == 'constant':
    rise = np.ones(length)
  elif kind == 'exponential':
    rise = 1.0 - np.exp(-10.0 * elapsed / length)
  else:
    rise = elapsed / (length - tau) if tau < length else np.zeros(length)
  return np.where(after, rise, 0.0)


def segment_count(variation_budget: float) -> int:
  return max(1, int(math.ceil(variation_budget)))


def gen_multi_segment(kind: str, spec: base.EnvironmentSpec,
                      rng: np.random.Generator) -> np.ndarray:
  """Concatenates ceil(V_T) independent blocks spanning the horizon.

  Args:
    kind: a block kind, or 'multi_segment' to draw each segment's kind
      uniformly from BLOCK_KINDS.
    spec: supplies T, V_T and beta.
    rng: the replication's rival-bid stream.

  Returns:
    The rival bids; their temporal variation is at most 2 * ceil(V_T).
  """
  variation = spec.variation_budget
  if variation is None:
    raise ValueError('alpha or variation_target is required for {!r}'.format(
        kind))
  segments = segment_count(variation)
  if MIN_BLOCK_LENGTH * segments > spec.horizon:
    raise ValueError(
        'variation_target {!r} needs {} segments of length {}, more than '
        'horizon {} allows'.format(variation, segments, MIN_BLOCK_LENGTH,
                                   spec.horizon))
  blocks = []
  for rounds in np.array_split(np.arange(spec.horizon), segments):
    block_kind = kind
    if kind == 'multi_segment':
      block_kind = BLOCK_KINDS[int(rng.integers(len(BLOCK_KINDS)))]
    blocks.append(
        gen_building_block(block_kind, rounds.size, rng, beta=spec.beta))
  return np.concatenate(blocks)


def gen_sinusoidal(spec: base.EnvironmentSpec) -> np.ndarray:
  """m_t = 1/2 + 1/2 sin(V_T pi t / T) for t = 1..T."""
  variation = spec.variation_budget
  if variation is None:
    raise ValueError('alpha or variation_target is required for sinusoidal')
  rounds = np.arange(1, spec.horizon + 1, dtype=np.float64)
  values = 0.5 + 0.5 * np.sin(variation * math.pi * rounds / spec.horizon)
  return np.clip(values, 0.0, 1.0)


def gen_pattern(kind: str, spec: base.EnvironmentSpec,
                rng: np.random.Generator) -> np.ndarray:
  if kind == 'sinusoidal':
    return gen_sinusoidal(spec)
  return gen_multi_segment(kind, spec, rng)


class PatternEnvironment(base.BaseEnvironment):
  """Slowly varying rival bids with i.i.d. uniform learner valuations."""

  kinds = base.PATTERN_KINDS

  def _rival_bids(self, rng: np.random.Generator) -> np.ndarray:
    return gen_pattern(self.spec.kind, self.spec, rng)
