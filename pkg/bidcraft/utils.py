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
"""Collection of shared utility functions."""

import json
from typing import Any, Dict, Optional, Sequence

import numpy as np

# Tolerance used when checking that a weight vector is a distribution.
NORMALIZATION_ATOL = 1e-9


def make_rng(seed: Optional[int], *keys: int) -> np.random.Generator:
  """Returns an independent `np.random.Generator` for `(seed, *keys)`.

  Streams that share a seed but differ in `keys` are statistically independent,
  which lets a replication hand separate streams to its environment, its policy
  and the policy's children without them interfering with one another.

  Args:
    seed: the replication seed. None draws fresh OS entropy.
    *keys: integers identifying the consumer of the stream.

  Returns:
    A numpy random Generator.
  """
  if seed is None:
    return np.random.default_rng()
  return np.random.default_rng(np.random.SeedSequence([int(seed)] + list(keys)))


def _check_rows(weights: np.ndarray, name: str) -> None:
  if np.any(weights < 0.0):
    raise ValueError('{} has negative entries: {!r}'.format(
        name, weights[weights < 0.0]))
  totals = np.sum(weights, axis=-1)
  errors = np.abs(totals - 1.0)
  if np.any(errors > NORMALIZATION_ATOL):
    raise ValueError(
        '{} must sum to 1 within {}, got {!r}'.format(
            name, NORMALIZATION_ATOL, float(totals.flat[np.argmax(errors)])))


def check_distribution(weights: np.ndarray, name: str = 'weights') -> None:
  """Raises ValueError unless `weights` is a nonnegative normalized vector."""
  weights = np.asarray(weights, dtype=np.float64)
  if weights.ndim != 1 or weights.size == 0:
    raise ValueError('{} must be a non-empty vector, got shape {}'.format(
        name, weights.shape))
  _check_rows(weights, name)


def check_distributions(weights: np.ndarray, name: str = 'weights') -> None:
  """`check_distribution` for every row of a [batch, experts] matrix."""
  weights = np.asarray(weights, dtype=np.float64)
  if weights.ndim != 2 or weights.size == 0:
    raise ValueError('{} must be a non-empty matrix, got shape {}'.format(
        name, weights.shape))
  _check_rows(weights, name)


def uniform_distribution(count: int) -> np.ndarray:
  return np.full(count, 1.0 / count)


def format_number(value: float) -> str:
  """Shortest round-trip text for `value`; integral values print bare."""
  value = float(value)
  if np.isfinite(value) and value == int(value):
    return str(int(value))
  return repr(value)


def parse_int_range(text: str) -> Sequence[int]:
  """Parses '2..10' (inclusive) or a comma separated list into integers."""
  text = text.strip()
  if '..' in text:
    start, stop = text.split('..', 1)
    return list(range(int(start), int(stop) + 1))
  return [int(x) for x in text.split(',') if x.strip()]


def to_json(payload: Dict[str, Any]) -> str:
  return json.dumps(payload, indent=2, sort_keys=True)
