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
"""The exact minimax regret of a single-jump batch, by backward induction.

The learner's value is 1 in every round of a batch of length H. The rival bid
jumps once, at a round tau drawn uniformly from {1, ..., H}: from 0 to delta,
or from delta to 0 in the descending variant. The learner sees the rival bid
only after bidding, and after the jump it can bid optimally for free.

Before the jump is seen the only state is the number k of rounds left, and one
step dominance leaves two actions, bid 0 or bid delta. With V(0) = 0,

  ascending:  V(k) = min((1 - delta + (k-1) V(k-1)) / k,
                         (k-1) (delta + V(k-1)) / k)
  descending: V(k) = min((k-1) (1 - delta + V(k-1)) / k,
                         (delta + (k-1) V(k-1)) / k)

and the minimax regret is V(H). The arithmetic is exact when delta is a
`fractions.Fraction`.
"""

import fractions
import itertools
import numbers
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd

# Largest H the brute-force enumeration accepts.
MAX_BRUTE_FORCE_LENGTH = 8

ORACLE_COLUMNS = ('H', 'oracle', 'bound', 'passed')


def _check(length: int, delta) -> None:
  if length < 2:
    raise ValueError('H must be at least 2, got {!r}'.format(length))
  if not 0 <= delta <= 1:
    raise ValueError('delta must lie in [0, 1], got {!r}'.format(delta))


def dp_minimax_oracle(length: int, delta: numbers.Real,
                      descending: bool = False) -> numbers.Real:
  """Returns the minimax expected regret V(H) of one single-jump batch.

  Args:
    length: the batch length H, at least 2.
    delta: the jump size.
    descending: the rival bid falls from delta to 0 instead of rising.

  Returns:
    V(H), of the same numeric type as `delta`.
  """
  _check(length, delta)
  value = delta * 0
  for k in range(1, length + 1):
    if descending:
      bid_zero = (k - 1) * (1 - delta + value) / k
      bid_delta = (delta + (k - 1) * value) / k
    else:
      bid_zero = (1 - delta + (k - 1) * value) / k
      bid_delta = (k - 1) * (delta + value) / k
    value = min(bid_zero, bid_delta)
  return value


def minimax_lower_bound(length: int) -> fractions.Fraction:
  """1/2 - 1/(2H), the regret every policy suffers when delta = 1/H."""
  return fractions.Fraction(1, 2) - fractions.Fraction(1, 2 * length)


def _round_regret(bid: float, rival_high_bid: float) -> float:
  benchmark = 1.0 - rival_high_bid
  reward = 1.0 - bid if bid >= rival_high_bid else 0.0
  return benchmark - reward


def brute_force_minimax(length: int, delta: float,
                        bid_grid: Optional[Sequence[float]] = None,
                        descending: bool = False) -> float:
  """Minimax regret over every deterministic pre-jump bid sequence.

  Mixing over sequences cannot help since expected regret is linear in the
  mixture, so the minimum over deterministic sequences is the minimax value.

  Args:
    length: the batch length H, at most MAX_BRUTE_FORCE_LENGTH.
    delta: the jump size.
    bid_grid: candidate bids; defaults to {0, 1/4, 1/2, 3/4, 1, delta}.
    descending: the rival bid falls from delta to 0 instead of rising.

  Returns:
    The smallest expected regret over the bid sequences.
  """
  _check(length, delta)
  if length > MAX_BRUTE_FORCE_LENGTH:
    raise ValueError('H must be at most {} for brute force, got {!r}'.format(
        MAX_BRUTE_FORCE_LENGTH, length))
  if bid_grid is None:
    bid_grid = np.linspace(0.0, 1.0, 5).tolist() + [float(delta)]
  bids = sorted(set(float(b) for b in bid_grid))
  before, after = (delta, 0.0) if descending else (0.0, delta)
  best = np.inf
  for sequence in itertools.product(bids, repeat=length):
    pre_jump = [_round_regret(b, before) for b in sequence]
    at_jump = [_round_regret(b, after) for b in sequence]
    prefix = np.concatenate([[0.0], np.cumsum(pre_jump)])
    # Jump at round tau: regret on rounds 1..tau-1 before it, then round tau.
    total = sum(prefix[tau - 1] + at_jump[tau - 1]
                for tau in range(1, length + 1))
    best = min(best, total / length)
  return float(best)


def oracle_table(lengths: Iterable[int]) -> pd.DataFrame:
  """Checks V(H) >= 1/2 - 1/(2H) at delta = 1/H, exactly, for each H."""
  rows = []
  for length in lengths:
    oracle = dp_minimax_oracle(length, fractions.Fraction(1, length))
    bound = minimax_lower_bound(length)
    rows.append({
        'H': length,
        'oracle': float(oracle),
        'bound': float(bound),
        'passed': bool(oracle >= bound),
    })
  return pd.DataFrame(rows, columns=list(ORACLE_COLUMNS))
