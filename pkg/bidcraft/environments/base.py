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
"""Abstract base classes which define the interface for environments."""

import abc
import dataclasses
import hashlib
import json
from typing import Any, Dict, Optional, Tuple

import numpy as np

from bidcraft import auction_core
from bidcraft import utils

PATTERN_KINDS = ('constant', 'exponential', 'linear', 'multi_segment',
                 'sinusoidal')
LOWER_BOUND_KINDS = ('lower_bound_vt', 'lower_bound_lt')
KINDS = PATTERN_KINDS + LOWER_BOUND_KINDS + ('budget_pacing',)

BUDGET_REGIMES = {'sufficient': 20.0, 'insufficient': 40.0}
VALUE_DISTRIBUTIONS = ('pattern', 'uniform', 'truncated_gaussian', 'beta')

# Random stream keys, kept apart from the keys policies use.
RIVAL_STREAM = 101
VALUATION_STREAM = 102
OPPONENT_STREAM = 103


@dataclasses.dataclass(frozen=True)
class EnvironmentSpec:
  """Declarative description of how (v_t, m_t) sequences are generated.

  Attributes:
    kind: the generator family, one of KINDS.
    horizon: the number of rounds T.
    alpha: exponent of the default variation budget V_T = T^alpha / 4.
    variation_target: explicit V_T, takes precedence over `alpha`.
    switch_target: L_T for the switch-constrained lower bound.
    beta: the jump location of a building block is uniform on
      {1, ..., floor(beta * H)}.
    seed: default replication seed.
    opponents: number of budget-pacing opponents K.
    budgets: explicit per-opponent budgets B_k.
    budget_regime: 'sufficient' (B_k = T/20) or 'insufficient' (B_k = T/40)
      when `budgets` is not given.
    value_scale: scaling of the common opponent value pattern.
    pattern: the opponents' value pattern in the budget-pacing market.
    value_distribution: 'pattern' for pattern-driven opponent values, or a
      distribution ('uniform', 'truncated_gaussian', 'beta') from which the
      learner and every opponent draw i.i.d. values.
    opponent_noise: half-width of the per-opponent uniform jitter added to
      the common value pattern.
  """
  kind: str
  horizon: int
  alpha: Optional[float] = None
  variation_target: Optional[float] = None
  switch_target: Optional[int] = None
  beta: float = 2.0 / 3.0
  seed: Optional[int] = None
  opponents: int = 20
  budgets: Optional[Tuple[float, ...]] = None
  budget_regime: str = 'sufficient'
  value_scale: float = 0.8
  pattern: str = 'constant'
  value_distribution: str = 'pattern'
  opponent_noise: float = 0.0

  def __post_init__(self):
    if self.kind not in KINDS:
      raise ValueError('kind must be one of {}, got {!r}'.format(
          KINDS, self.kind))
    if int(self.horizon) != self.horizon or self.horizon < 1:
      raise ValueError('horizon must be a positive integer, got {!r}'.format(
          self.horizon))
    if self.alpha is not None and self.alpha < 0:
      raise ValueError('alpha must be nonnegative, got {!r}'.format(self.alpha))
    if self.variation_target is not None and self.variation_target < 0:
      raise ValueError('variation_target must be nonnegative, got {!r}'.format(
          self.variation_target))
    if self.switch_target is not None and self.switch_target < 1:
      raise ValueError('switch_target must be positive, got {!r}'.format(
          self.switch_target))
    if not 0.0 < self.beta <= 1.0:
      raise ValueError('beta must lie in (0, 1], got {!r}'.format(self.beta))
    if self.opponents < 1:
      raise ValueError('opponents must be positive, got {!r}'.format(
          self.opponents))
    if self.budgets is not None:
      object.__setattr__(self, 'budgets',
                         tuple(float(b) for b in self.budgets))
      if len(self.budgets) != self.opponents:
        raise ValueError(
            'budgets must list one budget per opponent ({}), got {}'.format(
                self.opponents, len(self.budgets)))
      if any(b <= 0 for b in self.budgets):
        raise ValueError('budgets must be positive, got {!r}'.format(
            self.budgets))
    if self.budget_regime not in BUDGET_REGIMES:
      raise ValueError('budget_regime must be one of {}, got {!r}'.format(
          sorted(BUDGET_REGIMES), self.budget_regime))
    if not 0.0 < self.value_scale <= 1.0:
      raise ValueError('value_scale must lie in (0, 1], got {!r}'.format(
          self.value_scale))
    if self.pattern not in PATTERN_KINDS:
      raise ValueError('pattern must be one of {}, got {!r}'.format(
          PATTERN_KINDS, self.pattern))
    if self.value_distribution not in VALUE_DISTRIBUTIONS:
      raise ValueError('value_distribution must be one of {}, got {!r}'.format(
          VALUE_DISTRIBUTIONS, self.value_distribution))
    if self.opponent_noise < 0:
      raise ValueError('opponent_noise must be nonnegative, got {!r}'.format(
          self.opponent_noise))

  @property
  def variation_budget(self) -> Optional[float]:
    """V_T: `variation_target` if set, else T^alpha / 4, else None."""
    if self.variation_target is not None:
      return float(self.variation_target)
    if self.alpha is not None:
      return self.horizon ** self.alpha / 4.0
    return None

  def opponent_budgets(self) -> Tuple[float, ...]:
    if self.budgets is not None:
      return self.budgets
    budget = self.horizon / BUDGET_REGIMES[self.budget_regime]
    return (budget,) * self.opponents

  def replace(self, **changes: Any) -> 'EnvironmentSpec':
    return dataclasses.replace(self, **changes)

  def to_dict(self) -> Dict[str, Any]:
    payload = dataclasses.asdict(self)
    if payload['budgets'] is not None:
      payload['budgets'] = list(payload['budgets'])
    return payload

  @classmethod
  def from_dict(cls, payload: Dict[str, Any]) -> 'EnvironmentSpec':
    names = {field.name for field in dataclasses.fields(cls)}
    unknown = sorted(set(payload) - names)
    if unknown:
      raise ValueError('{} is not an environment field'.format(unknown[0]))
    return cls(**payload)

  def digest(self) -> str:
    """SHA-256 of the canonical JSON form, stable across processes."""
    canonical = json.dumps(self.to_dict(), sort_keys=True,
                           separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


class BaseEnvironment(abc.ABC):
  """Abstract base environment.

  Static environments pre-generate their whole sequence and require
  subclasses to override _rival_bids (and optionally _valuations).
  Interactive environments set `interactive` and override `market`.
  """

  kinds = ()
  interactive = False

  def __init__(self, spec: EnvironmentSpec):
    if spec.kind not in self.kinds:
      raise ValueError('{} cannot generate kind {!r}'.format(
          type(self).__name__, spec.kind))
    self.spec = spec

  @property
  def horizon(self) -> int:
    return self.spec.horizon

  def _seed(self, seed: Optional[int]) -> Optional[int]:
    return self.spec.seed if seed is None else seed

  def generate(
      self, seed: Optional[int] = None) -> auction_core.AuctionSequence:
    """Returns the (v_t, m_t) sequence for `seed` (default: the spec's)."""
    if self.interactive:
      raise TypeError('{} is interactive; use market() instead.'.format(
          self.spec.kind))
    seed = self._seed(seed)
    rivals = self._rival_bids(utils.make_rng(seed, RIVAL_STREAM))
    valuations = self._valuations(utils.make_rng(seed, VALUATION_STREAM))
    return auction_core.AuctionSequence(valuations, rivals)

  def _rival_bids(self, rng: np.random.Generator) -> np.ndarray:
    raise NotImplementedError('Must override environment _rival_bids!')

  def _valuations(self, rng: np.random.Generator) -> np.ndarray:
    return rng.random(self.horizon)

  def market(self, seed: Optional[int] = None):
    raise NotImplementedError('{} is not interactive.'.format(self.spec.kind))
