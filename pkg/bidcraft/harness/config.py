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
"""JSON experiment configurations, validated before any work starts.

Every validation failure raises `ConfigError` with a message that starts with
the offending field's name.
"""

import dataclasses
import json
import os
from typing import Any, Dict, Optional, Tuple, Type, TypeVar

from bidcraft.environments import base as environments_base
from bidcraft.policies import policies

SEED_ENV_VAR = 'BIDCRAFT_SEED'

DEFAULT_SWEEP_HORIZONS = tuple(range(2000, 20001, 2000))
DEFAULT_COMPARED_POLICIES = ('hedge', 'restart_hedge', 'ar_prod', 'ar_omd',
                             'bobw')

_ConfigT = TypeVar('_ConfigT')


class ConfigError(ValueError):
  """An invalid configuration value; the message starts with the field."""


def default_seed(seed: Optional[int] = None) -> int:
  """`seed` if given, else $BIDCRAFT_SEED, else 0."""
  if seed is not None:
    return int(seed)
  value = os.environ.get(SEED_ENV_VAR)
  if value is None:
    return 0
  try:
    return int(value)
  except ValueError:
    raise ConfigError('{} must be an integer, got {!r}'.format(
        SEED_ENV_VAR, value))


def _tuple(config, name: str, convert=None) -> None:
  value = getattr(config, name)
  if isinstance(value, (str, bytes)) or not hasattr(value, '__iter__'):
    raise ConfigError('{} must be a list, got {!r}'.format(name, value))
  try:
    items = tuple(convert(v) if convert else v for v in value)
  except (TypeError, ValueError) as e:
    raise ConfigError('{} has an invalid entry: {}'.format(name, e))
  object.__setattr__(config, name, items)


def _require(condition: bool, name: str, message: str, value: Any) -> None:
  if not condition:
    raise ConfigError('{} {}, got {!r}'.format(name, message, value))


def _check_seed(config) -> None:
  seed = config.base_seed
  _require(seed is None or isinstance(seed, int), 'base_seed',
           'must be an integer', seed)


def _check_workers(config) -> None:
  _require(config.workers is None or config.workers >= 1 or
           config.workers == -1, 'workers', 'must be positive or -1',
           config.workers)


def _check_runs(config) -> None:
  _require(isinstance(config.runs, int) and config.runs >= 1, 'runs',
           'must be a positive integer', config.runs)


@dataclasses.dataclass(frozen=True)
class PolicyConfig:
  """A policy name with constructor overrides."""
  name: str
  params: Dict[str, Any] = dataclasses.field(default_factory=dict)

  def __post_init__(self):
    _require(self.name in policies.get_policy_names(), 'policies',
             'must name known policies {}'.format(policies.get_policy_names()),
             self.name)
    _require(isinstance(self.params, dict), 'policies',
             'params must be an object', self.params)

  @classmethod
  def from_value(cls, value: Any) -> 'PolicyConfig':
    """Accepts a bare name or {"name": ..., "params": {...}}."""
    if isinstance(value, PolicyConfig):
      return value
    if isinstance(value, str):
      return cls(value)
    if isinstance(value, dict) and set(value) <= {'name', 'params'}:
      return cls(value.get('name'), dict(value.get('params') or {}))
    raise ConfigError('policies entries must be a name or {{"name", '
                      '"params"}}, got {!r}'.format(value))

  def to_dict(self) -> Dict[str, Any]:
    return {'name': self.name, 'params': dict(self.params)}


def _policies(config, name: str = 'policies') -> None:
  _tuple(config, name, PolicyConfig.from_value)


@dataclasses.dataclass(frozen=True)
class SweepConfig:
  """The upper-bound experiment grid.

  Attributes:
    patterns: rival bid pattern kinds.
    alphas: exponents of V_T = T^alpha / 4.
    horizons: the horizons T.
    policies: the compared policies.
    runs: replications per cell; run r uses seed base_seed + r.
    base_seed: first seed; see `default_seed`.
    output_path: where the results CSV is written.
    workers: joblib worker count; -1 or unset uses every core.
    record_timing: write wall_ms; without it the column is 0 so that re-runs
      are byte-identical.
  """
  patterns: Tuple[str, ...] = ('constant',)
  alphas: Tuple[float, ...] = (0.5,)
  horizons: Tuple[int, ...] = DEFAULT_SWEEP_HORIZONS
  policies: Tuple[PolicyConfig, ...] = DEFAULT_COMPARED_POLICIES
  runs: int = 50
  base_seed: Optional[int] = None
  output_path: Optional[str] = None
  workers: Optional[int] = None
  record_timing: bool = True

  def __post_init__(self):
    _tuple(self, 'patterns')
    for pattern in self.patterns:
      _require(pattern in environments_base.PATTERN_KINDS, 'patterns',
               'must be among {}'.format(environments_base.PATTERN_KINDS),
               pattern)
    _tuple(self, 'alphas', float)
    for alpha in self.alphas:
      _require(alpha >= 0, 'alphas', 'must be nonnegative', alpha)
    _tuple(self, 'horizons', int)
    for horizon in self.horizons:
      _require(horizon >= 1, 'horizons', 'must be positive', horizon)
    _policies(self)
    _check_runs(self)
    _check_seed(self)
    _check_workers(self)


@dataclasses.dataclass(frozen=True)
class PacingConfig:
  """The budget-pacing comparison.

  Attributes:
    horizon: the number of rounds T.
    opponents: the number of pacing opponents K.
    regimes: budget regimes, 'sufficient' (T/20) and/or 'insufficient' (T/40).
    patterns: the opponents' value patterns.
    alphas: exponents of the patterns' V_T = T^alpha / 4.
    policies: the compared learners.
    runs: replications per cell.
    base_seed: first seed; see `default_seed`.
    value_distribution: see `EnvironmentSpec.value_distribution`.
    opponent_noise: see `EnvironmentSpec.opponent_noise`.
    output_path: where the comparison CSV is written.
    workers: joblib worker count; -1 or unset uses every core.
  """
  horizon: int = 12000
  opponents: int = 20
  regimes: Tuple[str, ...] = ('sufficient', 'insufficient')
  patterns: Tuple[str, ...] = ('constant',)
  alphas: Tuple[float, ...] = (0.5,)
  policies: Tuple[PolicyConfig, ...] = DEFAULT_COMPARED_POLICIES
  runs: int = 50
  base_seed: Optional[int] = None
  value_distribution: str = 'pattern'
  opponent_noise: float = 0.0
  output_path: Optional[str] = None
  workers: Optional[int] = None

  def __post_init__(self):
    _require(isinstance(self.horizon, int) and self.horizon >= 1, 'horizon',
             'must be a positive integer', self.horizon)
    _require(isinstance(self.opponents, int) and self.opponents >= 1,
             'opponents', 'must be a positive integer', self.opponents)
    _tuple(self, 'regimes')
    for regime in self.regimes:
      _require(regime in environments_base.BUDGET_REGIMES, 'regimes',
               'must be among {}'.format(
                   sorted(environments_base.BUDGET_REGIMES)), regime)
    _tuple(self, 'patterns')
    for pattern in self.patterns:
      _require(pattern in environments_base.PATTERN_KINDS, 'patterns',
               'must be among {}'.format(environments_base.PATTERN_KINDS),
               pattern)
    _tuple(self, 'alphas', float)
    for alpha in self.alphas:
      _require(alpha >= 0, 'alphas', 'must be nonnegative', alpha)
    _policies(self)
    _check_runs(self)
    _check_seed(self)
    _check_workers(self)
    _require(self.value_distribution in environments_base.VALUE_DISTRIBUTIONS,
             'value_distribution', 'must be among {}'.format(
                 environments_base.VALUE_DISTRIBUTIONS),
             self.value_distribution)
    _require(self.opponent_noise >= 0, 'opponent_noise', 'must be nonnegative',
             self.opponent_noise)


@dataclasses.dataclass(frozen=True)
class LowerBoundConfig:
  """The minimax oracle table and, optionally, the empirical checks.

  Attributes:
    lengths: batch lengths H for the exact oracle table.
    empirical: also measure every policy on the adversarial sequences.
    policies: the measured policies.
    variation_horizon: T of the variation-constrained sequence.
    variation_target: its V_T; defaults to sqrt(T).
    switch_horizon: T of the switch-constrained sequence.
    switch_target: its L_T.
    runs: seeds per measurement.
    base_seed: first seed; see `default_seed`.
    output_path: where the oracle table CSV is written.
    workers: joblib worker count; -1 or unset uses every core.
  """
  lengths: Tuple[int, ...] = tuple(range(2, 51))
  empirical: bool = False
  policies: Tuple[PolicyConfig, ...] = DEFAULT_COMPARED_POLICIES
  variation_horizon: int = 10000
  variation_target: Optional[float] = None
  switch_horizon: int = 9000
  switch_target: int = 300
  runs: int = 100
  base_seed: Optional[int] = None
  output_path: Optional[str] = None
  workers: Optional[int] = None

  def __post_init__(self):
    _tuple(self, 'lengths', int)
    for length in self.lengths:
      _require(length >= 2, 'lengths', 'must be at least 2', length)
    _policies(self)
    _require(self.variation_horizon >= 1, 'variation_horizon',
             'must be positive', self.variation_horizon)
    _require(self.variation_target is None or self.variation_target > 0,
             'variation_target', 'must be positive', self.variation_target)
    _require(self.switch_horizon >= 1, 'switch_horizon', 'must be positive',
             self.switch_horizon)
    _require(1 <= self.switch_target <= self.switch_horizon / 3.0,
             'switch_target', 'must lie in [1, switch_horizon / 3]',
             self.switch_target)
    _check_runs(self)
    _check_seed(self)
    _check_workers(self)


@dataclasses.dataclass(frozen=True)
class SimulationConfig:
  """A single episode.

  Attributes:
    policy: the policy to play.
    environment: `EnvironmentSpec` fields.
    seed: the replication seed; see `default_seed`.
    output_path: where the trace CSV is written.
  """
  policy: PolicyConfig = dataclasses.field(
      default_factory=lambda: PolicyConfig('ar_prod'))
  environment: Dict[str, Any] = dataclasses.field(
      default_factory=lambda: {'kind': 'sinusoidal', 'horizon': 5000,
                               'alpha': 0.5})
  seed: Optional[int] = None
  output_path: Optional[str] = None

  def __post_init__(self):
    object.__setattr__(self, 'policy', PolicyConfig.from_value(self.policy))
    _require(isinstance(self.environment, dict), 'environment',
             'must be an object', self.environment)
    _require(self.seed is None or isinstance(self.seed, int), 'seed',
             'must be an integer', self.seed)
    self.environment_spec()

  def environment_spec(self) -> environments_base.EnvironmentSpec:
    try:
      return environments_base.EnvironmentSpec.from_dict(self.environment)
    except (TypeError, ValueError) as e:
      raise ConfigError(str(e))


def from_dict(config_class: Type[_ConfigT],
              payload: Dict[str, Any]) -> _ConfigT:
  """Builds `config_class` from a parsed JSON object."""
  if not isinstance(payload, dict):
    raise ConfigError('config must be a JSON object, got {!r}'.format(
        type(payload).__name__))
  names = {field.name for field in dataclasses.fields(config_class)}
  unknown = sorted(set(payload) - names)
  if unknown:
    raise ConfigError('{} is not a {} field'.format(
        unknown[0], config_class.__name__))
  try:
    return config_class(**payload)
  except ConfigError:
    raise
  except (TypeError, ValueError) as e:
    raise ConfigError('config: {}'.format(e))


def load_config(config_class: Type[_ConfigT],
                path: Optional[str] = None) -> _ConfigT:
  """Parses the JSON file at `path`, or returns the defaults without one."""
  if not path:
    return config_class()
  try:
    with open(path, 'r', encoding='utf-8') as f:
      payload = json.load(f)
  except OSError as e:
    raise ConfigError('config: cannot read {}: {}'.format(path, e))
  except json.JSONDecodeError as e:
    raise ConfigError('config: {} is not valid JSON: {}'.format(path, e))
  return from_dict(config_class, payload)


def to_dict(config) -> Dict[str, Any]:
  """The JSON form of a config, with policies as name/params objects."""
  payload = {}
  for field in dataclasses.fields(config):
    value = getattr(config, field.name)
    if isinstance(value, PolicyConfig):
      value = value.to_dict()
    elif isinstance(value, tuple):
      value = [v.to_dict() if isinstance(v, PolicyConfig) else v
               for v in value]
    payload[field.name] = value
  return payload


def override(config: _ConfigT, **changes: Any) -> _ConfigT:
  """Returns `config` with the non-None `changes` applied and re-validated."""
  changes = {k: v for k, v in changes.items() if v is not None}
  if not changes:
    return config
  try:
    return dataclasses.replace(config, **changes)
  except ConfigError:
    raise
  except (TypeError, ValueError) as e:
    raise ConfigError('config: {}'.format(e))
