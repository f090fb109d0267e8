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
"""Empirical checks of the regret lower bounds on the adversarial sequences."""

import dataclasses
import math
from typing import Any, Dict, Iterable, Optional

from absl import logging
import joblib
import numpy as np

from bidcraft.environments import base as environments_base
from bidcraft.harness import episode

# One-sided slack, in standard errors of the mean.
SIGMA_SLACK = 3.0
VARIATION_BOUND_SCALE = 1.0 / 16.0
SWITCH_BOUND_SCALE = 1.0 / 8.0


@dataclasses.dataclass(frozen=True)
class LowerBoundReport:
  """Mean regret of a policy on a lower-bound sequence vs. the bound."""
  policy: str
  kind: str
  horizon: int
  budget: float
  runs: int
  mean_regret: float
  std_regret: float
  bound: float

  @property
  def slack(self) -> float:
    return SIGMA_SLACK * self.std_regret / math.sqrt(self.runs)

  @property
  def passed(self) -> bool:
    return self.mean_regret + self.slack >= self.bound

  def to_dict(self) -> Dict[str, Any]:
    payload = dataclasses.asdict(self)
    payload['slack'] = self.slack
    payload['passed'] = self.passed
    return payload


def regret_lower_bound(spec: environments_base.EnvironmentSpec) -> float:
  """sqrt(T * V_T) / 16 for lower_bound_vt, L_T / 8 for lower_bound_lt."""
  if spec.kind == 'lower_bound_vt':
    return VARIATION_BOUND_SCALE * math.sqrt(
        spec.horizon * spec.variation_budget)
  if spec.kind == 'lower_bound_lt':
    return SWITCH_BOUND_SCALE * spec.switch_target
  raise ValueError('Unrecognized lower bound kind: {!r}'.format(spec.kind))


def _final_regret(policy_name: str,
                  policy_params: Dict[str, Any],
                  spec: environments_base.EnvironmentSpec,
                  seed: int) -> float:
  policy = episode.build_policy(policy_name, spec, seed, **policy_params)
  return episode.run_episode(policy, spec, seed).final_regret


def empirical_lower_bound(
    policy_name: str,
    kind: str,
    horizon: int,
    variation_target: Optional[float] = None,
    switch_target: Optional[int] = None,
    seeds: Iterable[int] = range(100),
    policy_params: Optional[Dict[str, Any]] = None,
    workers: Optional[int] = None) -> LowerBoundReport:
  """Measures a policy's mean regret over seeds on a lower-bound generator.

  Args:
    policy_name: a name from `policies.get_policy_names()`.
    kind: 'lower_bound_vt' or 'lower_bound_lt'.
    horizon: the number of rounds T.
    variation_target: V_T for 'lower_bound_vt'; defaults to sqrt(T).
    switch_target: L_T for 'lower_bound_lt'.
    seeds: one replication per seed; each seeds both policy and environment.
    policy_params: extra policy constructor kwargs.
    workers: joblib worker count; None uses every core.

  Returns:
    A `LowerBoundReport`.
  """
  if kind == 'lower_bound_vt' and variation_target is None:
    variation_target = math.sqrt(horizon)
  if kind == 'lower_bound_lt' and switch_target is None:
    raise ValueError('switch_target is required for lower_bound_lt')
  spec = environments_base.EnvironmentSpec(
      kind=kind, horizon=horizon, variation_target=variation_target,
      switch_target=switch_target)
  bound = regret_lower_bound(spec)
  seeds = list(seeds)
  policy_params = dict(policy_params or {})
  regrets = np.array(joblib.Parallel(n_jobs=workers or -1)(
      joblib.delayed(_final_regret)(policy_name, policy_params, spec, seed)
      for seed in seeds))
  report = LowerBoundReport(
      policy=policy_name,
      kind=kind,
      horizon=horizon,
      budget=float(spec.variation_budget if kind == 'lower_bound_vt'
                   else switch_target),
      runs=len(seeds),
      mean_regret=float(np.mean(regrets)),
      std_regret=float(np.std(regrets, ddof=1)) if len(seeds) > 1 else 0.0,
      bound=bound)
  logging.info('%s on %s (T=%d): mean regret %.3f vs bound %.3f, passed=%s',
               policy_name, kind, horizon, report.mean_regret, bound,
               report.passed)
  return report
