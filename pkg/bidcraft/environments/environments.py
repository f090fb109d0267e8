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
"""Environment getter utility."""

import json
from typing import Any, Dict, List

from absl import logging

from bidcraft.environments.base import BaseEnvironment
from bidcraft.environments.base import EnvironmentSpec
from bidcraft.environments.budget_pacing import BudgetPacingEnvironment
from bidcraft.environments.lower_bound import LowerBoundEnvironment
from bidcraft.environments.patterns import PatternEnvironment


_ENVIRONMENTS = {
    'budget_pacing': BudgetPacingEnvironment,
    'constant': PatternEnvironment,
    'exponential': PatternEnvironment,
    'linear': PatternEnvironment,
    'lower_bound_lt': LowerBoundEnvironment,
    'lower_bound_vt': LowerBoundEnvironment,
    'multi_segment': PatternEnvironment,
    'sinusoidal': PatternEnvironment,
}


def get_environment_names() -> List[str]:
  return list(_ENVIRONMENTS.keys())


def from_spec(spec: EnvironmentSpec) -> BaseEnvironment:
  if spec.kind not in _ENVIRONMENTS:
    raise ValueError('Unrecognized environment name: {!r}'.format(spec.kind))
  return _ENVIRONMENTS[spec.kind](spec)


def get(
    environment_name: str,
    horizon: int,
    **hyperparameters: Dict[str, Any]) -> BaseEnvironment:
  """Gets an environment by name.

  Args:
    environment_name: Name of the generator family, one of
      get_environment_names().
    horizon: the number of rounds T.
    **hyperparameters: dict of possible kwargs to be passed to
      `EnvironmentSpec`, e.g. alpha, variation_target or seed.

  Returns:
    An environment with a .generate(seed) method, or a .market(seed) method
    for the interactive budget-pacing market.

  Raises:
    ValueError: If environment_name is unrecognized or the spec is invalid.
  """
  logging.info(
      'Building environment %s with additional kwargs:\n%s',
      environment_name,
      json.dumps(hyperparameters, indent=2, sort_keys=True))
  if environment_name not in _ENVIRONMENTS:
    raise ValueError(
        'Unrecognized environment name: {!r}'.format(environment_name))
  spec = EnvironmentSpec(
      kind=environment_name, horizon=horizon, **hyperparameters)
  return _ENVIRONMENTS[environment_name](spec)
