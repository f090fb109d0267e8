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
"""Policy getter utility."""

import json
from typing import Any, Dict, List, Optional

from absl import logging

from bidcraft.policies.ar_omd import AROMDPolicy
from bidcraft.policies.base import BasePolicy
from bidcraft.policies.bobw import BOBWPolicy
from bidcraft.policies.hedge import HedgePolicy
from bidcraft.policies.hedge import RestartHedgePolicy
from bidcraft.policies.prod import ARProdPolicy
from bidcraft.policies.prod import RestartProdPolicy
from bidcraft.policies.reference import ClairvoyantPolicy
from bidcraft.policies.reference import ConstantBidPolicy


_POLICIES = {
    'ar_omd': AROMDPolicy,
    'ar_prod': ARProdPolicy,
    'ar_prod_theory': ARProdPolicy.from_theory,
    'bobw': BOBWPolicy,
    'constant': ConstantBidPolicy,
    'hedge': HedgePolicy,
    'oracle': ClairvoyantPolicy,
    'restart_hedge': RestartHedgePolicy,
    'restart_prod': RestartProdPolicy,
}


def get_policy_names() -> List[str]:
  return list(_POLICIES.keys())


def get(
    policy_name: str,
    horizon: int,
    seed: Optional[int] = None,
    **hyperparameters: Dict[str, Any]) -> BasePolicy:
  """Gets a bidding policy by name.

  Args:
    policy_name: Name of the policy.
    horizon: the number of rounds T the policy is tuned for.
    seed: the replication seed for the policy's randomization.
    **hyperparameters: dict of possible kwargs to be passed to the policy
      constructor.

  Returns:
    A fresh policy with .propose(valuation) and .observe(round) methods.

  Raises:
    ValueError: If policy_name is unrecognized.
  """
  logging.info(
      'Building policy %s with additional kwargs:\n%s',
      policy_name,
      json.dumps(hyperparameters, indent=2, sort_keys=True))
  if policy_name not in _POLICIES:
    raise ValueError('Unrecognized policy name: {!r}'.format(policy_name))

  policy_class = _POLICIES[policy_name]
  return policy_class(horizon=horizon, seed=seed, **hyperparameters)
