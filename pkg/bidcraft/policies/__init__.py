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
"""Bidding policies over the truncated-constant bid grid."""

from bidcraft.policies.ar_omd import AROMDPolicy
from bidcraft.policies.ar_omd import AROMDState
from bidcraft.policies.base import BasePolicy
from bidcraft.policies.base import batch_spans
from bidcraft.policies.base import expected_reward
from bidcraft.policies.base import ExpertPolicy
from bidcraft.policies.base import Proposal
from bidcraft.policies.bobw import BOBWPolicy
from bidcraft.policies.bobw import BOBWState
from bidcraft.policies.hedge import hedge_step
from bidcraft.policies.hedge import HedgePolicy
from bidcraft.policies.hedge import restart_batch_size
from bidcraft.policies.hedge import RestartHedgePolicy
from bidcraft.policies.policies import get
from bidcraft.policies.policies import get_policy_names
from bidcraft.policies.prod import ARProdPolicy
from bidcraft.policies.prod import compute_optimism
from bidcraft.policies.prod import prod_update
from bidcraft.policies.prod import ProdState
from bidcraft.policies.prod import RestartProdPolicy
from bidcraft.policies.reference import ClairvoyantPolicy
from bidcraft.policies.reference import ConstantBidPolicy

# When adding a new policy, also add to policies.py for easier user access.
