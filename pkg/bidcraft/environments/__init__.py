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
"""Generators of rival bid and valuation sequences."""

from bidcraft.environments.base import BaseEnvironment
from bidcraft.environments.base import EnvironmentSpec
from bidcraft.environments.base import KINDS
from bidcraft.environments.budget_pacing import BudgetPacingEnvironment
from bidcraft.environments.budget_pacing import BudgetPacingMarket
from bidcraft.environments.budget_pacing import pacing_agent_step
from bidcraft.environments.budget_pacing import pacing_bid
from bidcraft.environments.budget_pacing import pacing_update
from bidcraft.environments.budget_pacing import PacingAgentState
from bidcraft.environments.budget_pacing import RoundOutcome
from bidcraft.environments.environments import from_spec
from bidcraft.environments.environments import get
from bidcraft.environments.environments import get_environment_names
from bidcraft.environments.lower_bound import gen_lower_bound_lt
from bidcraft.environments.lower_bound import gen_lower_bound_vt
from bidcraft.environments.lower_bound import jump_batch
from bidcraft.environments.lower_bound import LowerBoundEnvironment
from bidcraft.environments.patterns import gen_building_block
from bidcraft.environments.patterns import gen_multi_segment
from bidcraft.environments.patterns import gen_sinusoidal
from bidcraft.environments.patterns import PatternEnvironment

# When adding a new environment, also add to environments.py for easier user
# access.
