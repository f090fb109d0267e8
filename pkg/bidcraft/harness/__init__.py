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
"""Experiment runners, regret accounting and lower-bound checks."""

from bidcraft.harness.config import ConfigError
from bidcraft.harness.config import LowerBoundConfig
from bidcraft.harness.config import PacingConfig
from bidcraft.harness.config import PolicyConfig
from bidcraft.harness.config import SimulationConfig
from bidcraft.harness.config import SweepConfig
from bidcraft.harness.decomposition import DecompositionReport
from bidcraft.harness.decomposition import grid_dynamic_regret
from bidcraft.harness.decomposition import regret_decomposition
from bidcraft.harness.episode import EpisodeError
from bidcraft.harness.episode import RegretTrace
from bidcraft.harness.episode import run_episode
from bidcraft.harness.lower_bounds import empirical_lower_bound
from bidcraft.harness.lower_bounds import LowerBoundReport
from bidcraft.harness.minimax import brute_force_minimax
from bidcraft.harness.minimax import dp_minimax_oracle
from bidcraft.harness.minimax import oracle_table
from bidcraft.harness.pacing import run_pacing_comparison
from bidcraft.harness.slopes import fit_loglog_slope
from bidcraft.harness.slopes import slope_table
from bidcraft.harness.slopes import SlopeReport
from bidcraft.harness.sweep import run_sweep
