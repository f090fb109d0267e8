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
"""Command-line flags."""

from typing import Any, Dict, List

from absl import flags

from bidcraft.environments import base as environments_base
from bidcraft.environments import environments
from bidcraft.harness import slopes
from bidcraft.policies import policies


FLAGS = flags.FLAGS

# Flags that every subcommand reads directly rather than as config overrides.
INVOCATION_FLAGS = ('config', 'seed', 'output')


def serialize_flags(flag_list: Dict[str, Any]) -> str:
  return '\n'.join(
      '--{}={}'.format(name, value) for name, value in flag_list.items())


def define_flags() -> List[str]:
  """Define the program flags and return their names."""
  predefined_flags = set(FLAGS)

  flags.DEFINE_string(
      'config', None, 'Path of the JSON config of the subcommand. Explicitly '
      'passed flags override its fields.')
  flags.DEFINE_integer(
      'seed', None, 'Replication seed, or first seed of a multi-run command. '
      'Falls back to the config, then to $BIDCRAFT_SEED.')
  flags.DEFINE_string(
      'output', None, 'Output CSV path. Without one, tables go to standard '
      'output.')
  flags.DEFINE_integer(
      'workers', None,
      'Concurrent replications; -1 or unset uses every core.')
  flags.DEFINE_integer('runs', None, 'Replications per experiment cell.')

  # Flags relating to a single episode.
  flags.DEFINE_enum(
      'policy', None, policies.get_policy_names(), 'Policy to simulate.')
  flags.DEFINE_enum(
      'env', None, environments.get_environment_names(),
      'Environment kind to simulate.')
  flags.DEFINE_integer('T', None, 'Horizon, the number of rounds.')
  flags.DEFINE_float('alpha', None, 'Exponent of V_T = T^alpha / 4.')
  flags.DEFINE_float('variation_target', None, 'Explicit V_T.')
  flags.DEFINE_integer(
      'switch_target', None, 'L_T of the switch-constrained sequence.')

  # Flags relating to sweeps and slope fits.
  flags.DEFINE_bool(
      'record_timing', True,
      'Write wall-clock times; without them re-runs are byte-identical.')
  flags.DEFINE_enum(
      'aggregation', 'mean', list(slopes.AGGREGATIONS),
      'Average regrets before taking logs (mean) or after (log_mean).')
  flags.DEFINE_bool(
      'reference', False, 'Add the (1 + alpha) / 2 reference exponent column '
      'to slope tables.')

  # Flags relating to the lower bounds.
  flags.DEFINE_string(
      'H', None, "Batch lengths of the oracle table, '2..10' or '2,3,5'.")
  flags.DEFINE_bool(
      'empirical', False, 'Also measure every policy on the adversarial '
      'sequences.')

  # Flags relating to the budget-pacing comparison.
  flags.DEFINE_enum(
      'regime', None, sorted(environments_base.BUDGET_REGIMES),
      'Opponent budget regime.')
  flags.DEFINE_enum(
      'pattern', None, list(environments_base.PATTERN_KINDS),
      'Opponent value pattern.')

  all_flags = set(FLAGS)
  program_flag_names = sorted(list(all_flags - predefined_flags))
  return program_flag_names
