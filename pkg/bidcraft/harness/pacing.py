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
"""Compares learners inside the budget-pacing market."""

import itertools
from typing import Optional, Tuple

from absl import logging
import joblib
import pandas as pd

from bidcraft.environments import base as environments_base
from bidcraft.harness import config as config_lib
from bidcraft.harness import episode

PACING_COLUMNS = ('regime', 'pattern', 'alpha', 'policy', 'mean_reward', 'std',
                  'runs', 'mean_batches')
_GROUP = ['regime', 'pattern', 'alpha', 'policy']


def _play(spec: environments_base.EnvironmentSpec,
          policy: config_lib.PolicyConfig, seed: int) -> Tuple[float, int]:
  """The learner's realized cumulative reward and its number of batches."""
  learner = episode.build_policy(policy.name, spec, seed, **policy.params)
  trace = episode.run_episode(learner, spec, seed)
  return trace.total_reward, len(trace.batch_starts)


def run_pacing_comparison(config: config_lib.PacingConfig,
                          workers: Optional[int] = None) -> pd.DataFrame:
  """Mean and std of each policy's realized cumulative reward.

  `mean_batches` is the mean number of batches the learner played, 1 for
  policies that never restart; it shows how often a restart scheme reset its
  weights in the market. Every run fails with `EpisodeError` if the market's
  budgets do not balance.

  Args:
    config: the comparison configuration.
    workers: overrides `config.workers`; with neither set every core is
      used.

  Returns:
    A frame with columns PACING_COLUMNS, one row per (regime, pattern, alpha,
    policy) in config order.
  """
  base_seed = config_lib.default_seed(config.base_seed)
  cells = []
  for regime, pattern, alpha, policy, run in itertools.product(
      config.regimes, config.patterns, config.alphas, config.policies,
      range(config.runs)):
    spec = environments_base.EnvironmentSpec(
        kind='budget_pacing', horizon=config.horizon, alpha=alpha,
        opponents=config.opponents, budget_regime=regime, pattern=pattern,
        value_distribution=config.value_distribution,
        opponent_noise=config.opponent_noise)
    cells.append((regime, pattern, alpha, policy, spec, base_seed + run))
  logging.info('Running %d budget-pacing episodes.', len(cells))
  outcomes = joblib.Parallel(n_jobs=workers or config.workers or -1)(
      joblib.delayed(_play)(spec, policy, seed)
      for _, _, _, policy, spec, seed in cells)
  runs = pd.DataFrame(
      [(regime, pattern, alpha, policy.name, reward, batches)
       for (regime, pattern, alpha, policy, _, _), (reward, batches) in zip(
           cells, outcomes)],
      columns=_GROUP + ['reward', 'batches'])
  table = runs.groupby(_GROUP, sort=False).agg(
      mean_reward=('reward', 'mean'), std=('reward', 'std'),
      runs=('reward', 'size'),
      mean_batches=('batches', 'mean')).reset_index()
  table['std'] = table['std'].fillna(0.0)
  table = table[list(PACING_COLUMNS)]
  if config.output_path:
    logging.info('Writing the pacing comparison to %s', config.output_path)
    table.to_csv(config.output_path, index=False, lineterminator='\n')
  return table
