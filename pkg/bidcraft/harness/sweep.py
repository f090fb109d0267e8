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
"""The upper-bound sweep: patterns x alphas x horizons x policies x runs."""

import dataclasses
import itertools
import time
from typing import Any, Dict, List, Optional

from absl import logging
import joblib
import numpy as np
import pandas as pd

from bidcraft.environments import base as environments_base
from bidcraft.harness import config as config_lib
from bidcraft.harness import episode

RESULT_COLUMNS = ('pattern', 'alpha', 'T', 'policy', 'seed',
                  'final_regret_expected', 'final_regret_realized',
                  'V_T_measured', 'L_T_measured', 'wall_ms')


@dataclasses.dataclass(frozen=True)
class SweepCell:
  pattern: str
  alpha: float
  horizon: int
  policy: config_lib.PolicyConfig
  seed: int


def sweep_cells(config: config_lib.SweepConfig) -> List[SweepCell]:
  """Every cell of the sweep, in the deterministic output order."""
  base_seed = config_lib.default_seed(config.base_seed)
  return [
      SweepCell(pattern, alpha, horizon, policy, base_seed + run)
      for pattern, alpha, horizon, policy, run in itertools.product(
          config.patterns, config.alphas, config.horizons, config.policies,
          range(config.runs))
  ]


def run_cell(cell: SweepCell, record_timing: bool = True) -> Dict[str, Any]:
  """Runs one replication. Failures become NaN rows instead of raising."""
  start = time.perf_counter()
  row = {
      'pattern': cell.pattern,
      'alpha': cell.alpha,
      'T': cell.horizon,
      'policy': cell.policy.name,
      'seed': cell.seed,
  }
  try:
    spec = environments_base.EnvironmentSpec(
        kind=cell.pattern, horizon=cell.horizon, alpha=cell.alpha,
        seed=cell.seed)
    policy = episode.build_policy(cell.policy.name, spec, cell.seed,
                                  **cell.policy.params)
    trace = episode.run_episode(policy, spec, cell.seed)
    row.update(
        final_regret_expected=trace.final_regret,
        final_regret_realized=trace.final_regret_realized,
        V_T_measured=trace.variation_measured,
        L_T_measured=trace.switches_measured)
  except Exception as e:  # pylint: disable=broad-except
    logging.warning('Sweep cell %s failed: %s', cell, e)
    row.update(
        final_regret_expected=np.nan,
        final_regret_realized=np.nan,
        V_T_measured=np.nan,
        L_T_measured=np.nan)
  row['wall_ms'] = (
      1000.0 * (time.perf_counter() - start) if record_timing else 0.0)
  return row


def run_sweep(config: config_lib.SweepConfig,
              workers: Optional[int] = None) -> pd.DataFrame:
  """Runs every cell of `config` and returns one row per cell.

  Rows come back in `sweep_cells` order whatever the worker count. If the
  config names an output path, the rows are also written there as CSV.

  Args:
    config: the sweep configuration.
    workers: overrides `config.workers`; with neither set every core is
      used.

  Returns:
    A frame with columns RESULT_COLUMNS.
  """
  cells = sweep_cells(config)
  logging.info('Running %d sweep cells.', len(cells))
  rows = joblib.Parallel(n_jobs=workers or config.workers or -1)(
      joblib.delayed(run_cell)(cell, config.record_timing) for cell in cells)
  frame = pd.DataFrame(rows, columns=list(RESULT_COLUMNS))
  failed = int(frame['final_regret_expected'].isna().sum())
  if failed:
    logging.warning('%d of %d sweep cells failed.', failed, len(cells))
  if config.output_path:
    write_results(frame, config.output_path)
  return frame


def write_results(frame: pd.DataFrame, path: str) -> None:
  logging.info('Writing %d rows to %s', len(frame), path)
  frame.to_csv(path, index=False, lineterminator='\n')
