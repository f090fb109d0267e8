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
"""Log-log slope fits of final regret against the horizon."""

import dataclasses
from typing import Iterable, Tuple, Union

from absl import logging
import numpy as np
import pandas as pd
from scipy import stats

# Regrets are floored here before taking logs.
REGRET_FLOOR = 1e-9

SLOPE_COLUMNS = ('pattern', 'alpha', 'policy', 'slope', 'intercept',
                 'residual', 'n_points')

AGGREGATIONS = ('mean', 'log_mean')


@dataclasses.dataclass(frozen=True)
class SlopeReport:
  """Least-squares fit of ln(regret) = slope * ln(T) + intercept.

  Attributes:
    horizons: the distinct horizons T, ascending.
    mean_regrets: the aggregated final regret per horizon.
    slope: fitted exponent.
    intercept: fitted log-scale intercept.
    residual: Euclidean norm of the fit's residuals in log space.
    run_count: the number of (T, regret) points that went into the fit.
  """
  horizons: np.ndarray
  mean_regrets: np.ndarray
  slope: float
  intercept: float
  residual: float
  run_count: int

  @property
  def n_points(self) -> int:
    return int(self.horizons.size)


def reference_exponent(alpha: float) -> float:
  """(1 + alpha) / 2, the exponent of sqrt(T * V_T) when V_T ~ T^alpha."""
  return (1.0 + alpha) / 2.0


def fit_loglog_slope(points: Iterable[Tuple[float, float]],
                     aggregation: str = 'mean') -> SlopeReport:
  """Fits the log-log slope of regret against T.

  Args:
    points: (T, final regret) pairs, possibly several runs per T.
    aggregation: 'mean' averages the runs at each T and then takes logs;
      'log_mean' averages the logs of the individual runs.

  Returns:
    A `SlopeReport`.

  Raises:
    ValueError: with fewer than two distinct horizons.
  """
  if aggregation not in AGGREGATIONS:
    raise ValueError('Unrecognized aggregation: {!r}'.format(aggregation))
  frame = pd.DataFrame(list(points), columns=['T', 'regret'], dtype=np.float64)
  frame['log_regret'] = np.log(np.maximum(frame['regret'], REGRET_FLOOR))
  grouped = frame.groupby('T', sort=True)
  if len(grouped) < 2:
    raise ValueError('At least two distinct horizons are needed, got {!r}'
                     .format(sorted(set(frame['T']))))
  horizons = np.asarray(grouped.size().index, dtype=np.float64)
  if aggregation == 'mean':
    mean_regrets = grouped['regret'].mean().to_numpy()
    log_regrets = np.log(np.maximum(mean_regrets, REGRET_FLOOR))
  else:
    log_regrets = grouped['log_regret'].mean().to_numpy()
    mean_regrets = np.exp(log_regrets)
  log_horizons = np.log(horizons)
  fit = stats.linregress(log_horizons, log_regrets)
  residuals = log_regrets - (fit.slope * log_horizons + fit.intercept)
  return SlopeReport(
      horizons=horizons,
      mean_regrets=mean_regrets,
      slope=float(fit.slope),
      intercept=float(fit.intercept),
      residual=float(np.linalg.norm(residuals)),
      run_count=len(frame))


def slope_table(results: Union[pd.DataFrame, str],
                aggregation: str = 'mean',
                with_reference: bool = False) -> pd.DataFrame:
  """Fits one slope per (pattern, alpha, policy) of a sweep results table.

  Args:
    results: the sweep results, or the path of its CSV.
    aggregation: see `fit_loglog_slope`.
    with_reference: append the (1 + alpha) / 2 reference exponent as a
      `reference` column.

  Returns:
    A frame with columns SLOPE_COLUMNS, in sorted group order. Groups with
    fewer than two usable horizons are skipped.
  """
  if isinstance(results, str):
    results = pd.read_csv(results)
  failed = results['final_regret_expected'].isna()
  if failed.any():
    logging.warning('Dropping %d failed rows before fitting slopes.',
                    int(failed.sum()))
    results = results[~failed]
  rows = []
  for (pattern, alpha, policy), group in results.groupby(
      ['pattern', 'alpha', 'policy'], sort=True):
    points = zip(group['T'], group['final_regret_expected'])
    try:
      report = fit_loglog_slope(points, aggregation)
    except ValueError as e:
      logging.warning('Skipping %s/%s/%s: %s', pattern, alpha, policy, e)
      continue
    row = {
        'pattern': pattern,
        'alpha': alpha,
        'policy': policy,
        'slope': report.slope,
        'intercept': report.intercept,
        'residual': report.residual,
        'n_points': report.n_points,
    }
    if with_reference:
      row['reference'] = reference_exponent(alpha)
    rows.append(row)
  columns = list(SLOPE_COLUMNS) + (['reference'] if with_reference else [])
  return pd.DataFrame(rows, columns=columns)


def write_slope_table(table: pd.DataFrame, path: str) -> None:
  table.to_csv(path, index=False, lineterminator='\n')
