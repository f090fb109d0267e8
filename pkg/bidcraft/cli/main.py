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
r"""Entry point for bidcraft.

Usage:

  bidcraft simulate --policy=ar_prod --env=sinusoidal --T=5000 --alpha=0.5
  bidcraft sweep --config=sweep.json --output=results.csv
  bidcraft slopes results.csv
  bidcraft lowerbound --H=2..10 [--empirical]
  bidcraft pacing --regime=insufficient --pattern=constant --runs=50

Standard output carries only machine-readable results; logs go to standard
error. Exit codes: 0 on success, 2 on a configuration error, 3 on any other
failure.
"""

import dataclasses
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from absl import app
from absl import flags
from absl import logging
import pandas as pd

from bidcraft import utils
from bidcraft.cli import flags as flags_lib
from bidcraft.harness import config as config_lib
from bidcraft.harness import episode
from bidcraft.harness import lower_bounds
from bidcraft.harness import minimax
from bidcraft.harness import pacing
from bidcraft.harness import slopes
from bidcraft.harness import sweep

FLAGS = flags.FLAGS

SUBCOMMANDS = ('simulate', 'sweep', 'slopes', 'lowerbound', 'pacing')

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_RUNTIME_ERROR = 3

EMPIRICAL_COLUMNS = ('policy', 'kind', 'horizon', 'budget', 'runs',
                     'mean_regret', 'std_regret', 'bound', 'slack', 'passed')


@dataclasses.dataclass(frozen=True)
class CommandInvocation:
  """One parsed command line.

  Attributes:
    subcommand: one of SUBCOMMANDS.
    config_path: JSON config of the subcommand.
    seed: seed override.
    output_path: output override.
    arguments: positional arguments after the subcommand.
    verbosity: absl logging verbosity.
    overrides: the remaining flags that were explicitly set, by name.
  """
  subcommand: str
  config_path: Optional[str] = None
  seed: Optional[int] = None
  output_path: Optional[str] = None
  arguments: Tuple[str, ...] = ()
  verbosity: int = 0
  overrides: Dict[str, Any] = dataclasses.field(default_factory=dict)

  def __post_init__(self):
    if self.subcommand not in SUBCOMMANDS:
      raise config_lib.ConfigError(
          'subcommand must be one of {}, got {!r}'.format(
              SUBCOMMANDS, self.subcommand))

  @classmethod
  def from_flags(cls, argv: Sequence[str],
                 program_flag_names: Sequence[str]) -> 'CommandInvocation':
    """Builds an invocation from absl's leftover argv and the parsed FLAGS."""
    positional = list(argv[1:])
    if not positional:
      raise config_lib.ConfigError(
          'subcommand is required, one of {}'.format(SUBCOMMANDS))
    overrides = {
        name: FLAGS[name].value for name in program_flag_names
        if name not in flags_lib.INVOCATION_FLAGS and
        not FLAGS[name].using_default_value
    }
    return cls(
        subcommand=positional[0],
        config_path=FLAGS.config,
        seed=FLAGS.seed,
        output_path=FLAGS.output,
        arguments=tuple(positional[1:]),
        verbosity=FLAGS.verbosity,
        overrides=overrides)

  def get(self, name: str) -> Any:
    return self.overrides.get(name)


def _emit(table: pd.DataFrame, path: Optional[str]) -> None:
  if path:
    logging.info('Writing %d rows to %s', len(table), path)
    table.to_csv(path, index=False, lineterminator='\n')
  else:
    table.to_csv(sys.stdout, index=False, lineterminator='\n')


def _simulate(invocation: CommandInvocation) -> None:
  """Runs one episode and prints its summary line."""
  simulation = config_lib.load_config(config_lib.SimulationConfig,
                                      invocation.config_path)
  environment = dict(simulation.environment)
  for flag_name, field_name in (('env', 'kind'), ('T', 'horizon'),
                                ('alpha', 'alpha'),
                                ('variation_target', 'variation_target'),
                                ('switch_target', 'switch_target')):
    if invocation.get(flag_name) is not None:
      environment[field_name] = invocation.get(flag_name)
  policy = simulation.policy
  if invocation.get('policy') and invocation.get('policy') != policy.name:
    policy = config_lib.PolicyConfig(invocation.get('policy'))
  simulation = config_lib.override(
      simulation, environment=environment, policy=policy,
      seed=invocation.seed, output_path=invocation.output_path)
  spec = simulation.environment_spec()
  seed = config_lib.default_seed(
      simulation.seed if simulation.seed is not None else spec.seed)
  try:
    learner = episode.build_policy(policy.name, spec, seed, **policy.params)
  except (TypeError, ValueError) as e:
    raise config_lib.ConfigError('policy: {}'.format(e))

  trace = episode.run_episode(learner, spec, seed)
  if simulation.output_path:
    trace.write_csv(simulation.output_path)
  else:
    logging.warning('Not saving the trace; pass --output to keep it.')
  print('final_regret={} V_T={} L_T={}'.format(
      utils.format_number(trace.final_regret),
      utils.format_number(trace.variation_measured),
      trace.switches_measured))


def _single(value):
  return None if value is None else (value,)


def _sweep(invocation: CommandInvocation) -> None:
  sweep_config = config_lib.override(
      config_lib.load_config(config_lib.SweepConfig, invocation.config_path),
      patterns=_single(invocation.get('pattern')),
      alphas=_single(invocation.get('alpha')),
      horizons=_single(invocation.get('T')),
      policies=_single(invocation.get('policy')),
      runs=invocation.get('runs'),
      base_seed=invocation.seed,
      output_path=invocation.output_path,
      workers=invocation.get('workers'),
      record_timing=invocation.get('record_timing'))
  results = sweep.run_sweep(sweep_config)
  if not sweep_config.output_path:
    _emit(results, None)


def _slopes(invocation: CommandInvocation) -> None:
  if len(invocation.arguments) != 1:
    raise config_lib.ConfigError(
        'results: slopes takes exactly one results CSV, got {!r}'.format(
            list(invocation.arguments)))
  path = invocation.arguments[0]
  if not os.path.exists(path):
    raise config_lib.ConfigError('results: no such file {!r}'.format(path))
  table = slopes.slope_table(
      path,
      aggregation=invocation.get('aggregation') or 'mean',
      with_reference=bool(invocation.get('reference')))
  _emit(table, invocation.output_path)


def _empirical_path(path: Optional[str]) -> Optional[str]:
  if not path:
    return None
  stem, extension = os.path.splitext(path)
  return stem + '_empirical' + (extension or '.csv')


def _lowerbound(invocation: CommandInvocation) -> None:
  """Writes the exact oracle table and, with --empirical, the policy checks."""
  lengths = None
  if invocation.get('H'):
    try:
      lengths = utils.parse_int_range(invocation.get('H'))
    except ValueError:
      raise config_lib.ConfigError('H must look like 2..10 or 2,3,5, got '
                                   '{!r}'.format(invocation.get('H')))
  lower = config_lib.override(
      config_lib.load_config(config_lib.LowerBoundConfig,
                             invocation.config_path),
      lengths=lengths,
      empirical=invocation.get('empirical'),
      variation_target=invocation.get('variation_target'),
      switch_target=invocation.get('switch_target'),
      policies=_single(invocation.get('policy')),
      runs=invocation.get('runs'),
      base_seed=invocation.seed,
      output_path=invocation.output_path,
      workers=invocation.get('workers'))
  table = minimax.oracle_table(lower.lengths)
  if not table['passed'].all():
    logging.warning('The oracle fell below the bound for H in %s',
                    table.loc[~table['passed'], 'H'].tolist())
  _emit(table, lower.output_path)
  if not lower.empirical:
    return

  base_seed = config_lib.default_seed(lower.base_seed)
  seeds = range(base_seed, base_seed + lower.runs)
  rows = []
  for policy in lower.policies:
    for kind, horizon, target in (
        ('lower_bound_vt', lower.variation_horizon, lower.variation_target),
        ('lower_bound_lt', lower.switch_horizon, lower.switch_target)):
      budget = ({'variation_target': target} if kind == 'lower_bound_vt'
                else {'switch_target': target})
      report = lower_bounds.empirical_lower_bound(
          policy.name, kind, horizon, seeds=seeds,
          policy_params=policy.params, workers=lower.workers, **budget)
      rows.append(report.to_dict())
  _emit(pd.DataFrame(rows, columns=list(EMPIRICAL_COLUMNS)),
        _empirical_path(lower.output_path))


def _pacing(invocation: CommandInvocation) -> None:
  pacing_config = config_lib.override(
      config_lib.load_config(config_lib.PacingConfig, invocation.config_path),
      horizon=invocation.get('T'),
      regimes=_single(invocation.get('regime')),
      patterns=_single(invocation.get('pattern')),
      alphas=_single(invocation.get('alpha')),
      policies=_single(invocation.get('policy')),
      runs=invocation.get('runs'),
      base_seed=invocation.seed,
      output_path=invocation.output_path,
      workers=invocation.get('workers'))
  table = pacing.run_pacing_comparison(pacing_config)
  if not pacing_config.output_path:
    _emit(table, None)


_HANDLERS: Dict[str, Callable[[CommandInvocation], None]] = {
    'lowerbound': _lowerbound,
    'pacing': _pacing,
    'simulate': _simulate,
    'slopes': _slopes,
    'sweep': _sweep,
}


def execute(invocation: CommandInvocation) -> int:
  """Runs the invocation and returns the process exit code."""
  logging.info('Running bidcraft %s', invocation.subcommand)
  try:
    _HANDLERS[invocation.subcommand](invocation)
  except config_lib.ConfigError as e:
    logging.error('Configuration error: %s', e)
    print('error: {}'.format(e), file=sys.stderr)
    return EXIT_CONFIG_ERROR
  except Exception as e:  # pylint: disable=broad-except
    logging.exception('bidcraft %s failed', invocation.subcommand)
    print('error: {}: {}'.format(type(e).__name__, e), file=sys.stderr)
    return EXIT_RUNTIME_ERROR
  return EXIT_OK


def main(argv: List[str], program_flag_names: Sequence[str]) -> int:
  try:
    invocation = CommandInvocation.from_flags(argv, program_flag_names)
  except config_lib.ConfigError as e:
    print('error: {}'.format(e), file=sys.stderr)
    return EXIT_CONFIG_ERROR
  program_flags = {name: FLAGS[name].value for name in program_flag_names}
  logging.info('Running with flags:\n%s',
               flags_lib.serialize_flags(program_flags))
  return execute(invocation)


def run_main():
  defined_flag_names = flags_lib.define_flags()
  app.run(lambda argv: sys.exit(main(argv, defined_flag_names)))


if __name__ == '__main__':
  run_main()
