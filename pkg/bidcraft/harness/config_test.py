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
"""Tests for the experiment configurations."""

import json
import os
from unittest import mock

from absl.testing import absltest
from absl.testing import parameterized

from bidcraft.harness import config


class DefaultSeedTest(absltest.TestCase):

  def testExplicitSeedWins(self):
    with mock.patch.dict(os.environ, {config.SEED_ENV_VAR: '17'}):
      self.assertEqual(config.default_seed(3), 3)

  def testEnvironmentFallback(self):
    with mock.patch.dict(os.environ, {config.SEED_ENV_VAR: '17'}):
      self.assertEqual(config.default_seed(), 17)

  def testZeroWithoutEither(self):
    with mock.patch.dict(os.environ, {}, clear=True):
      self.assertEqual(config.default_seed(), 0)

  def testRejectsNonInteger(self):
    with mock.patch.dict(os.environ, {config.SEED_ENV_VAR: 'abc'}):
      with self.assertRaisesRegex(config.ConfigError, '^BIDCRAFT_SEED'):
        config.default_seed()


class SweepConfigTest(parameterized.TestCase):

  def testFromDict(self):
    sweep = config.from_dict(config.SweepConfig, {
        'patterns': ['constant', 'linear'],
        'alphas': [0.3, 0.5],
        'horizons': [100, 200],
        'policies': ['hedge', {'name': 'ar_prod', 'params': {'epsilon': 0.1}}],
        'runs': 3,
        'base_seed': 11,
    })
    self.assertEqual(sweep.patterns, ('constant', 'linear'))
    self.assertEqual(sweep.horizons, (100, 200))
    self.assertEqual(sweep.policies[0], config.PolicyConfig('hedge'))
    self.assertEqual(sweep.policies[1].params, {'epsilon': 0.1})
    self.assertTrue(sweep.record_timing)

  def testDictRoundTrip(self):
    sweep = config.SweepConfig(policies=('hedge', 'bobw'), runs=2)
    payload = json.loads(json.dumps(config.to_dict(sweep)))
    self.assertEqual(config.from_dict(config.SweepConfig, payload), sweep)

  @parameterized.parameters(
      ('patterns', {'patterns': ['lower_bound_vt']}),
      ('patterns', {'patterns': 'constant'}),
      ('alphas', {'alphas': [-1.0]}),
      ('alphas', {'alphas': ['fast']}),
      ('horizons', {'horizons': [0]}),
      ('policies', {'policies': ['gradient_descent']}),
      ('policies', {'policies': [{'name': 'hedge', 'lr': 1}]}),
      ('runs', {'runs': 0}),
      ('base_seed', {'base_seed': 'x'}),
      ('workers', {'workers': 0}),
      ('output', {'output': 'results.csv'}))
  def testMessageNamesField(self, field, payload):
    with self.assertRaisesRegex(config.ConfigError, '^' + field):
      config.from_dict(config.SweepConfig, payload)

  def testDefaultPolicies(self):
    self.assertEqual([p.name for p in config.SweepConfig().policies],
                     list(config.DEFAULT_COMPARED_POLICIES))
    self.assertEqual(config.SweepConfig(policies=()).policies, ())

  def testOverride(self):
    sweep = config.SweepConfig(runs=50)
    self.assertEqual(config.override(sweep, runs=5, base_seed=None).runs, 5)
    self.assertIs(config.override(sweep, runs=None), sweep)
    with self.assertRaisesRegex(config.ConfigError, '^runs'):
      config.override(sweep, runs=0)


class OtherConfigsTest(parameterized.TestCase):

  def testPacingDefaults(self):
    pacing = config.PacingConfig()
    self.assertEqual(pacing.horizon, 12000)
    self.assertEqual(pacing.opponents, 20)
    self.assertEqual([p.name for p in pacing.policies],
                     list(config.DEFAULT_COMPARED_POLICIES))

  def testPacingRejectsRegime(self):
    with self.assertRaisesRegex(config.ConfigError, '^regimes'):
      config.PacingConfig(regimes=('lavish',))

  def testLowerBoundDefaults(self):
    lower = config.LowerBoundConfig()
    self.assertEqual(lower.lengths, tuple(range(2, 51)))
    self.assertFalse(lower.empirical)

  @parameterized.parameters(
      ('lengths', {'lengths': [1]}),
      ('switch_target', {'switch_target': 4000}),
      ('variation_target', {'variation_target': 0.0}))
  def testLowerBoundMessageNamesField(self, field, payload):
    with self.assertRaisesRegex(config.ConfigError, '^' + field):
      config.from_dict(config.LowerBoundConfig, payload)

  def testSimulationEnvironmentErrorNamesField(self):
    with self.assertRaisesRegex(config.ConfigError, '^alpha'):
      config.SimulationConfig(
          environment={'kind': 'linear', 'horizon': 100, 'alpha': -1.0})

  def testSimulationEnvironmentUnknownField(self):
    with self.assertRaisesRegex(config.ConfigError, '^speed'):
      config.SimulationConfig(
          environment={'kind': 'linear', 'horizon': 100, 'speed': 2})

  def testSimulationSpec(self):
    simulation = config.SimulationConfig(policy='oracle')
    spec = simulation.environment_spec()
    self.assertEqual(spec.kind, 'sinusoidal')
    self.assertEqual(simulation.policy.name, 'oracle')


class LoadConfigTest(absltest.TestCase):

  def testNoPathGivesDefaults(self):
    self.assertEqual(config.load_config(config.SweepConfig),
                     config.SweepConfig())

  def testLoadsJson(self):
    path = self.create_tempfile(
        content=json.dumps({'horizons': [10, 20], 'policies': ['oracle']}))
    sweep = config.load_config(config.SweepConfig, path.full_path)
    self.assertEqual(sweep.horizons, (10, 20))

  def testInvalidJson(self):
    path = self.create_tempfile(content='{"runs": ')
    with self.assertRaisesRegex(config.ConfigError, '^config'):
      config.load_config(config.SweepConfig, path.full_path)

  def testMissingFile(self):
    with self.assertRaisesRegex(config.ConfigError, '^config'):
      config.load_config(config.SweepConfig,
                         os.path.join(absltest.get_default_test_tmpdir(),
                                      'missing.json'))

  def testTopLevelMustBeObject(self):
    path = self.create_tempfile(content='[1, 2]')
    with self.assertRaisesRegex(config.ConfigError, '^config'):
      config.load_config(config.SweepConfig, path.full_path)


if __name__ == '__main__':
  absltest.main()
