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
"""Tests for the budget-pacing comparison."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np
import pandas as pd

from bidcraft.harness import config
from bidcraft.harness import pacing


def _config(**changes):
  fields = dict(horizon=120, opponents=3, policies=('constant', 'hedge'),
                runs=2, base_seed=1)
  fields.update(changes)
  return config.PacingConfig(**fields)


class PacingComparisonTest(absltest.TestCase):

  def testTableShape(self):
    table = pacing.run_pacing_comparison(_config())
    self.assertEqual(list(table.columns), list(pacing.PACING_COLUMNS))
    self.assertEqual(table['regime'].tolist(),
                     ['sufficient', 'sufficient', 'insufficient',
                      'insufficient'])
    self.assertEqual(table['policy'].tolist(),
                     ['constant', 'hedge', 'constant', 'hedge'])
    self.assertTrue(np.all(table['runs'] == 2))
    self.assertTrue(np.all(table['mean_reward'] >= 0.0))
    self.assertTrue(np.all(table['std'] >= 0.0))

  def testSingleRunHasZeroStd(self):
    table = pacing.run_pacing_comparison(
        _config(runs=1, regimes=('insufficient',)))
    np.testing.assert_array_equal(table['std'], [0.0, 0.0])

  def testRobustnessDistribution(self):
    table = pacing.run_pacing_comparison(
        _config(value_distribution='truncated_gaussian',
                regimes=('sufficient',)))
    self.assertLen(table, 2)

  def testWritesCsv(self):
    path = self.create_tempfile().full_path
    table = pacing.run_pacing_comparison(_config(output_path=path))
    pd.testing.assert_frame_equal(pd.read_csv(path), table,
                                  check_dtype=False)

  def testBatchCounts(self):
    table = pacing.run_pacing_comparison(
        _config(policies=('constant', 'ar_prod'), regimes=('sufficient',)))
    batches = table.set_index('policy')['mean_batches']
    self.assertEqual(batches['constant'], 1.0)
    self.assertGreaterEqual(batches['ar_prod'], 1.0)


class PacingRegressionTest(parameterized.TestCase):
  """Scaled-down runs of the 20-opponent market on the constant pattern."""

  def testAdaptiveProdBeatsHedgeWithScarceBudgets(self):
    # One pattern segment: the rival bid is 0 until a single jump.
    table = pacing.run_pacing_comparison(
        config.PacingConfig(horizon=4000, regimes=('insufficient',),
                            alphas=(0.1,), policies=('hedge', 'ar_prod'),
                            runs=20, base_seed=0))
    rewards = table.set_index('policy')['mean_reward']
    self.assertGreaterEqual(rewards['ar_prod'], rewards['hedge'])
    self.assertEqual(table.set_index('policy')['mean_batches']['hedge'], 1.0)

  @parameterized.named_parameters(
      ('sufficient', 'sufficient'),
      ('insufficient', 'insufficient'),
  )
  def testRestartsFollowPatternVariation(self, regime):
    table = pacing.run_pacing_comparison(
        config.PacingConfig(horizon=3000, regimes=(regime,),
                            alphas=(0.1, 0.5), policies=('ar_prod',), runs=4,
                            base_seed=0))
    batches = table.set_index('alpha')['mean_batches']
    self.assertGreater(batches[0.5], batches[0.1])


if __name__ == '__main__':
  absltest.main()
