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
"""Tests for run_episode and RegretTrace."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np
import pandas as pd

from bidcraft import auction_core
from bidcraft.environments import base as environments_base
from bidcraft.environments import environments
from bidcraft.harness import episode
from bidcraft.policies import hedge
from bidcraft.policies import prod
from bidcraft.policies import reference


class _FailingPolicy(reference.ConstantBidPolicy):

  def _update(self, auction_round, proposal):
    if self.round_index == 3:
      raise FloatingPointError('weights overflowed')


class RunEpisodeTest(parameterized.TestCase):

  @parameterized.parameters('constant', 'sinusoidal', 'multi_segment')
  def testOracleHasZeroRegret(self, kind):
    spec = environments_base.EnvironmentSpec(kind=kind, horizon=100,
                                             alpha=0.5, seed=1)
    trace = episode.run_episode(reference.ClairvoyantPolicy(100), spec)
    self.assertEqual(trace.final_regret, 0.0)
    self.assertEqual(trace.final_regret_realized, 0.0)

  def testZeroBidOnTwoSegmentInstance(self):
    sequence = auction_core.two_segment_instance(1000)
    trace = episode.run_episode(reference.ConstantBidPolicy(1000), sequence)
    self.assertAlmostEqual(np.sum(trace.benchmark_increments), 750.0)
    self.assertAlmostEqual(trace.total_reward, 500.0)
    self.assertAlmostEqual(trace.final_regret, 250.0)
    self.assertIsNone(trace.spec_digest)

  def testCumulativeRegretMatchesColumns(self):
    spec = environments_base.EnvironmentSpec(kind='linear', horizon=300,
                                             alpha=0.5)
    trace = episode.run_episode(hedge.HedgePolicy(300, seed=2), spec, seed=2)
    recomputed = (np.cumsum(trace.benchmark_increments) -
                  np.cumsum(trace.expected_rewards))
    np.testing.assert_allclose(trace.cumulative_regret, recomputed, atol=1e-9)
    self.assertLen(trace.cumulative_regret, 300)
    self.assertEqual(trace.seed, 2)
    self.assertEqual(trace.spec_digest, spec.digest())
    self.assertEqual(trace.epsilon, hedge.HedgePolicy(300).grid.epsilon)

  def testTracesAreReproducible(self):
    spec = environments_base.EnvironmentSpec(kind='sinusoidal', horizon=200,
                                             alpha=0.5)
    first = episode.run_episode(prod.ARProdPolicy(200, seed=7), spec, seed=7)
    second = episode.run_episode(prod.ARProdPolicy(200, seed=7), spec, seed=7)
    pd.testing.assert_frame_equal(first.to_frame(), second.to_frame())
    self.assertEqual(first.batch_starts, second.batch_starts)

  def testRealizedEqualsExpectedForPointMasses(self):
    spec = environments_base.EnvironmentSpec(kind='exponential', horizon=90,
                                             alpha=0.5, seed=4)
    trace = episode.run_episode(reference.ConstantBidPolicy(90, bid=0.4), spec)
    np.testing.assert_array_equal(trace.expected_rewards,
                                  trace.realized_rewards)
    np.testing.assert_array_equal(trace.bids, np.full(90, 0.4))

  def testMeasuredNonStationarity(self):
    sequence = auction_core.two_segment_instance(10)
    trace = episode.run_episode(reference.ConstantBidPolicy(10), sequence)
    self.assertEqual(trace.variation_measured, 0.5)
    self.assertEqual(trace.switches_measured, 1)
    np.testing.assert_array_equal(trace.rival_high_bids,
                                  sequence.rival_high_bids)

  def testUsedPolicyIsReset(self):
    sequence = auction_core.two_segment_instance(20)
    policy = hedge.HedgePolicy(20, seed=0)
    episode.run_episode(policy, sequence)
    trace = episode.run_episode(policy, sequence)
    self.assertLen(trace.bids, 20)
    self.assertEqual(policy.round_index, 20)

  def testFailureCarriesRoundIndex(self):
    sequence = auction_core.two_segment_instance(10)
    with self.assertRaises(episode.EpisodeError) as raised:
      episode.run_episode(_FailingPolicy(10), sequence)
    self.assertEqual(raised.exception.round_index, 3)
    self.assertIn('weights overflowed', str(raised.exception))
    self.assertIsInstance(raised.exception.__cause__, FloatingPointError)

  def testBudgetPacingMarket(self):
    spec = environments_base.EnvironmentSpec(
        kind='budget_pacing', horizon=150, alpha=0.5, opponents=4,
        budget_regime='insufficient', seed=3)
    trace = episode.run_episode(hedge.HedgePolicy(150, seed=3), spec)
    self.assertLen(trace.valuations, 150)
    self.assertLessEqual(trace.budget_spent, trace.budget_total + 1e-9)
    self.assertAlmostEqual(trace.budget_total, 4 * 150 / 40.0)
    self.assertTrue(np.all(trace.realized_rewards >= 0.0))
    again = episode.run_episode(hedge.HedgePolicy(150, seed=3), spec)
    np.testing.assert_array_equal(trace.rival_high_bids,
                                  again.rival_high_bids)


class BuildPolicyTest(absltest.TestCase):

  def _valuation_variation(self, spec, seed):
    sequence = environments.from_spec(spec).generate(seed)
    return auction_core.temporal_variation(sequence.valuations)

  def testRestartHedgeCountsValuationVariation(self):
    spec = environments_base.EnvironmentSpec(kind='constant', horizon=2000,
                                             alpha=0.5)
    policy = episode.build_policy('restart_hedge', spec, seed=4)
    budget = spec.variation_budget + self._valuation_variation(spec, 4)
    self.assertGreater(budget, spec.variation_budget)
    self.assertEqual(policy.batch_size,
                     hedge.restart_batch_size(2000, budget))
    self.assertLess(policy.batch_size, 2000)

  def testRestartProdUsesRivalBudgetOnly(self):
    spec = environments_base.EnvironmentSpec(kind='sinusoidal', horizon=900,
                                             variation_target=4.0)
    policy = episode.build_policy('restart_prod', spec, seed=0)
    self.assertEqual(policy.batch_size, 15)

  def testSwitchSequenceMeasuresRivalVariation(self):
    spec = environments_base.EnvironmentSpec(kind='lower_bound_lt',
                                             horizon=300, switch_target=10)
    sequence = environments.from_spec(spec).generate(2)
    budget = episode.known_variation_budget(spec, 2, with_valuations=False)
    self.assertAlmostEqual(
        budget, auction_core.temporal_variation(sequence.rival_high_bids))
    self.assertGreater(budget, 0.0)

  def testMarketUsesDeclaredBudget(self):
    spec = environments_base.EnvironmentSpec(
        kind='budget_pacing', horizon=400, alpha=0.5, opponents=3)
    self.assertAlmostEqual(
        episode.known_variation_budget(spec, 1, with_valuations=False), 5.0)
    self.assertGreater(episode.known_variation_budget(spec, 1), 5.0)

  def testExplicitScheduleWins(self):
    spec = environments_base.EnvironmentSpec(kind='constant', horizon=500,
                                             alpha=0.5)
    policy = episode.build_policy('restart_hedge', spec, seed=1,
                                  batch_size=25)
    self.assertEqual(policy.batch_size, 25)
    policy = episode.build_policy('restart_prod', spec, seed=1,
                                  variation_budget=5.0)
    self.assertEqual(policy.batch_size, 10)

  def testOtherPoliciesAreUntouched(self):
    spec = environments_base.EnvironmentSpec(kind='constant', horizon=500,
                                             alpha=0.5)
    policy = episode.build_policy('hedge', spec, seed=1)
    self.assertIsInstance(policy, hedge.HedgePolicy)
    self.assertEqual(policy.batch_size, 500)


class RegretTraceTest(absltest.TestCase):

  def testWriteCsv(self):
    sequence = auction_core.two_segment_instance(4)
    trace = episode.run_episode(reference.ConstantBidPolicy(4), sequence)
    path = self.create_tempfile().full_path
    trace.write_csv(path)
    with open(path, 'rb') as f:
      content = f.read()
    self.assertNotIn(b'\r\n', content)
    self.assertTrue(content.startswith(
        ','.join(episode.TRACE_COLUMNS).encode('utf-8') + b'\n'))
    frame = pd.read_csv(path)
    self.assertEqual(frame['round'].tolist(), [1, 2, 3, 4])
    self.assertEqual(frame['cumulative_regret'].tolist(), [0, 0, 0.5, 1.0])


if __name__ == '__main__':
  absltest.main()
