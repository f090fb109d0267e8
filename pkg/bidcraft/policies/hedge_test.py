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
"""Tests for Hedge and restarted Hedge."""

import math

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from bidcraft import auction_core
from bidcraft.policies import hedge


class HedgeStepTest(parameterized.TestCase):

  def testTwoExperts(self):
    updated = hedge.hedge_step(np.array([0.5, 0.5]), np.array([1.0, 0.0]),
                               math.log(2.0))
    np.testing.assert_allclose(updated, [2.0 / 3.0, 1.0 / 3.0])

  def testConstantRewardsKeepUniform(self):
    updated = hedge.hedge_step(np.full(4, 0.25), np.full(4, 0.7), 3.0)
    np.testing.assert_allclose(updated, np.full(4, 0.25))

  def testZeroWeightsStayZero(self):
    updated = hedge.hedge_step(np.array([1.0, 0.0]), np.array([0.0, 1.0]), 1.0)
    np.testing.assert_array_equal(updated, [1.0, 0.0])

  def testLargeExponentsDoNotOverflow(self):
    updated = hedge.hedge_step(np.array([0.5, 0.5]), np.array([1000.0, 0.0]),
                               10.0)
    self.assertTrue(np.all(np.isfinite(updated)))
    np.testing.assert_allclose(updated, [1.0, 0.0])

  @parameterized.parameters(0.0, -1.0)
  def testRejectsNonPositiveLearningRate(self, learning_rate):
    with self.assertRaises(ValueError):
      hedge.hedge_step(np.array([0.5, 0.5]), np.zeros(2), learning_rate)


class RestartHedgeTest(parameterized.TestCase):

  @parameterized.parameters((1000, 10.0, 22), (1000, 0.0, 1000),
                            (10, 1000.0, 1))
  def testRestartBatchSize(self, horizon, variation, expected):
    self.assertEqual(hedge.restart_batch_size(horizon, variation), expected)

  def testBatchSizeOneIsUniformEveryRound(self):
    policy = hedge.RestartHedgePolicy(6, epsilon=0.25, batch_size=1, seed=0)
    for _ in range(6):
      proposal = policy.propose(1.0)
      np.testing.assert_allclose(proposal.distribution, np.full(4, 0.25))
      policy.observe(auction_core.AuctionRound(1.0, 0.3))
    self.assertEqual(policy.batch_starts, [0, 1, 2, 3, 4, 5])

  def testVariationBudgetSetsBatchSize(self):
    policy = hedge.RestartHedgePolicy(1000, variation_budget=10.0, seed=0)
    self.assertEqual(policy.batch_size, 22)
    self.assertAlmostEqual(
        policy.learning_rate,
        math.sqrt(8.0 * math.log(policy.num_experts) / 22))

  def testPlainHedgeNeverRestartsAndLearnsBestExpert(self):
    policy = hedge.HedgePolicy(200, epsilon=0.1, seed=3)
    for _ in range(200):
      policy.propose(1.0)
      policy.observe(auction_core.AuctionRound(1.0, 0.45))
    self.assertEqual(policy.batch_starts, [0])
    self.assertEqual(int(np.argmax(policy.weights)), 4)


if __name__ == '__main__':
  absltest.main()
