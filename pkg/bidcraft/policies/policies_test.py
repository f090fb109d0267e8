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
"""Tests for bc.policies.get() and the shared policy contract."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

import bidcraft as bc

_LEARNERS = [
    ('hedge', {}),
    ('restart_hedge', {'batch_size': 7}),
    ('restart_prod', {'variation_budget': 3.0}),
    ('ar_prod', {}),
    ('ar_prod_theory', {}),
    ('ar_omd', {}),
    ('bobw', {}),
]


def _rounds(seed, horizon):
  rng = np.random.default_rng(seed)
  rivals = np.repeat(rng.random(horizon // 4 + 1), 4)[:horizon]
  return [bc.auction_core.AuctionRound(v, m)
          for v, m in zip(rng.random(horizon), rivals)]


class PoliciesTest(parameterized.TestCase):

  def testGetPolicyNames(self):
    self.assertIn('ar_prod', bc.policies.get_policy_names())
    self.assertIn('oracle', bc.policies.get_policy_names())

  def testGetUnknownPolicy(self):
    with self.assertRaisesRegex(ValueError, 'Unrecognized policy name'):
      bc.policies.get('sew', horizon=10)

  def testGetPassesHyperparameters(self):
    policy = bc.policies.get('constant', horizon=10, bid=0.25)
    self.assertEqual(policy.propose(0.9).bid, 0.25)

  @parameterized.named_parameters(
      (name, name, params) for name, params in _LEARNERS)
  def testDistributionsStayNormalized(self, name, params):
    policy = bc.policies.get(name, horizon=120, seed=5, **params)
    for auction_round in _rounds(5, 120):
      proposal = policy.propose(auction_round.valuation)
      self.assertTrue(np.all(proposal.distribution >= 0.0))
      self.assertAlmostEqual(np.sum(proposal.distribution), 1.0, places=9)
      self.assertLessEqual(proposal.bid, 1.0)
      policy.observe(auction_round)

  @parameterized.named_parameters(
      ('prod', 'prod', 1.0),
      ('prod_small_rate', 'prod', 0.1),
      ('hedge', 'hedge', 1.0),
      ('hedge_large_rate', 'hedge', 40.0),
  )
  def testBatchedUpdatesStayNormalized(self, update, learning_rate):
    # 10^4 independent update sequences of 60 random rounds, one per row.
    rng = np.random.default_rng(23)
    grid = bc.auction_core.BidGrid(0.05)
    sequences, steps = 10000, 60
    weights = np.tile(bc.utils.uniform_distribution(grid.count),
                      (sequences, 1))
    for _ in range(steps):
      seq = bc.auction_core.AuctionSequence(rng.random(sequences),
                                            rng.random(sequences))
      rewards = bc.auction_core.expert_reward_matrix(grid, seq)
      if update == 'prod':
        weights = bc.policies.prod_update(
            weights, rewards, bc.auction_core.benchmark_rewards(seq),
            learning_rate)
      else:
        weights = bc.policies.hedge_step(weights, rewards, learning_rate)
      bc.utils.check_distributions(weights)
    self.assertEqual(weights.shape, (sequences, grid.count))
    self.assertTrue(np.all(np.isfinite(weights)))

  def testBatchedUpdatesMatchSingleRows(self):
    rng = np.random.default_rng(29)
    weights = rng.dirichlet(np.ones(6), size=5)
    rewards = rng.random((5, 6))
    optimism = rng.random(5)
    optimism[2] = 0.5
    rewards[2] = 0.5
    batched = bc.policies.prod_update(weights, rewards, optimism, 0.7)
    hedged = bc.policies.hedge_step(weights, rewards, 3.0)
    for row in range(5):
      np.testing.assert_allclose(
          batched[row], bc.policies.prod_update(weights[row], rewards[row],
                                                optimism[row], 0.7))
      np.testing.assert_allclose(
          hedged[row], bc.policies.hedge_step(weights[row], rewards[row], 3.0))
    np.testing.assert_array_equal(batched[2], weights[2])

  @parameterized.named_parameters(
      (name, name, params) for name, params in _LEARNERS)
  def testReplayIsBitExact(self, name, params):
    rounds = _rounds(8, 60)
    runs = []
    for _ in range(2):
      policy = bc.policies.get(name, horizon=60, seed=11, **params)
      played = []
      for auction_round in rounds:
        proposal = policy.propose(auction_round.valuation)
        played.append((proposal.distribution.copy(), proposal.index))
        policy.observe(auction_round)
      runs.append(played)
    for (first, first_index), (second, second_index) in zip(*runs):
      np.testing.assert_array_equal(first, second)
      self.assertEqual(first_index, second_index)

  def testResetReplaysDistributions(self):
    rounds = _rounds(2, 40)
    policy = bc.policies.get('ar_prod', horizon=40, seed=1)
    before = []
    for auction_round in rounds:
      before.append(policy.propose(auction_round.valuation).distribution)
      policy.observe(auction_round)
    policy.reset()
    self.assertEqual(policy.batch_starts, [0])
    for expected, auction_round in zip(before, rounds):
      np.testing.assert_array_equal(
          policy.propose(auction_round.valuation).distribution, expected)
      policy.observe(auction_round)

  def testProposeTwiceRaises(self):
    policy = bc.policies.get('hedge', horizon=10)
    policy.propose(0.5)
    with self.assertRaises(RuntimeError):
      policy.propose(0.5)

  def testOracleNeedsRivalBid(self):
    policy = bc.policies.get('oracle', horizon=10)
    self.assertTrue(policy.requires_rival_bid)
    with self.assertRaises(ValueError):
      policy.propose(0.5)
    self.assertEqual(policy.propose(0.8, 0.3).bid, 0.3)

  def testExpectedReward(self):
    proposal = bc.policies.Proposal(
        0.5, np.array([0.25, 0.75]), np.array([0.2, 0.5]), 1)
    value = bc.policies.expected_reward(
        proposal, bc.auction_core.AuctionRound(0.9, 0.4))
    self.assertAlmostEqual(value, 0.75 * 0.4)


if __name__ == '__main__':
  absltest.main()
