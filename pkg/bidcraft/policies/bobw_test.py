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
"""Tests for the best-of-both-worlds combiner."""

import math

from absl.testing import absltest
import numpy as np

from bidcraft import auction_core
from bidcraft.policies import bobw
from bidcraft.policies import reference


class BOBWPolicyTest(absltest.TestCase):

  def testInitialWeights(self):
    policy = bobw.BOBWPolicy(100, seed=0)
    learning_rate = 0.5 * math.sqrt(math.log(100) / 100)
    self.assertAlmostEqual(policy.state.weight_a, learning_rate)
    self.assertAlmostEqual(policy.state.weight_b, 1.0 - learning_rate)
    self.assertEqual(policy.policy_a.name, 'ar_prod')
    self.assertEqual(policy.policy_b.name, 'ar_omd')

  def testMultiplicativeLedger(self):
    policy = bobw.BOBWPolicy(
        10,
        policy_a=reference.ConstantBidPolicy(10, bid=0.0),
        policy_b=reference.ConstantBidPolicy(10, bid=1.0),
        learning_rate=0.1,
        seed=0)
    for _ in range(2):
      policy.propose(1.0)
      policy.observe(auction_core.AuctionRound(1.0, 0.0))
    self.assertAlmostEqual(policy.state.weight_a, 0.121, places=12)
    self.assertAlmostEqual(policy.state.weight_b, 0.9)
    self.assertEqual(policy.state.reward_gaps, [1.0, 1.0])

  def testZeroGapKeepsMixConstant(self):
    policy = bobw.BOBWPolicy(
        20,
        policy_a=reference.ConstantBidPolicy(20, bid=0.5),
        policy_b=reference.ConstantBidPolicy(20, bid=0.5),
        seed=0)
    mix = policy.state.mix_probability
    rng = np.random.default_rng(0)
    for valuation, rival in rng.random((20, 2)):
      policy.propose(valuation)
      policy.observe(auction_core.AuctionRound(valuation, rival))
      self.assertEqual(policy.state.mix_probability, mix)

  def testDefaultChildrenLedgerIsExact(self):
    policy = bobw.BOBWPolicy(200, seed=3)
    initial_b = policy.state.weight_b
    rng = np.random.default_rng(3)
    for valuation, rival in rng.random((200, 2)):
      proposal = policy.propose(valuation)
      self.assertEqual(
          proposal.bids.size,
          policy.policy_a.num_experts + policy.policy_b.num_experts)
      self.assertAlmostEqual(np.sum(proposal.distribution), 1.0, places=9)
      self.assertEqual(proposal.bid, proposal.bids[proposal.index])
      policy.observe(auction_core.AuctionRound(valuation, rival))
    self.assertEqual(policy.state.weight_b, initial_b)
    expected = sum(math.log1p(policy.state.learning_rate * gap)
                   for gap in policy.state.reward_gaps)
    self.assertAlmostEqual(policy.state.log_weight_a, expected, places=12)
    self.assertAlmostEqual(
        math.log(policy.state.weight_a),
        math.log(policy.state.learning_rate) + policy.state.log_weight_a,
        places=9)

  def testResetRestoresChildren(self):
    policy = bobw.BOBWPolicy(50, seed=1)
    for _ in range(5):
      policy.propose(0.9)
      policy.observe(auction_core.AuctionRound(0.9, 0.2))
    policy.reset()
    self.assertEqual(policy.round_index, 0)
    self.assertEqual(policy.policy_a.round_index, 0)
    self.assertEqual(policy.policy_b.round_index, 0)
    self.assertEqual(policy.state.reward_gaps, [])

  def testRequiresRivalBidFollowsChildren(self):
    policy = bobw.BOBWPolicy(
        10, policy_b=reference.ClairvoyantPolicy(10), seed=0)
    self.assertTrue(policy.requires_rival_bid)
    self.assertFalse(bobw.BOBWPolicy(10, seed=0).requires_rival_bid)


if __name__ == '__main__':
  absltest.main()
