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
"""Tests for the slowly varying rival bid patterns."""

import math

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from bidcraft import auction_core
from bidcraft.environments import base
from bidcraft.environments import patterns


class BuildingBlockTest(parameterized.TestCase):

  def testConstantBlock(self):
    np.testing.assert_array_equal(
        patterns.gen_building_block('constant', 4, tau=2), [0, 0, 1, 1])

  def testLinearBlock(self):
    np.testing.assert_allclose(
        patterns.gen_building_block('linear', 4, tau=2), [0, 0, 0.5, 1.0])

  def testLinearBlockWithoutRoomToRise(self):
    np.testing.assert_array_equal(
        patterns.gen_building_block('linear', 5, tau=5), np.zeros(5))

  def testExponentialBlockHalfway(self):
    length = 1000
    block = patterns.gen_building_block('exponential', length, tau=1)
    halfway = 1 + int(round(length * math.log(2.0) / 10.0))
    self.assertAlmostEqual(block[halfway - 1], 0.5, delta=0.01)

  @parameterized.parameters(1, 2)
  def testRejectsShortBlocks(self, length):
    with self.assertRaises(ValueError):
      patterns.gen_building_block('constant', length, tau=1)

  def testRejectsUnknownKind(self):
    with self.assertRaises(ValueError):
      patterns.gen_building_block('step', 5, tau=1)

  def testJumpLocationRange(self):
    rng = np.random.default_rng(0)
    draws = {patterns.draw_jump_location(9, rng) for _ in range(500)}
    self.assertEqual(draws, set(range(1, 7)))

  @parameterized.parameters(*patterns.BLOCK_KINDS)
  def testBlockVariationAtMostOne(self, kind):
    rng = np.random.default_rng(1)
    for length in (3, 7, 50):
      block = patterns.gen_building_block(kind, length, rng)
      self.assertTrue(np.all((block >= 0.0) & (block <= 1.0)))
      self.assertLessEqual(auction_core.temporal_variation(block), 1.0 + 1e-12)


class MultiSegmentTest(parameterized.TestCase):

  def testTwoConstantSegments(self):
    spec = base.EnvironmentSpec(
        kind='constant', horizon=6, variation_target=2.0, beta=1.0 / 3.0)
    rivals = patterns.gen_multi_segment(
        'constant', spec, np.random.default_rng(0))
    np.testing.assert_array_equal(rivals, [0, 1, 1, 0, 1, 1])

  def testSingleSegment(self):
    spec = base.EnvironmentSpec(kind='linear', horizon=30, variation_target=1.0)
    rivals = patterns.gen_multi_segment(
        'linear', spec, np.random.default_rng(0))
    self.assertLen(rivals, 30)
    self.assertLessEqual(auction_core.temporal_variation(rivals), 1.0 + 1e-12)

  @parameterized.parameters('constant', 'exponential', 'linear',
                            'multi_segment')
  def testVariationBound(self, kind):
    spec = base.EnvironmentSpec(kind=kind, horizon=400, alpha=0.5)
    bound = 2 * patterns.segment_count(spec.variation_budget)
    for seed in range(10):
      rivals = patterns.gen_multi_segment(
          kind, spec, np.random.default_rng(seed))
      self.assertLen(rivals, 400)
      self.assertLessEqual(auction_core.temporal_variation(rivals),
                           bound + 1e-9)

  def testRejectsInfeasibleBudget(self):
    spec = base.EnvironmentSpec(kind='constant', horizon=10,
                                variation_target=4.0)
    with self.assertRaisesRegex(ValueError, 'variation_target'):
      patterns.gen_multi_segment('constant', spec, np.random.default_rng(0))

  def testRequiresVariationBudget(self):
    spec = base.EnvironmentSpec(kind='constant', horizon=10)
    with self.assertRaisesRegex(ValueError, 'alpha'):
      patterns.gen_multi_segment('constant', spec, np.random.default_rng(0))


class SinusoidalTest(absltest.TestCase):

  def testZeroBudgetIsFlat(self):
    spec = base.EnvironmentSpec(kind='sinusoidal', horizon=20,
                                variation_target=0.0)
    np.testing.assert_allclose(patterns.gen_sinusoidal(spec), np.full(20, 0.5))

  def testPeak(self):
    spec = base.EnvironmentSpec(kind='sinusoidal', horizon=100,
                                variation_target=2.0)
    rivals = patterns.gen_sinusoidal(spec)
    self.assertAlmostEqual(rivals[24], 1.0)
    self.assertTrue(np.all((rivals >= 0.0) & (rivals <= 1.0)))

  def testVariationTracksBudget(self):
    spec = base.EnvironmentSpec(kind='sinusoidal', horizon=1000,
                                variation_target=8.0)
    variation = auction_core.temporal_variation(patterns.gen_sinusoidal(spec))
    self.assertBetween(variation, 4.0, 16.0)


class PatternEnvironmentTest(absltest.TestCase):

  def testGenerateIsDeterministic(self):
    spec = base.EnvironmentSpec(kind='multi_segment', horizon=200, alpha=0.5)
    environment = patterns.PatternEnvironment(spec)
    first = environment.generate(seed=3)
    second = environment.generate(seed=3)
    np.testing.assert_array_equal(first.rival_high_bids, second.rival_high_bids)
    np.testing.assert_array_equal(first.valuations, second.valuations)
    other = environment.generate(seed=4)
    self.assertFalse(np.array_equal(first.valuations, other.valuations))

  def testRejectsForeignKind(self):
    spec = base.EnvironmentSpec(kind='lower_bound_lt', horizon=30,
                                switch_target=3)
    with self.assertRaises(ValueError):
      patterns.PatternEnvironment(spec)


if __name__ == '__main__':
  absltest.main()
