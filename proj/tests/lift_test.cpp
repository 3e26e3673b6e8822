// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgame/lift.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "qgame/game_io.hpp"
#include "support.hpp"

namespace qgame {
namespace {

using Kind = PlayerTransform::Kind;
constexpr double kTol = 1e-12;

std::vector<StrategySpace> all_full(int n) {
  return std::vector<StrategySpace>(static_cast<std::size_t>(n), StrategySpace::kFullSU2);
}

TEST(AngleMap, FlipIsMinusISigmaXTimesU) {
  std::mt19937_64 rng(43);
  const CMatrix v = Complex{0.0, -1.0} * CMatrix::pauli_x();
  for (int k = 0; k < 200; ++k) {
    const SU2Params p = testing::random_su2(rng);
    EXPECT_LT(su2(AngleMap::flip()(p)).max_abs_diff(v * su2(p)), kTol);
  }
}

TEST(AngleMap, FlipTwiceIsMinusIdentity) {
  // (-i sx)^2 = -1: the angles come back shifted by pi, which is the same
  // strategy up to a global phase and leaves every payoff unchanged.
  std::mt19937_64 rng(47);
  const EwlGame g(prisoners_dilemma({}));
  for (int k = 0; k < 200; ++k) {
    const SU2Params p = testing::random_su2(rng);
    const SU2Params back = AngleMap::flip()(AngleMap::flip()(p));
    EXPECT_NEAR(back.theta(), p.theta(), kTol);
    EXPECT_LT(angle_distance(back.alpha(), p.alpha() + kPi), 1e-12);
    EXPECT_LT(angle_distance(back.beta(), p.beta() + kPi), 1e-12);
    EXPECT_LT(su2(back).max_abs_diff(Complex{-1.0, 0.0} * su2(p)), kTol);
    const SU2Params other = testing::random_su2(rng);
    const std::vector<SU2Params> a{p, other};
    const std::vector<SU2Params> b{back, other};
    const auto ua = ewl_payoffs(g, a);
    const auto ub = ewl_payoffs(g, b);
    EXPECT_NEAR(ua[0], ub[0], 1e-12);
    EXPECT_NEAR(ua[1], ub[1], 1e-12);
  }
}

TEST(AngleMap, FlipSendsAlphaSpaceIntoBetaSpace) {
  const SU2Params p(0.7, 1.3, 0.0);
  const SU2Params q = AngleMap::flip()(p);
  EXPECT_EQ(q.alpha(), 0.0);
  EXPECT_NEAR(q.beta(), kPi - 1.3, kTol);
  EXPECT_TRUE(space_contains(StrategySpace::kTwoParamBeta, q));
  EXPECT_FALSE(space_contains(StrategySpace::kTwoParamAlpha, q));
}

TEST(Lift, IdentityIsAllKeep) {
  const ClassicalGame g = prisoners_dilemma({});
  const LiftedMapping lm = lift(GameMapping::identity({2, 2}), g);
  for (const auto& t : lm.transforms) EXPECT_EQ(t.kind, Kind::kKeep);
  std::mt19937_64 rng(53);
  const std::vector<SU2Params> p{testing::random_su2(rng), testing::random_su2(rng)};
  EXPECT_EQ(apply_lift(lm, p), p);
}

TEST(Lift, PdColumnSwapFlipsPlayerTwo) {
  const ClassicalGame g = prisoners_dilemma({});
  const ClassicalGame g2 = prisoners_dilemma_swapped({});
  const LiftedMapping lm = lift(GameMapping{{0, 1}, {{0, 1}, {1, 0}}}, g, g2);
  EXPECT_EQ(lm.transforms[0].kind, Kind::kKeep);
  EXPECT_EQ(lm.transforms[1].kind, Kind::kFlip);
  EXPECT_LT(lm.correction(0).max_abs_diff(CMatrix::identity(2)), kTol);
  EXPECT_LT(lm.correction(1).max_abs_diff(Complex{0.0, -1.0} * CMatrix::pauli_x()), kTol);
  EXPECT_THROW(lift(GameMapping::identity({2, 2}), g, g2), ContractViolation);
}

TEST(Lift, ThreePlayerExample) {
  const ClassicalGame g = load_game_file(testing::data_path("three_player.game")).game;
  const ClassicalGame g2 = load_game_file(testing::data_path("three_player_image.game")).game;
  const GameMapping f{{1, 2, 0}, {{0, 1}, {1, 0}, {1, 0}}};
  ASSERT_TRUE(is_strong_isomorphism(f, g, g2));
  const LiftedMapping lm = lift(f, g, g2);
  EXPECT_EQ(lm.transforms[0].kind, Kind::kKeep);
  EXPECT_EQ(lm.transforms[1].kind, Kind::kFlip);
  EXPECT_EQ(lm.transforms[2].kind, Kind::kFlip);

  const std::vector<SU2Params> p{SU2Params(0.3, 1.0, 2.0), SU2Params(1.2, 0.4, 5.0),
                                 SU2Params(2.9, 3.0, 0.1)};
  const auto out = apply_lift(lm, p);
  // (U'1(pi-t3, 2pi-b3, pi-a3), U'2(t1, a1, b1), U'3(pi-t2, 2pi-b2, pi-a2))
  EXPECT_NEAR(out[0].theta(), kPi - 2.9, kTol);
  EXPECT_NEAR(out[0].alpha(), kTwoPi - 0.1, kTol);
  EXPECT_NEAR(out[0].beta(), kPi - 3.0, kTol);
  EXPECT_EQ(out[1], p[0]);
  EXPECT_NEAR(out[2].theta(), kPi - 1.2, kTol);
  EXPECT_NEAR(out[2].alpha(), kTwoPi - 5.0, kTol);
  EXPECT_NEAR(out[2].beta(), kPi - 0.4, kTol);

  const LiftReport r = verify_lift(lm, EwlGame(g), EwlGame(g2), 200, 7);
  EXPECT_TRUE(r.passed()) << r.verdict() << " " << r.max_deviation;
  EXPECT_EQ(r.verdict(), "pass");
}

TEST(Lift, RejectsNonBinary) {
  const ClassicalGame g({{"a", "b", "c"}, {"x", "y"}}, std::vector<std::vector<double>>(6, {0, 0}));
  EXPECT_THROW(lift(GameMapping::identity({3, 2}), g), std::invalid_argument);
  EXPECT_THROW(lift(GameMapping::identity({2, 2, 2}), prisoners_dilemma({})), ContractViolation);
}

TEST(Lift, CustomTransformHasNoCorrection) {
  LiftedMapping lm{{0}, {PlayerTransform::custom(AngleMap::reflect(kPi / 4))}};
  EXPECT_THROW(lm.correction(0), std::logic_error);
}

TEST(VerifyLift, RandomIsomorphicCopiesPass) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const ClassicalGame g = testing::random_binary_game(n, rng);
    const GameMapping f = testing::random_mapping(g.strategy_counts(), rng);
    const ClassicalGame g2 = image_game(g, f);
    const LiftReport r = verify_lift(lift(f, g, g2), EwlGame(g), EwlGame(g2), 100, 1000 + trial);
    EXPECT_TRUE(r.passed()) << trial << ": " << r.verdict() << " " << r.max_deviation;
    EXPECT_LE(r.max_deviation, kLiftTol);
  }
}

TEST(VerifyLift, PdPairAlphaToMixedSpacesPasses) {
  const PdPayoffs pd{};
  const EwlGame g(prisoners_dilemma(pd), {StrategySpace::kTwoParamAlpha, StrategySpace::kTwoParamAlpha});
  const EwlGame g2(prisoners_dilemma_swapped(pd),
                   {StrategySpace::kTwoParamAlpha, StrategySpace::kTwoParamBeta});
  const LiftedMapping lm = lift(GameMapping{{0, 1}, {{0, 1}, {1, 0}}}, g.base(), g2.base());
  const LiftReport r = verify_lift(lm, g, g2, 500, 3);
  EXPECT_TRUE(r.passed()) << r.verdict();
}

TEST(VerifyLift, TwoParamPairHasNoKeepFlipLift) {
  const PdPayoffs pd{};
  const std::vector<StrategySpace> d{StrategySpace::kTwoParamAlpha, StrategySpace::kTwoParamAlpha};
  const EwlGame g(prisoners_dilemma(pd), d);
  const EwlGame g2(prisoners_dilemma_swapped(pd), d);
  for (int k1 = 0; k1 < 2; ++k1) {
    for (int k2 = 0; k2 < 2; ++k2) {
      LiftedMapping lm{{0, 1},
                       {k1 ? PlayerTransform::flip() : PlayerTransform::keep(),
                        k2 ? PlayerTransform::flip() : PlayerTransform::keep()}};
      const LiftReport r = verify_lift(lm, g, g2, 200, 11);
      EXPECT_FALSE(r.passed()) << k1 << k2;
      if (k1 || k2) {
        EXPECT_EQ(r.space_escapes, r.samples);
      } else {
        EXPECT_GT(r.mismatches, 0);
        EXPECT_EQ(r.verdict(), "payoff-mismatch");
      }
    }
  }
  // The classical lift flips player 2 and so leaves the two-parameter space.
  const LiftedMapping lm = lift(GameMapping{{0, 1}, {{0, 1}, {1, 0}}}, g.base(), g2.base());
  EXPECT_EQ(verify_lift(lm, g, g2, 50, 1).verdict(), "space-escape");
}

TEST(VerifyLift, AntidiagonalPairReflectionPasses) {
  const EwlGame g(testing::antidiagonal_game());
  const EwlGame g2(testing::antidiagonal_game_swapped());
  const PlayerTransform t = PlayerTransform::custom(AngleMap::reflect(kPi / 4));
  const LiftReport r = verify_lift(LiftedMapping{{0, 1}, {t, t}}, g, g2, 500, 5);
  EXPECT_TRUE(r.passed()) << r.verdict() << " " << r.max_deviation;
  // The plain Keep lift is not a quantum isomorphism here.
  const LiftReport keep = verify_lift(LiftedMapping{{0, 1}, {PlayerTransform::keep(), PlayerTransform::keep()}},
                                      g, g2, 100, 5);
  EXPECT_FALSE(keep.passed());
}

TEST(VerifyLift, DeterministicForASeed) {
  std::mt19937_64 rng(61);
  const ClassicalGame g = testing::random_binary_game(3, rng);
  const GameMapping f = testing::random_mapping(g.strategy_counts(), rng);
  const ClassicalGame g2 = image_game(g, f);
  const LiftedMapping lm = lift(f, g, g2);
  const LiftReport a = verify_lift(lm, EwlGame(g), EwlGame(g2), 100, 99);
  const LiftReport b = verify_lift(lm, EwlGame(g), EwlGame(g2), 100, 99);
  EXPECT_EQ(a.max_deviation, b.max_deviation);
  EXPECT_EQ(a.seed, 99u);
}

TEST(IdentitySuite, AllChecksPass) {
  const auto start = std::chrono::steady_clock::now();
  const IdentityReport r = operator_identity_suite(200, 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_EQ(r.checks.size(), 6u);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.max_residual;
  EXPECT_TRUE(r.passed());
  EXPECT_LT(seconds, 1.0);
}

TEST(IdentitySuite, SignOfTheTwoParameterFlip) {
  // U(pi, 0, pi) is -i sigma_x; +i sigma_x would be off by a global sign.
  const CMatrix u = su2(SU2Params(kPi, 0, kPi));
  EXPECT_LT(u.max_abs_diff(Complex{0.0, -1.0} * CMatrix::pauli_x()), kTol);
  EXPECT_NEAR(u.max_abs_diff(Complex{0.0, 1.0} * CMatrix::pauli_x()), 2.0, kTol);
}

}  // namespace
}  // namespace qgame
