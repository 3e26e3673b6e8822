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

#include "qgame/game_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace qgame {
namespace {

int error_line(const std::string& text) {
  try {
    parse_game_file(text);
  } catch (const GameFileError& e) {
    return e.line();
  }
  return -1;
}

const char* kPd =
    "# comment line\n"
    "players: 2\n"
    "strategies 1: t b\n"
    "strategies 2: l r   # trailing comment\n"
    "payoff (t,l): 3 3\n"
    "payoff (t, r): 0 5\n"
    "payoff (b,l): 5 0\n"
    "payoff (b,r): 1 1\n";

TEST(GameIo, ParsesPrisonersDilemma) {
  const GameFile f = parse_game_file(kPd);
  EXPECT_FALSE(f.spaces);
  const ClassicalGame pd = prisoners_dilemma({});
  for (std::size_t k = 0; k < 4; ++k) {
    for (int i = 0; i < 2; ++i) EXPECT_EQ(f.game.payoff(i, k), pd.payoff(i, k));
  }
  EXPECT_EQ(f.game.labels(1), (std::vector<std::string>{"l", "r"}));
}

TEST(GameIo, PayoffLinesInAnyOrder) {
  const GameFile f = parse_game_file(
      "players: 2\nstrategies 1: t b\nstrategies 2: l r\n"
      "payoff (b,r): 1 1\npayoff (t,l): 3 3\npayoff (b,l): 5 0\npayoff (t,r): 0 5\n");
  EXPECT_EQ(f.game.payoff(1, 1), 5.0);
}

TEST(GameIo, SpacesLine) {
  const GameFile f = parse_game_file(
      "players: 2\nspaces: alpha F\nstrategies 1: t b\nstrategies 2: l r\n"
      "payoff (t,l): 3 3\npayoff (t,r): 0 5\npayoff (b,l): 5 0\npayoff (b,r): 1 1\n");
  ASSERT_TRUE(f.spaces);
  EXPECT_EQ(*f.spaces, (std::vector<StrategySpace>{StrategySpace::kTwoParamAlpha, StrategySpace::kTwoParamBeta}));
}

TEST(GameIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("strategies 1: a b\n"), 1);
  EXPECT_EQ(error_line("players: 2\nplayers: 2\n"), 2);
  EXPECT_EQ(error_line("players: x\n"), 1);
  EXPECT_EQ(error_line("players: 2\n\nstrategies 3: a b\n"), 3);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a a\n"), 2);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a\n"), 2);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\nstrategies 2: c d\npayoff (a,c): 1\n"), 4);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\nstrategies 2: c d\npayoff (a,c): 1 nan\n"), 4);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\nstrategies 2: c d\npayoff (a,x): 1 1\n"), 4);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\nstrategies 2: c d\nspaces: full bogus\n"), 4);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\nstrategies 2: c d\nbogus: 1\n"), 4);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\nstrategies 2: c d\n"
                       "payoff (a,c): 1 1\npayoff (a,c): 2 2\n"),
            5);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\nstrategies 2: c d\npayoff (a,c): 1 1\n"), 4);
  EXPECT_EQ(error_line("players: 2\nstrategies 1: a b\n"), 1);
  EXPECT_EQ(error_line(""), 0);
}

TEST(GameIo, MissingFileIsLineZero) {
  try {
    load_game_file("/nonexistent/file.game");
    FAIL();
  } catch (const GameFileError& e) {
    EXPECT_EQ(e.line(), 0);
  }
}

TEST(GameIo, RoundTripIsCanonical) {
  std::mt19937_64 rng(83);
  for (int n = 1; n <= 4; ++n) {
    GameFile f{testing::random_binary_game(n, rng), std::nullopt};
    if (n % 2 == 0) f.spaces = std::vector<StrategySpace>(static_cast<std::size_t>(n), StrategySpace::kTwoParamBeta);
    const std::string text = serialize_game_file(f);
    const GameFile back = parse_game_file(text);
    EXPECT_EQ(serialize_game_file(back), text);
    for (std::size_t k = 0; k < f.game.num_profiles(); ++k) {
      for (int i = 0; i < n; ++i) EXPECT_EQ(back.game.payoff(i, k), f.game.payoff(i, k));
    }
    EXPECT_EQ(back.spaces, f.spaces);
  }
}

TEST(GameIo, BundledFilesLoad) {
  for (const char* name : {"pd.game", "pd_swapped.game", "pd_alpha.game", "pd_swapped_alpha.game",
                           "antidiagonal.game", "antidiagonal_swapped.game", "three_player.game",
                           "three_player_image.game"}) {
    EXPECT_NO_THROW(load_game_file(testing::data_path(name))) << name;
  }
  const GameFile swapped = load_game_file(testing::data_path("pd_swapped.game"));
  const ClassicalGame expected = prisoners_dilemma_swapped({});
  for (std::size_t k = 0; k < 4; ++k) {
    for (int i = 0; i < 2; ++i) EXPECT_EQ(swapped.game.payoff(i, k), expected.payoff(i, k));
  }
}

}  // namespace
}  // namespace qgame
