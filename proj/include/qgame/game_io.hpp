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

#ifndef QGAME_GAME_IO_HPP_
#define QGAME_GAME_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/ewl.hpp"
#include "qgame/game.hpp"

// Line-oriented text format for games:
//
//   # prisoner's dilemma
//   players: 2
//   strategies 1: t b
//   strategies 2: l r
//   spaces: alpha alpha          (optional)
//   payoff (t,l): 3 3
//   payoff (t,r): 0 5
//   ...
//
// `#` starts a comment. Every strategy profile must have exactly one payoff
// line; labels are whitespace-free tokens without `(),:#`.

namespace qgame {

class GameFileError : public std::runtime_error {
 public:
  GameFileError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct GameFile {
  ClassicalGame game;
  std::optional<std::vector<StrategySpace>> spaces;
};

GameFile parse_game_file(std::string_view text);

// Throws GameFileError (line 0) when the file cannot be read.
GameFile load_game_file(const std::string& path);

// Canonical form: header, strategies, optional spaces, then payoff lines in
// row-major profile order with shortest round-trip number formatting.
std::string serialize_game_file(const GameFile& file);

}  // namespace qgame

#endif  // QGAME_GAME_IO_HPP_
