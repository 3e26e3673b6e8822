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

#ifndef QGAME_CLI_HPP_
#define QGAME_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgame/ewl.hpp"
#include "qgame/game.hpp"

namespace qgame::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;        // success or affirmative finding
inline constexpr int kExitNegative = 1;  // negative finding
inline constexpr int kExitInput = 2;     // malformed input or arguments
inline constexpr int kExitIo = 3;        // output could not be written

inline constexpr std::uint64_t kDefaultSeed = 1;

// Runs `qgame <args...>` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "eta: 1->2 2->1 | phi1: t->l' b->r' | ..." using both games' labels.
std::string describe_mapping(const GameMapping& f, const ClassicalGame& g, const ClassicalGame& g2);

// CSV of (theta, alpha) -> (payoff1, payoff2) for player `player` (0-based)
// playing U(theta, alpha, 0) against the fixed opponent strategy. theta takes
// `theta_steps` values on [0, pi] and alpha `alpha_steps` values on the closed
// interval [0, 2pi]; a single step means the value 0.
std::string surface_csv(const ClassicalGame& g, int player, const SU2Params& opponent,
                        int theta_steps, int alpha_steps);

}  // namespace qgame::cli

#endif  // QGAME_CLI_HPP_
