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

#ifndef QGAME_TESTS_SUPPORT_HPP_
#define QGAME_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qgame/ewl.hpp"
#include "qgame/game.hpp"
#include "qgame/linalg.hpp"

namespace qgame::testing {

// J^dagger (U_1 (x) ... (x) U_n) J |0...0> built from dense matrices.
CVector dense_final_state(std::span<const SU2Params> params);

// <psi|M_i|psi> for every player, with M_i assembled from payoff_operator.
std::vector<double> dense_payoffs(const ClassicalGame& g, std::span<const SU2Params> params);

// Binary game with payoffs drawn uniformly from [-5, 5].
ClassicalGame random_binary_game(int players, std::mt19937_64& rng);

// Uniform player permutation and uniform strategy bijections.
GameMapping random_mapping(const std::vector<int>& strategy_counts, std::mt19937_64& rng);

SU2Params random_su2(std::mt19937_64& rng);
SU2Params random_in_space(StrategySpace space, std::mt19937_64& rng);

// Pure equilibria by checking every unilateral deviation from scratch.
std::vector<StrategyProfile> brute_force_pure_ne(const ClassicalGame& g);

// The pair of 2x2 games whose anti-diagonal payoff profiles are exchanged,
// with profiles (4,4), (1,3), (3,1), (2,2).
ClassicalGame antidiagonal_game();
ClassicalGame antidiagonal_game_swapped();

std::string data_path(const std::string& name);

}  // namespace qgame::testing

#endif  // QGAME_TESTS_SUPPORT_HPP_
