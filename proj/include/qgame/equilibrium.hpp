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

#ifndef QGAME_EQUILIBRIUM_HPP_
#define QGAME_EQUILIBRIUM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "qgame/ewl.hpp"
#include "qgame/linalg.hpp"
#include "qgame/parallel.hpp"

// Pure-equilibrium search over discretized EWL strategy spaces, plus the
// analytic best reply and deviation witness for the two-parameter
// prisoner's dilemma with player 2's strategies swapped.

namespace qgame {

// Step counts per angle. theta takes `theta_steps` evenly spaced values on
// [0, pi] (both ends included). alpha and beta take `steps` evenly spaced
// values on the closed circle [0, 2pi]; the end point 2pi coincides with 0
// and is dropped, leaving steps - 1 distinct values (one value, 0, when
// steps == 1). Angles frozen by a player's space always get the single value 0.
struct ParamGrid {
  int theta_steps = 17;
  int alpha_steps = 33;
  int beta_steps = 33;

  // Halves every spacing: steps -> 2 (steps - 1) + 1. The refined grid
  // contains every point of this one.
  ParamGrid refined() const;

  // Grid strategies of a player with the given space, in lexicographic
  // (theta, alpha, beta) order. Throws std::invalid_argument when any step
  // count is below one, or theta_steps below two.
  std::vector<SU2Params> strategies(StrategySpace space) const;
};

struct EpsEquilibrium {
  std::vector<SU2Params> profile;
  double eps = 0.0;  // largest gain any player achieves by a grid deviation
  std::vector<double> payoffs;
};

// Payoffs of every grid profile: entry [k * n + i] is player i's payoff at
// profile k, profiles in row-major order over the players' strategy lists.
struct PayoffTensor {
  std::vector<std::vector<SU2Params>> strategies;
  std::vector<double> values;

  int num_players() const { return static_cast<int>(strategies.size()); }
  std::size_t num_profiles() const;
};

// Largest tensor (profiles x players) the grid search will allocate.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 27;

PayoffTensor grid_payoff_tensor(const EwlGame& g, const ParamGrid& grid,
                                Execution exec = Execution::kParallel);

// Grid profiles where no player gains more than `eps` by switching to another
// of its grid strategies, in row-major profile order.
std::vector<EpsEquilibrium> grid_pure_ne(const EwlGame& g, const ParamGrid& grid, double eps,
                                         Execution exec = Execution::kParallel);

// Number of classes of equilibria whose final states agree up to a global
// phase (|<psi_a|psi_b>| >= 1 - tol).
std::size_t count_distinct_outcomes(std::span<const EpsEquilibrium> equilibria,
                                    double tol = 1e-9);

// Player 1's best reply U(theta, alpha, 0) to U(theta_2, alpha_2, 0) in the
// swapped game: (theta_2, 3pi/2 - alpha_2) for alpha_2 in [0, 3pi/2], and
// (theta_2, 7pi/2 - alpha_2) otherwise. It earns player 1 the payoff T.
TwoParam best_reply_two_param(TwoParam opponent);

// A deviation of player 2 against U(theta_1, alpha_1, 0) that earns player 2
// strictly more than S: (0, 2pi - alpha_1).
TwoParam counterexample_witness(TwoParam player1);

namespace reference {

// Straightforward serial search: every payoff evaluated through ewl_payoffs,
// every deviation scanned explicitly. Kept as the test oracle for
// grid_pure_ne; cost grows with profiles x sum of strategy counts.
std::vector<EpsEquilibrium> grid_pure_ne(const EwlGame& g, const ParamGrid& grid, double eps);

}  // namespace reference

}  // namespace qgame

#endif  // QGAME_EQUILIBRIUM_HPP_
