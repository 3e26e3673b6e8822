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

#ifndef QGAME_EWL_HPP_
#define QGAME_EWL_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/game.hpp"
#include "qgame/linalg.hpp"

// Eisert-Wilkens-Lewenstein quantization of binary-strategy games.
//
// Strategy index 0 / 1 of a player corresponds to qubit value 0 / 1, and a
// profile (j_1, ..., j_n) to the basis ket |j_1 ... j_n>. Players act with
// local SU(2) operators between the entangler J and J^dagger; payoffs are
// expectations of the diagonal observables M_i in the final state.

namespace qgame {

enum class StrategySpace {
  kFullSU2,        // any (theta, alpha, beta)
  kTwoParamAlpha,  // beta = 0
  kTwoParamBeta,   // alpha = 0
  kOneParam,       // alpha = beta = 0
};

// Exact zero tests on the stored, normalized angles.
bool space_contains(StrategySpace space, const SU2Params& p);

std::string_view space_name(StrategySpace space);
// Accepts the canonical names ("full", "alpha", "beta", "one") and the
// aliases "su2", "D", "F", "theta".
std::optional<StrategySpace> parse_space(std::string_view name);

// Sum_j a^i_j |j><j|. Throws std::invalid_argument for non-binary games or
// more than four players.
CMatrix payoff_operator(const ClassicalGame& g, int player);

class EwlGame {
 public:
  explicit EwlGame(ClassicalGame base);
  EwlGame(ClassicalGame base, std::vector<StrategySpace> spaces);

  const ClassicalGame& base() const { return base_; }
  int num_players() const { return base_.num_players(); }
  StrategySpace space(int player) const { return spaces_[static_cast<std::size_t>(player)]; }
  const std::vector<StrategySpace>& spaces() const { return spaces_; }

  // Diagonal of M_i in ket order.
  std::span<const double> observable(int player) const {
    return observables_[static_cast<std::size_t>(player)];
  }

  bool admits(std::span<const SU2Params> params) const;

  // Payoffs without the space check; the caller guarantees membership.
  std::vector<double> payoffs_unchecked(std::span<const SU2Params> params) const;

 private:
  ClassicalGame base_;
  std::vector<StrategySpace> spaces_;
  std::vector<std::vector<double>> observables_;
};

// J^dagger (U_1 (x) ... (x) U_n) J |0...0>.
CVector final_state(std::span<const SU2Params> params);

// Row-major entries of su2(p).
using Gate2 = std::array<Complex, 4>;
Gate2 su2_gate(const SU2Params& p);

// Allocation-free core of final_state: writes the 2^n amplitudes into `out`.
void ewl_circuit(std::span<const Gate2> gates, std::span<Complex> out);

// |<j|psi>|^2 for every basis ket.
std::vector<double> outcome_probabilities(const CVector& state);

// <psi|M_i|psi> for every player. Throws std::invalid_argument when a
// player's parameters lie outside that player's strategy space.
std::vector<double> ewl_payoffs(const EwlGame& g, std::span<const SU2Params> params);

// Angles of a two-parameter strategy U(theta, alpha, 0).
struct TwoParam {
  double theta = 0.0;
  double alpha = 0.0;
};

struct PdPayoffs {
  double reward = 3.0;      // R
  double sucker = 0.0;      // S
  double temptation = 5.0;  // T
  double punishment = 1.0;  // P
};

// Classical prisoner's dilemma [[(R,R),(S,T)],[(T,S),(P,P)]].
ClassicalGame prisoners_dilemma(const PdPayoffs& pd);
// The same game with player 2's strategies in reverse order:
// [[(S,T),(R,R)],[(P,P),(T,S)]].
ClassicalGame prisoners_dilemma_swapped(const PdPayoffs& pd);

// Closed-form payoffs (u_1, u_2) of the swapped prisoner's dilemma under
// U(theta_1, alpha_1, 0) (x) U(theta_2, alpha_2, 0).
std::pair<double, double> two_param_payoff_closed_form(TwoParam p1, TwoParam p2,
                                                       const PdPayoffs& pd);

}  // namespace qgame

#endif  // QGAME_EWL_HPP_
