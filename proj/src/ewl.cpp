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

#include "qgame/ewl.hpp"

#include <cmath>
#include <stdexcept>

namespace qgame {

bool space_contains(StrategySpace space, const SU2Params& p) {
  switch (space) {
    case StrategySpace::kFullSU2:
      return true;
    case StrategySpace::kTwoParamAlpha:
      return p.beta() == 0.0;
    case StrategySpace::kTwoParamBeta:
      return p.alpha() == 0.0;
    case StrategySpace::kOneParam:
      return p.alpha() == 0.0 && p.beta() == 0.0;
  }
  return false;
}

std::string_view space_name(StrategySpace space) {
  switch (space) {
    case StrategySpace::kFullSU2:
      return "full";
    case StrategySpace::kTwoParamAlpha:
      return "alpha";
    case StrategySpace::kTwoParamBeta:
      return "beta";
    case StrategySpace::kOneParam:
      return "one";
  }
  return "?";
}

std::optional<StrategySpace> parse_space(std::string_view name) {
  if (name == "full" || name == "su2") return StrategySpace::kFullSU2;
  if (name == "alpha" || name == "D") return StrategySpace::kTwoParamAlpha;
  if (name == "beta" || name == "F") return StrategySpace::kTwoParamBeta;
  if (name == "one" || name == "theta") return StrategySpace::kOneParam;
  return std::nullopt;
}

namespace {

void require_quantizable(const ClassicalGame& g) {
  if (!g.is_binary()) throw std::invalid_argument("EWL games need two strategies per player");
  if (g.num_players() > kMaxQubits) throw std::invalid_argument("EWL games support at most 4 players");
}

std::vector<double> observable_diagonal(const ClassicalGame& g, int player) {
  // Binary games: row-major profile order is exactly the ket order.
  std::vector<double> d(g.num_profiles());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = g.payoff(player, k);
  return d;
}

}  // namespace

CMatrix payoff_operator(const ClassicalGame& g, int player) {
  require_quantizable(g);
  if (player < 0 || player >= g.num_players()) throw std::invalid_argument("no such player");
  return CMatrix::diagonal(observable_diagonal(g, player));
}

EwlGame::EwlGame(ClassicalGame base)
    : EwlGame(base, std::vector<StrategySpace>(static_cast<std::size_t>(base.num_players()),
                                               StrategySpace::kFullSU2)) {}

EwlGame::EwlGame(ClassicalGame base, std::vector<StrategySpace> spaces)
    : base_(std::move(base)), spaces_(std::move(spaces)) {
  require_quantizable(base_);
  if (static_cast<int>(spaces_.size()) != base_.num_players()) {
    throw std::invalid_argument("need one strategy space per player");
  }
  for (int i = 0; i < base_.num_players(); ++i) observables_.push_back(observable_diagonal(base_, i));
}

bool EwlGame::admits(std::span<const SU2Params> params) const {
  if (static_cast<int>(params.size()) != num_players()) return false;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!space_contains(spaces_[i], params[i])) return false;
  }
  return true;
}

std::vector<double> EwlGame::payoffs_unchecked(std::span<const SU2Params> params) const {
  const auto probs = outcome_probabilities(final_state(params));
  std::vector<double> out(observables_.size(), 0.0);
  for (std::size_t i = 0; i < observables_.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) s += observables_[i][j] * probs[j];
    out[i] = s;
  }
  return out;
}

Gate2 su2_gate(const SU2Params& p) {
  const double c = std::cos(p.theta() / 2.0);
  const double s = std::sin(p.theta() / 2.0);
  const Complex i{0.0, 1.0};
  return {std::polar(c, p.alpha()), i * std::polar(s, p.beta()), i * std::polar(s, -p.beta()),
          std::polar(c, -p.alpha())};
}

void ewl_circuit(std::span<const Gate2> gates, std::span<Complex> out) {
  const int n = static_cast<int>(gates.size());
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t mask = dim - 1;
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};

  // J|0..0> = (|0..0> + i|1..1>) / sqrt(2)
  std::array<Complex, std::size_t{1} << kMaxQubits> psi{};
  psi[0] = r;
  psi[mask] += i * r;

  for (int k = 0; k < n; ++k) {
    const Gate2& u = gates[static_cast<std::size_t>(k)];
    const std::size_t bit = std::size_t{1} << (n - 1 - k);
    for (std::size_t j = 0; j < dim; ++j) {
      if (j & bit) continue;
      const Complex a0 = psi[j];
      const Complex a1 = psi[j | bit];
      psi[j] = u[0] * a0 + u[1] * a1;
      psi[j | bit] = u[2] * a0 + u[3] * a1;
    }
  }

  // J^dagger = (1 - i sigma_x^{(x)n}) / sqrt(2); sigma_x^{(x)n} complements the index.
  for (std::size_t j = 0; j < dim; ++j) out[j] = r * (psi[j] - i * psi[~j & mask]);
}

CVector final_state(std::span<const SU2Params> params) {
  const int n = static_cast<int>(params.size());
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("final_state supports 1..4 players");
  std::array<Gate2, kMaxQubits> gates;
  for (int k = 0; k < n; ++k) gates[static_cast<std::size_t>(k)] = su2_gate(params[static_cast<std::size_t>(k)]);
  std::vector<Complex> amps(std::size_t{1} << n);
  ewl_circuit(std::span<const Gate2>(gates.data(), static_cast<std::size_t>(n)), amps);
  return CVector(std::move(amps));
}

std::vector<double> outcome_probabilities(const CVector& state) {
  std::vector<double> p(state.dim());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::norm(state[j]);
  return p;
}

std::vector<double> ewl_payoffs(const EwlGame& g, std::span<const SU2Params> params) {
  if (static_cast<int>(params.size()) != g.num_players()) {
    throw std::invalid_argument("need one SU(2) parameter triple per player");
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!space_contains(g.space(static_cast<int>(i)), params[i])) {
      throw std::invalid_argument("player " + std::to_string(i + 1) +
                                  "'s parameters lie outside strategy space '" +
                                  std::string(space_name(g.space(static_cast<int>(i)))) + "'");
    }
  }
  return g.payoffs_unchecked(params);
}

ClassicalGame prisoners_dilemma(const PdPayoffs& pd) {
  const double R = pd.reward, S = pd.sucker, T = pd.temptation, P = pd.punishment;
  return ClassicalGame({{"t", "b"}, {"l", "r"}}, {{R, R}, {S, T}, {T, S}, {P, P}});
}

ClassicalGame prisoners_dilemma_swapped(const PdPayoffs& pd) {
  const double R = pd.reward, S = pd.sucker, T = pd.temptation, P = pd.punishment;
  return ClassicalGame({{"t'", "b'"}, {"l'", "r'"}}, {{S, T}, {R, R}, {P, P}, {T, S}});
}

std::pair<double, double> two_param_payoff_closed_form(TwoParam p1, TwoParam p2,
                                                       const PdPayoffs& pd) {
  const double c1 = std::cos(p1.theta / 2.0), s1 = std::sin(p1.theta / 2.0);
  const double c2 = std::cos(p2.theta / 2.0), s2 = std::sin(p2.theta / 2.0);
  const double a1 = p1.alpha, a2 = p2.alpha;

  const double w00 = std::pow(std::cos(a1 + a2) * c1 * c2, 2);
  const double w01 = std::pow(std::cos(a1) * c1 * s2 + std::sin(a2) * s1 * c2, 2);
  const double w10 = std::pow(std::sin(a1) * c1 * s2 + std::cos(a2) * s1 * c2, 2);
  const double w11 = std::pow(std::sin(a1 + a2) * c1 * c2 - s1 * s2, 2);

  const double u1 = pd.sucker * w00 + pd.reward * w01 + pd.punishment * w10 + pd.temptation * w11;
  const double u2 = pd.temptation * w00 + pd.reward * w01 + pd.punishment * w10 + pd.sucker * w11;
  return {u1, u2};
}

}  // namespace qgame
