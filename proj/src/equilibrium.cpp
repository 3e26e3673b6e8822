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

#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgame {
namespace {

std::vector<double> theta_values(int steps) {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) v[static_cast<std::size_t>(k)] = kPi * k / (steps - 1);
  v.back() = kPi;
  return v;
}

std::vector<double> phase_values(int steps) {
  if (steps == 1) return {0.0};
  std::vector<double> v(static_cast<std::size_t>(steps - 1));
  for (int k = 0; k < steps - 1; ++k) v[static_cast<std::size_t>(k)] = kTwoPi * k / (steps - 1);
  return v;
}

std::vector<std::size_t> strides_of(const std::vector<std::vector<SU2Params>>& strategies) {
  std::vector<std::size_t> stride(strategies.size(), 1);
  for (std::size_t i = strategies.size(); i-- > 1;) stride[i - 1] = stride[i] * strategies[i].size();
  return stride;
}

std::size_t count_profiles(const std::vector<std::vector<SU2Params>>& strategies) {
  std::size_t total = 1;
  for (const auto& s : strategies) total *= s.size();
  return total;
}

std::vector<std::vector<SU2Params>> grid_strategies(const EwlGame& g, const ParamGrid& grid) {
  std::vector<std::vector<SU2Params>> strategies;
  for (int i = 0; i < g.num_players(); ++i) strategies.push_back(grid.strategies(g.space(i)));
  const std::size_t total = count_profiles(strategies);
  if (total > kMaxTensorEntries / static_cast<std::size_t>(g.num_players())) {
    throw std::invalid_argument("grid has too many profiles (" + std::to_string(total) + ")");
  }
  return strategies;
}

EpsEquilibrium make_equilibrium(const PayoffTensor& t, std::size_t k, double eps) {
  const auto n = static_cast<std::size_t>(t.num_players());
  const auto stride = strides_of(t.strategies);
  EpsEquilibrium e;
  e.eps = eps;
  for (std::size_t i = 0; i < n; ++i) {
    e.profile.push_back(t.strategies[i][(k / stride[i]) % t.strategies[i].size()]);
    e.payoffs.push_back(t.values[k * n + i]);
  }
  return e;
}

}  // namespace

ParamGrid ParamGrid::refined() const {
  auto twice = [](int s) { return s <= 1 ? s : 2 * (s - 1) + 1; };
  return ParamGrid{twice(theta_steps), twice(alpha_steps), twice(beta_steps)};
}

std::vector<SU2Params> ParamGrid::strategies(StrategySpace space) const {
  if (theta_steps < 2 || alpha_steps < 1 || beta_steps < 1) {
    throw std::invalid_argument("grid needs theta_steps >= 2 and alpha/beta steps >= 1");
  }
  const bool free_alpha = space == StrategySpace::kFullSU2 || space == StrategySpace::kTwoParamAlpha;
  const bool free_beta = space == StrategySpace::kFullSU2 || space == StrategySpace::kTwoParamBeta;
  const auto thetas = theta_values(theta_steps);
  const auto alphas = free_alpha ? phase_values(alpha_steps) : std::vector<double>{0.0};
  const auto betas = free_beta ? phase_values(beta_steps) : std::vector<double>{0.0};

  std::vector<SU2Params> out;
  out.reserve(thetas.size() * alphas.size() * betas.size());
  for (double t : thetas)
    for (double a : alphas)
      for (double b : betas) out.emplace_back(t, a, b);
  return out;
}

std::size_t PayoffTensor::num_profiles() const { return count_profiles(strategies); }

PayoffTensor grid_payoff_tensor(const EwlGame& g, const ParamGrid& grid, Execution exec) {
  PayoffTensor t;
  t.strategies = grid_strategies(g, grid);
  const auto n = static_cast<std::size_t>(g.num_players());
  const std::size_t total = t.num_profiles();
  const std::size_t dim = std::size_t{1} << n;
  const auto stride = strides_of(t.strategies);

  std::vector<std::vector<Gate2>> gates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : t.strategies[i]) gates[i].push_back(su2_gate(p));
  }
  std::vector<std::vector<double>> obs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto o = g.observable(static_cast<int>(i));
    obs[i].assign(o.begin(), o.end());
  }

  t.values.assign(total * n, 0.0);
  parallel_for(
      static_cast<std::int64_t>(total),
      [&](std::int64_t kk) {
        const auto k = static_cast<std::size_t>(kk);
        std::array<Gate2, kMaxQubits> profile_gates;
        for (std::size_t i = 0; i < n; ++i) {
          profile_gates[i] = gates[i][(k / stride[i]) % gates[i].size()];
        }
        std::array<Complex, std::size_t{1} << kMaxQubits> amps;
        ewl_circuit(std::span<const Gate2>(profile_gates.data(), n), std::span<Complex>(amps.data(), dim));
        std::array<double, std::size_t{1} << kMaxQubits> probs;
        for (std::size_t j = 0; j < dim; ++j) probs[j] = std::norm(amps[j]);
        for (std::size_t i = 0; i < n; ++i) {
          double s = 0.0;
          for (std::size_t j = 0; j < dim; ++j) s += obs[i][j] * probs[j];
          t.values[k * n + i] = s;
        }
      },
      exec);
  return t;
}

std::vector<EpsEquilibrium> grid_pure_ne(const EwlGame& g, const ParamGrid& grid, double eps,
                                         Execution exec) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be non-negative");
  const PayoffTensor t = grid_payoff_tensor(g, grid, exec);
  const auto n = static_cast<std::size_t>(t.num_players());
  const std::size_t total = t.num_profiles();
  const auto stride = strides_of(t.strategies);

  // Largest gain over unilateral deviations, per profile.
  std::vector<double> gain(total, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = t.strategies[i].size();
    const std::size_t lines = total / m;
    parallel_for(
        static_cast<std::int64_t>(lines),
        [&](std::int64_t ll) {
          const auto line = static_cast<std::size_t>(ll);
          // Base profile of the line: coordinate i set to zero.
          const std::size_t base = (line / stride[i]) * stride[i] * m + line % stride[i];
          double best = -std::numeric_limits<double>::infinity();
          for (std::size_t c = 0; c < m; ++c) best = std::max(best, t.values[(base + c * stride[i]) * n + i]);
          for (std::size_t c = 0; c < m; ++c) {
            const std::size_t k = base + c * stride[i];
            gain[k] = std::max(gain[k], best - t.values[k * n + i]);
          }
        },
        exec);
  }

  std::vector<EpsEquilibrium> out;
  for (std::size_t k = 0; k < total; ++k) {
    if (gain[k] <= eps) out.push_back(make_equilibrium(t, k, gain[k]));
  }
  return out;
}

std::size_t count_distinct_outcomes(std::span<const EpsEquilibrium> equilibria, double tol) {
  std::vector<CVector> representatives;
  for (const auto& e : equilibria) {
    const CVector psi = final_state(e.profile);
    const bool known = std::any_of(representatives.begin(), representatives.end(), [&](const CVector& r) {
      Complex overlap{};
      for (std::size_t j = 0; j < r.dim(); ++j) overlap += std::conj(r[j]) * psi[j];
      return std::abs(overlap) >= 1.0 - tol;
    });
    if (!known) representatives.push_back(psi);
  }
  return representatives.size();
}

TwoParam best_reply_two_param(TwoParam opponent) {
  const double a2 = normalize_angle(opponent.alpha);
  const double reply = a2 <= 1.5 * kPi ? 1.5 * kPi - a2 : 3.5 * kPi - a2;
  return TwoParam{opponent.theta, normalize_angle(reply)};
}

TwoParam counterexample_witness(TwoParam player1) {
  return TwoParam{0.0, normalize_angle(kTwoPi - normalize_angle(player1.alpha))};
}

namespace reference {

std::vector<EpsEquilibrium> grid_pure_ne(const EwlGame& g, const ParamGrid& grid, double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be non-negative");
  const auto strategies = grid_strategies(g, grid);
  const auto n = static_cast<std::size_t>(g.num_players());
  const std::size_t total = count_profiles(strategies);
  const auto stride = strides_of(strategies);

  std::vector<EpsEquilibrium> out;
  std::vector<SU2Params> profile(n);
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < n; ++i) profile[i] = strategies[i][(k / stride[i]) % strategies[i].size()];
    const std::vector<double> u = ewl_payoffs(g, profile);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<SU2Params> dev = profile;
      for (const auto& alt : strategies[i]) {
        dev[i] = alt;
        worst = std::max(worst, ewl_payoffs(g, dev)[i] - u[i]);
      }
    }
    if (worst <= eps) out.push_back(EpsEquilibrium{profile, worst, u});
  }
  return out;
}

}  // namespace reference

}  // namespace qgame
