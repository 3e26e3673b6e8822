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

#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace qgame::testing {

CVector dense_final_state(std::span<const SU2Params> params) {
  std::vector<CMatrix> factors;
  for (const auto& p : params) factors.push_back(su2(p));
  const int n = static_cast<int>(params.size());
  const CMatrix j = entangler(n);
  const CMatrix u = j.adjoint() * tensor(factors) * j;
  return u * CVector::basis(std::size_t{1} << n, 0);
}

std::vector<double> dense_payoffs(const ClassicalGame& g, std::span<const SU2Params> params) {
  const CVector psi = dense_final_state(params);
  std::vector<double> out;
  for (int i = 0; i < g.num_players(); ++i) out.push_back(expectation(psi, payoff_operator(g, i)));
  return out;
}

ClassicalGame random_binary_game(int players, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pay(-5.0, 5.0);
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i < players; ++i) {
    labels.push_back({"a" + std::to_string(i + 1), "b" + std::to_string(i + 1)});
  }
  std::vector<std::vector<double>> payoffs(std::size_t{1} << players);
  for (auto& row : payoffs) {
    for (int i = 0; i < players; ++i) row.push_back(pay(rng));
  }
  return ClassicalGame(std::move(labels), std::move(payoffs));
}

GameMapping random_mapping(const std::vector<int>& strategy_counts, std::mt19937_64& rng) {
  GameMapping f;
  const int n = static_cast<int>(strategy_counts.size());
  f.eta.resize(static_cast<std::size_t>(n));
  std::iota(f.eta.begin(), f.eta.end(), 0);
  std::shuffle(f.eta.begin(), f.eta.end(), rng);
  for (int c : strategy_counts) {
    std::vector<int> phi(static_cast<std::size_t>(c));
    std::iota(phi.begin(), phi.end(), 0);
    std::shuffle(phi.begin(), phi.end(), rng);
    f.phi.push_back(std::move(phi));
  }
  return f;
}

SU2Params random_su2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  const double t = theta(rng);
  const double a = phase(rng);
  return SU2Params(t, a, phase(rng));
}

SU2Params random_in_space(StrategySpace space, std::mt19937_64& rng) {
  const SU2Params p = random_su2(rng);
  switch (space) {
    case StrategySpace::kFullSU2: return p;
    case StrategySpace::kTwoParamAlpha: return SU2Params(p.theta(), p.alpha(), 0.0);
    case StrategySpace::kTwoParamBeta: return SU2Params(p.theta(), 0.0, p.beta());
    case StrategySpace::kOneParam: return SU2Params(p.theta(), 0.0, 0.0);
  }
  return p;
}

std::vector<StrategyProfile> brute_force_pure_ne(const ClassicalGame& g) {
  std::vector<StrategyProfile> out;
  for (const auto& s : g.profiles()) {
    bool stable = true;
    for (int i = 0; i < g.num_players() && stable; ++i) {
      for (int alt = 0; alt < g.num_strategies(i); ++alt) {
        StrategyProfile d = s;
        d.indices[static_cast<std::size_t>(i)] = alt;
        if (g.payoff(i, d) > g.payoff(i, s) + 1e-12) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(s);
  }
  return out;
}

ClassicalGame antidiagonal_game() {
  return ClassicalGame({{"t", "b"}, {"l", "r"}}, {{4, 4}, {1, 3}, {3, 1}, {2, 2}});
}

ClassicalGame antidiagonal_game_swapped() {
  return ClassicalGame({{"t'", "b'"}, {"l'", "r'"}}, {{4, 4}, {3, 1}, {1, 3}, {2, 2}});
}

std::string data_path(const std::string& name) { return std::string(QGAME_DATA_DIR) + "/" + name; }

}  // namespace qgame::testing
