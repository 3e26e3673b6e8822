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

#ifndef QGAME_GAME_HPP_
#define QGAME_GAME_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite games in strategic form, game mappings between them, strong
// isomorphism search and pure/mixed equilibrium enumeration.

namespace qgame {

// A precondition of an operation was not met by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr double kPayoffTol = 1e-12;
inline constexpr double kAffineTol = 1e-9;

struct StrategyProfile {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  int operator[](int player) const { return indices[static_cast<std::size_t>(player)]; }

  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

class ClassicalGame {
 public:
  // `payoffs[k]` is the payoff vector (one entry per player) of the k-th
  // profile in row-major order, player 1's strategy most significant.
  ClassicalGame(std::vector<std::vector<std::string>> labels,
                std::vector<std::vector<double>> payoffs);

  int num_players() const { return static_cast<int>(labels_.size()); }
  int num_strategies(int player) const {
    return static_cast<int>(labels_[static_cast<std::size_t>(player)].size());
  }
  std::vector<int> strategy_counts() const;
  std::size_t num_profiles() const { return num_profiles_; }
  bool is_binary() const;

  const std::vector<std::string>& labels(int player) const {
    return labels_[static_cast<std::size_t>(player)];
  }

  std::size_t profile_index(const StrategyProfile& s) const;
  StrategyProfile profile_at(std::size_t index) const;

  double payoff(int player, std::size_t profile_index) const {
    return payoffs_[profile_index * labels_.size() + static_cast<std::size_t>(player)];
  }
  double payoff(int player, const StrategyProfile& s) const {
    return payoff(player, profile_index(s));
  }

  // All profiles in row-major order.
  std::vector<StrategyProfile> profiles() const;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<double> payoffs_;
  std::size_t num_profiles_ = 0;
};

// f = (eta, (phi_i)): player i of the source game is identified with player
// eta[i] of the target, and phi[i][k] is the target index (for player eta[i])
// of source strategy k of player i.
struct GameMapping {
  std::vector<int> eta;
  std::vector<std::vector<int>> phi;

  static GameMapping identity(const std::vector<int>& strategy_counts);

  int num_players() const { return static_cast<int>(eta.size()); }

  // Throws ContractViolation unless eta and every phi_i are bijections.
  void validate() const;
  // True when the mapping's shape fits g -> g2.
  bool fits(const ClassicalGame& g, const ClassicalGame& g2) const;

  GameMapping inverse() const;
  // (second o first): apply `first`, then `second`.
  static GameMapping compose(const GameMapping& first, const GameMapping& second);

  friend bool operator==(const GameMapping&, const GameMapping&) = default;
};

// s' with s'_{eta(i)} = phi_i(s_i).
StrategyProfile apply_mapping(const GameMapping& f, const StrategyProfile& s);

// u_i(s) = u'_{eta(i)}(f(s)) for all i, s. Shape mismatch yields false.
bool is_strong_isomorphism(const GameMapping& f, const ClassicalGame& g,
                           const ClassicalGame& g2, double tol = kPayoffTol);

// Every strong isomorphism g -> g2. Candidates are ordered by eta
// (lexicographic), then by the phi tuple (lexicographic, player 1 first).
std::vector<GameMapping> find_strong_isomorphisms(const ClassicalGame& g,
                                                  const ClassicalGame& g2);

// The game g2 for which f is a strong isomorphism g -> g2. Labels of the
// target player eta(i) are player i's labels reordered by phi_i, with
// `label_suffix` appended.
ClassicalGame image_game(const ClassicalGame& g, const GameMapping& f,
                         const std::string& label_suffix = "'");

struct AffineFit {
  double alpha = 1.0;
  double beta = 0.0;
};

// Per-player (alpha_i > 0, beta_i) with v_i = alpha_i u_i + beta_i, or
// nullopt. A constant u_i gets alpha_i = 1. Games must share shape and labels.
std::optional<std::vector<AffineFit>> strategic_equivalence(const ClassicalGame& g,
                                                            const ClassicalGame& g2);

// Profiles from which no unilateral deviation gains more than `tol`.
std::vector<StrategyProfile> pure_nash_equilibria(const ClassicalGame& g,
                                                  double tol = kPayoffTol);

struct MixedProfile2x2 {
  double p = 0.0;  // probability player 1 plays its first strategy
  double q = 0.0;  // probability player 2 plays its first strategy
};

struct MixedEquilibria2x2 {
  // Isolated equilibria, and the extreme points of any equilibrium continuum.
  std::vector<MixedProfile2x2> profiles;
  bool continuum = false;
};

// Equilibria of a 2x2 bimatrix game, sorted by (p, q). Throws
// std::invalid_argument for any other shape.
MixedEquilibria2x2 mixed_nash_2x2(const ClassicalGame& g);

// True iff f carries the pure-equilibrium set of g bijectively onto that of
// g2. Throws ContractViolation if f is not a strong isomorphism.
bool lemma1_transport_check(const GameMapping& f, const ClassicalGame& g,
                            const ClassicalGame& g2);

}  // namespace qgame

#endif  // QGAME_GAME_HPP_
