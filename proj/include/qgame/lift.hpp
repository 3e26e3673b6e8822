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

#ifndef QGAME_LIFT_HPP_
#define QGAME_LIFT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qgame/ewl.hpp"
#include "qgame/game.hpp"
#include "qgame/linalg.hpp"

// Lifting classical strong isomorphisms of binary games to mappings between
// the corresponding EWL games, and numerical verification of the result.

namespace qgame {

inline constexpr double kLiftTol = 1e-10;
inline constexpr double kIdentityTol = 1e-12;

// (theta, alpha, beta) -> linear * (theta, alpha, beta) + offset, followed by
// the usual normalization of alpha and beta.
struct AngleMap {
  std::array<std::array<int, 3>, 3> linear{};
  std::array<double, 3> offset{};

  static AngleMap identity();
  // (theta, alpha, beta) -> (pi - theta, 2pi - beta, pi - alpha).
  static AngleMap flip();
  // (theta, alpha, beta) -> (pi - theta, c - beta, c - alpha).
  static AngleMap reflect(double phase_offset);

  SU2Params operator()(const SU2Params& p) const;
};

struct PlayerTransform {
  enum class Kind { kKeep, kFlip, kCustom };

  Kind kind = Kind::kKeep;
  AngleMap map = AngleMap::identity();

  static PlayerTransform keep() { return {Kind::kKeep, AngleMap::identity()}; }
  static PlayerTransform flip() { return {Kind::kFlip, AngleMap::flip()}; }
  static PlayerTransform custom(AngleMap m) { return {Kind::kCustom, m}; }
};

struct LiftedMapping {
  std::vector<int> eta;
  std::vector<PlayerTransform> transforms;

  int num_players() const { return static_cast<int>(eta.size()); }
  // V_i: identity for Keep, -i sigma_x for Flip. Throws std::logic_error for
  // custom transforms, which have no such correction.
  CMatrix correction(int player) const;
};

// Keep for players whose phi_i preserves strategy order, Flip for those whose
// phi_i swaps it. Throws std::invalid_argument for non-binary games and
// ContractViolation if f does not fit g.
LiftedMapping lift(const GameMapping& f, const ClassicalGame& g);
// As above, additionally requiring f to be a strong isomorphism g -> g2.
LiftedMapping lift(const GameMapping& f, const ClassicalGame& g, const ClassicalGame& g2);

// Output position eta(i) holds transform_i(params_i).
std::vector<SU2Params> apply_lift(const LiftedMapping& lm, std::span<const SU2Params> params);

struct LiftReport {
  std::uint64_t seed = 0;
  int samples = 0;
  int evaluated = 0;      // samples whose image stays inside the target spaces
  int space_escapes = 0;  // samples mapped outside a target space
  int mismatches = 0;     // evaluated samples with deviation above tolerance
  double max_deviation = 0.0;
  double tolerance = kLiftTol;

  bool passed() const { return space_escapes == 0 && mismatches == 0 && evaluated == samples; }
  std::string verdict() const;
};

// Draws `samples` profiles uniformly from the (theta, alpha, beta) box of each
// player's space in g and checks |u_i(U) - u'_{eta(i)}(f~(U))| <= tol.
// Profiles whose image leaves g2's spaces count as space escapes.
LiftReport verify_lift(const LiftedMapping& lm, const EwlGame& g, const EwlGame& g2,
                       int samples, std::uint64_t seed, double tol = kLiftTol);

struct IdentityCheck {
  std::string name;
  std::string description;
  double max_residual = 0.0;
  bool passed = false;
};

struct IdentityReport {
  std::uint64_t seed = 0;
  int draws = 0;
  double tolerance = kIdentityTol;
  std::vector<IdentityCheck> checks;

  bool passed() const;
};

// Conjugation and commutation identities behind the lifting construction,
// each checked on `draws` random parameter sets (or states).
IdentityReport operator_identity_suite(int draws = 200, std::uint64_t seed = 1,
                                       double tol = kIdentityTol);

}  // namespace qgame

#endif  // QGAME_LIFT_HPP_
