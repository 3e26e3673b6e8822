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

#include "qgame/lift.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qgame/parallel.hpp"

namespace qgame {

AngleMap AngleMap::identity() {
  AngleMap m;
  m.linear = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return m;
}

AngleMap AngleMap::reflect(double phase_offset) {
  AngleMap m;
  m.linear = {{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}};
  m.offset = {kPi, phase_offset, phase_offset};
  return m;
}

AngleMap AngleMap::flip() {
  AngleMap m = reflect(kTwoPi);
  m.offset[2] = kPi;
  return m;
}

SU2Params AngleMap::operator()(const SU2Params& p) const {
  const std::array<double, 3> x{p.theta(), p.alpha(), p.beta()};
  std::array<double, 3> y{};
  for (std::size_t r = 0; r < 3; ++r) {
    double acc = offset[r];
    for (std::size_t c = 0; c < 3; ++c) {
      if (linear[r][c] != 0) acc += linear[r][c] * x[c];
    }
    y[r] = acc;
  }
  return SU2Params(y[0], y[1], y[2]);
}

CMatrix LiftedMapping::correction(int player) const {
  switch (transforms.at(static_cast<std::size_t>(player)).kind) {
    case PlayerTransform::Kind::kKeep:
      return CMatrix::identity(2);
    case PlayerTransform::Kind::kFlip:
      return Complex{0.0, -1.0} * CMatrix::pauli_x();
    case PlayerTransform::Kind::kCustom:
      break;
  }
  throw std::logic_error("custom transforms have no Keep/Flip correction");
}

LiftedMapping lift(const GameMapping& f, const ClassicalGame& g) {
  if (!g.is_binary()) throw std::invalid_argument("lifting needs two strategies per player");
  if (f.num_players() != g.num_players() || f.phi.size() != f.eta.size()) {
    throw ContractViolation("mapping does not fit the game");
  }
  f.validate();
  LiftedMapping lm;
  lm.eta = f.eta;
  for (const auto& p : f.phi) {
    if (p.size() != 2) throw ContractViolation("phi_i must act on two strategies");
    lm.transforms.push_back(p[0] == 0 ? PlayerTransform::keep() : PlayerTransform::flip());
  }
  return lm;
}

LiftedMapping lift(const GameMapping& f, const ClassicalGame& g, const ClassicalGame& g2) {
  if (!g.is_binary() || !g2.is_binary()) {
    throw std::invalid_argument("lifting needs two strategies per player");
  }
  if (!is_strong_isomorphism(f, g, g2)) throw ContractViolation("mapping is not a strong isomorphism");
  return lift(f, g);
}

std::vector<SU2Params> apply_lift(const LiftedMapping& lm, std::span<const SU2Params> params) {
  if (static_cast<int>(params.size()) != lm.num_players() ||
      lm.transforms.size() != lm.eta.size()) {
    throw std::invalid_argument("lifted mapping and profile have different player counts");
  }
  std::vector<SU2Params> out(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    out[static_cast<std::size_t>(lm.eta[i])] = lm.transforms[i].map(params[i]);
  }
  return out;
}

std::string LiftReport::verdict() const {
  if (passed()) return "pass";
  if (space_escapes > 0 && mismatches == 0) return "space-escape";
  if (space_escapes == 0) return "payoff-mismatch";
  return "space-escape+payoff-mismatch";
}

namespace {

SU2Params draw_params(StrategySpace space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  const double t = theta(rng);
  const double a = phase(rng);
  const double b = phase(rng);
  switch (space) {
    case StrategySpace::kFullSU2:
      return SU2Params(t, a, b);
    case StrategySpace::kTwoParamAlpha:
      return SU2Params(t, a, 0.0);
    case StrategySpace::kTwoParamBeta:
      return SU2Params(t, 0.0, b);
    case StrategySpace::kOneParam:
      return SU2Params(t, 0.0, 0.0);
  }
  return SU2Params(t, a, b);
}

}  // namespace

LiftReport verify_lift(const LiftedMapping& lm, const EwlGame& g, const EwlGame& g2,
                       int samples, std::uint64_t seed, double tol) {
  const int n = g.num_players();
  if (g2.num_players() != n || lm.num_players() != n) {
    throw std::invalid_argument("games and lifted mapping have different player counts");
  }
  if (samples < 0) throw std::invalid_argument("sample count must be non-negative");

  // Draw serially so the profiles depend only on the seed.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<SU2Params>> profiles(static_cast<std::size_t>(samples));
  for (auto& prof : profiles) {
    for (int i = 0; i < n; ++i) prof.push_back(draw_params(g.space(i), rng));
  }

  enum class Outcome : unsigned char { kMatch, kMismatch, kEscape };
  std::vector<Outcome> outcome(profiles.size());
  std::vector<double> deviation(profiles.size(), 0.0);

  parallel_for(static_cast<std::int64_t>(profiles.size()), [&](std::int64_t s) {
    const auto k = static_cast<std::size_t>(s);
    const std::vector<SU2Params> image = apply_lift(lm, profiles[k]);
    if (!g2.admits(image)) {
      outcome[k] = Outcome::kEscape;
      return;
    }
    const auto u = g.payoffs_unchecked(profiles[k]);
    const auto u2 = g2.payoffs_unchecked(image);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
      dev = std::max(dev, std::abs(u[static_cast<std::size_t>(i)] -
                                   u2[static_cast<std::size_t>(lm.eta[static_cast<std::size_t>(i)])]));
    }
    deviation[k] = dev;
    outcome[k] = dev <= tol ? Outcome::kMatch : Outcome::kMismatch;
  });

  LiftReport report;
  report.seed = seed;
  report.samples = samples;
  report.tolerance = tol;
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    if (outcome[k] == Outcome::kEscape) {
      ++report.space_escapes;
      continue;
    }
    ++report.evaluated;
    if (outcome[k] == Outcome::kMismatch) ++report.mismatches;
    report.max_deviation = std::max(report.max_deviation, deviation[k]);
  }
  return report;
}

bool IdentityReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

namespace {

CMatrix sigma_x() { return CMatrix::pauli_x(); }

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double max_abs(const CMatrix& m) { return m.max_abs_diff(CMatrix(m.rows(), m.cols())); }

// Uniformly random normalized state (complex Gaussian amplitudes).
CVector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CVector v(dim);
  for (std::size_t j = 0; j < dim; ++j) v[j] = Complex{gauss(rng), gauss(rng)};
  const double norm = std::sqrt(v.norm_squared());
  for (std::size_t j = 0; j < dim; ++j) v[j] /= norm;
  return v;
}

}  // namespace

IdentityReport operator_identity_suite(int draws, std::uint64_t seed, double tol) {
  if (draws < 1) throw std::invalid_argument("identity suite needs at least one draw");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);
  auto draw = [&] { return SU2Params(theta_dist(rng), phase_dist(rng), phase_dist(rng)); };

  const Complex minus_i{0.0, -1.0};
  const CMatrix x = sigma_x();
  const CMatrix id2 = CMatrix::identity(2);
  const CMatrix x1x = tensor({x, id2, x});

  // The 3-player example: eta = (1 -> 2, 2 -> 3, 3 -> 1); players 2 and 3
  // have their strategy order reversed.
  const QubitPermutation eta3({1, 2, 0});
  const CMatrix s_eta = permutation_operator(eta3);
  const CMatrix j3 = entangler(3);
  const std::size_t flip_mask = 0b101;  // target positions eta(2) = 3, eta(3) = 1

  double res_a = 0, res_b = 0, res_c = 0, res_d = 0, res_e = 0, res_f = 0;

  // (e) does not depend on the draws.
  res_e = std::max({max_abs(commutator(j3.adjoint(), Complex{-1.0, 0.0} * x1x)),
                    max_abs(commutator(j3.adjoint(), s_eta)), max_abs(commutator(j3, s_eta))});

  std::uniform_int_distribution<int> qubit_count(2, kMaxQubits);
  for (int d = 0; d < draws; ++d) {
    const SU2Params p = draw();
    const double t = p.theta(), a = p.alpha(), b = p.beta();

    // (a) two-parameter reflection into the beta-only family.
    res_a = std::max(res_a, su2(SU2Params(kPi - t, 0.0, kPi - a))
                                .max_abs_diff(minus_i * x * su2(SU2Params(t, a, 0.0))));
    // (b) full reflection.
    res_b = std::max(res_b, su2(SU2Params(kPi - t, kTwoPi - b, kPi - a))
                                .max_abs_diff(minus_i * x * su2(p)));

    // (c) three-factor reduction.
    const SU2Params p1 = draw(), p2 = draw(), p3 = draw();
    const CMatrix lhs = tensor({su2(AngleMap::flip()(p3)), su2(p1), su2(AngleMap::flip()(p2))});
    const CMatrix rhs = Complex{-1.0, 0.0} * x1x * tensor({su2(p3), su2(p1), su2(p2)});
    res_c = std::max(res_c, lhs.max_abs_diff(rhs));

    // (d) S_eta conjugation, on the fixed 3-cycle and on a random permutation.
    const CMatrix prod = tensor({su2(p1), su2(p2), su2(p3)});
    res_d = std::max(res_d, (s_eta * prod * s_eta.adjoint())
                                .max_abs_diff(tensor({su2(p3), su2(p1), su2(p2)})));
    const int n = qubit_count(rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    const QubitPermutation q(perm);
    std::vector<CMatrix> us;
    for (int k = 0; k < n; ++k) us.push_back(su2(draw()));
    std::vector<CMatrix> moved(us.size());
    for (int k = 0; k < n; ++k) moved[static_cast<std::size_t>(q[k])] = us[static_cast<std::size_t>(k)];
    const CMatrix sq = permutation_operator(q);
    res_d = std::max(res_d, (sq * tensor(us) * sq.adjoint()).max_abs_diff(tensor(moved)));

    // (f) |<f(j)| (sigma_x (x) 1 (x) sigma_x) S_eta |psi>| = |<j|psi>|.
    const CVector psi = random_state(8, rng);
    const CVector moved_psi = x1x * (s_eta * psi);
    for (std::size_t j = 0; j < 8; ++j) {
      const std::size_t fj = permute_basis_index(eta3, j) ^ flip_mask;
      res_f = std::max(res_f, std::abs(std::abs(moved_psi[fj]) - std::abs(psi[j])));
    }
  }

  IdentityReport report;
  report.seed = seed;
  report.draws = draws;
  report.tolerance = tol;
  auto add = [&](std::string name, std::string description, double residual) {
    report.checks.push_back({std::move(name), std::move(description), residual, residual <= tol});
  };
  add("a", "U(pi-t, 0, pi-a) = -i sx U(t, a, 0)", res_a);
  add("b", "U(pi-t, 2pi-b, pi-a) = -i sx U(t, a, b)", res_b);
  add("c", "flipped 3-factor product = (-sx (x) 1 (x) sx) (U3 (x) U1 (x) U2)", res_c);
  add("d", "S (x)U_i S^dagger = (x)U_{eta^-1(i)}", res_d);
  add("e", "[J^dagger, -sx(x)1(x)sx] = [J^dagger, S] = [J, S] = 0", res_e);
  add("f", "|<f(j)| (sx(x)1(x)sx) S |psi>| = |<j|psi>|", res_f);
  return report;
}

}  // namespace qgame
