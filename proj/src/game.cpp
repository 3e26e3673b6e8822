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

#include "qgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace qgame {
namespace {

std::vector<int> iota_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(x)]) {
      return false;
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p = iota_vector(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

ClassicalGame::ClassicalGame(std::vector<std::vector<std::string>> labels,
                             std::vector<std::vector<double>> payoffs)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("a game needs at least one player");
  num_profiles_ = 1;
  for (const auto& ls : labels_) {
    if (ls.size() < 2) throw std::invalid_argument("each player needs at least two strategies");
    std::set<std::string> distinct(ls.begin(), ls.end());
    if (distinct.size() != ls.size()) {
      throw std::invalid_argument("strategy labels of a player must be distinct");
    }
    num_profiles_ *= ls.size();
  }
  if (payoffs.size() != num_profiles_) {
    throw std::invalid_argument("payoff table has " + std::to_string(payoffs.size()) +
                                " entries, expected " + std::to_string(num_profiles_));
  }
  payoffs_.reserve(num_profiles_ * labels_.size());
  for (const auto& v : payoffs) {
    if (v.size() != labels_.size()) {
      throw std::invalid_argument("payoff vector length must equal the player count");
    }
    for (double x : v) {
      if (!std::isfinite(x)) throw std::invalid_argument("payoffs must be finite");
      payoffs_.push_back(x);
    }
  }
}

std::vector<int> ClassicalGame::strategy_counts() const {
  std::vector<int> c;
  for (const auto& ls : labels_) c.push_back(static_cast<int>(ls.size()));
  return c;
}

bool ClassicalGame::is_binary() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const auto& ls) { return ls.size() == 2; });
}

std::size_t ClassicalGame::profile_index(const StrategyProfile& s) const {
  if (s.size() != num_players()) throw ContractViolation("profile length mismatch");
  std::size_t idx = 0;
  for (int i = 0; i < num_players(); ++i) {
    const int k = s[i];
    if (k < 0 || k >= num_strategies(i)) throw ContractViolation("strategy index out of range");
    idx = idx * static_cast<std::size_t>(num_strategies(i)) + static_cast<std::size_t>(k);
  }
  return idx;
}

StrategyProfile ClassicalGame::profile_at(std::size_t index) const {
  StrategyProfile s{std::vector<int>(labels_.size())};
  for (int i = num_players() - 1; i >= 0; --i) {
    const auto m = static_cast<std::size_t>(num_strategies(i));
    s.indices[static_cast<std::size_t>(i)] = static_cast<int>(index % m);
    index /= m;
  }
  return s;
}

std::vector<StrategyProfile> ClassicalGame::profiles() const {
  std::vector<StrategyProfile> out;
  out.reserve(num_profiles_);
  for (std::size_t k = 0; k < num_profiles_; ++k) out.push_back(profile_at(k));
  return out;
}

GameMapping GameMapping::identity(const std::vector<int>& strategy_counts) {
  GameMapping f;
  f.eta = iota_vector(static_cast<int>(strategy_counts.size()));
  for (int m : strategy_counts) f.phi.push_back(iota_vector(m));
  return f;
}

void GameMapping::validate() const {
  if (phi.size() != eta.size()) throw ContractViolation("mapping needs one phi per player");
  if (!is_permutation_of_range(eta)) throw ContractViolation("eta is not a bijection");
  for (const auto& p : phi) {
    if (!is_permutation_of_range(p)) throw ContractViolation("phi_i is not a bijection");
  }
}

bool GameMapping::fits(const ClassicalGame& g, const ClassicalGame& g2) const {
  const int n = g.num_players();
  if (g2.num_players() != n || num_players() != n || static_cast<int>(phi.size()) != n) {
    return false;
  }
  if (!is_permutation_of_range(eta)) return false;
  for (int i = 0; i < n; ++i) {
    const auto& p = phi[static_cast<std::size_t>(i)];
    if (static_cast<int>(p.size()) != g.num_strategies(i)) return false;
    if (g2.num_strategies(eta[static_cast<std::size_t>(i)]) != g.num_strategies(i)) return false;
    if (!is_permutation_of_range(p)) return false;
  }
  return true;
}

GameMapping GameMapping::inverse() const {
  validate();
  GameMapping inv;
  inv.eta.resize(eta.size());
  inv.phi.resize(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const auto target = static_cast<std::size_t>(eta[i]);
    inv.eta[target] = static_cast<int>(i);
    std::vector<int> back(phi[i].size());
    for (std::size_t k = 0; k < phi[i].size(); ++k) {
      back[static_cast<std::size_t>(phi[i][k])] = static_cast<int>(k);
    }
    inv.phi[target] = std::move(back);
  }
  return inv;
}

GameMapping GameMapping::compose(const GameMapping& first, const GameMapping& second) {
  first.validate();
  second.validate();
  if (first.eta.size() != second.eta.size()) throw ContractViolation("player count mismatch");
  GameMapping out;
  for (std::size_t i = 0; i < first.eta.size(); ++i) {
    const auto mid = static_cast<std::size_t>(first.eta[i]);
    out.eta.push_back(second.eta[mid]);
    std::vector<int> p;
    for (int k : first.phi[i]) p.push_back(second.phi[mid].at(static_cast<std::size_t>(k)));
    out.phi.push_back(std::move(p));
  }
  return out;
}

StrategyProfile apply_mapping(const GameMapping& f, const StrategyProfile& s) {
  if (f.num_players() != s.size() || f.phi.size() != f.eta.size()) {
    throw ContractViolation("mapping and profile have different player counts");
  }
  StrategyProfile out{std::vector<int>(s.indices.size())};
  for (int i = 0; i < s.size(); ++i) {
    const auto& p = f.phi[static_cast<std::size_t>(i)];
    if (s[i] < 0 || s[i] >= static_cast<int>(p.size())) {
      throw ContractViolation("strategy index outside phi_i's domain");
    }
    out.indices[static_cast<std::size_t>(f.eta[static_cast<std::size_t>(i)])] =
        p[static_cast<std::size_t>(s[i])];
  }
  return out;
}

bool is_strong_isomorphism(const GameMapping& f, const ClassicalGame& g,
                           const ClassicalGame& g2, double tol) {
  if (!f.fits(g, g2)) return false;
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    const StrategyProfile s = g.profile_at(k);
    const std::size_t k2 = g2.profile_index(apply_mapping(f, s));
    for (int i = 0; i < g.num_players(); ++i) {
      if (std::abs(g.payoff(i, k) - g2.payoff(f.eta[static_cast<std::size_t>(i)], k2)) > tol) {
        return false;
      }
    }
  }
  return true;
}

std::vector<GameMapping> find_strong_isomorphisms(const ClassicalGame& g,
                                                  const ClassicalGame& g2) {
  std::vector<GameMapping> found;
  const int n = g.num_players();
  if (g2.num_players() != n) return found;

  std::vector<std::vector<std::vector<int>>> phi_choices;
  for (int i = 0; i < n; ++i) phi_choices.push_back(all_permutations(g.num_strategies(i)));

  for (const auto& eta : all_permutations(n)) {
    bool shapes_ok = true;
    for (int i = 0; i < n; ++i) {
      shapes_ok = shapes_ok && g.num_strategies(i) == g2.num_strategies(eta[static_cast<std::size_t>(i)]);
    }
    if (!shapes_ok) continue;

    // Odometer over the phi tuple, player 1 most significant.
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    while (true) {
      GameMapping f{eta, {}};
      for (int i = 0; i < n; ++i) {
        f.phi.push_back(phi_choices[static_cast<std::size_t>(i)][digit[static_cast<std::size_t>(i)]]);
      }
      if (is_strong_isomorphism(f, g, g2)) found.push_back(std::move(f));

      int pos = n - 1;
      while (pos >= 0) {
        auto& d = digit[static_cast<std::size_t>(pos)];
        if (++d < phi_choices[static_cast<std::size_t>(pos)].size()) break;
        d = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return found;
}

ClassicalGame image_game(const ClassicalGame& g, const GameMapping& f,
                         const std::string& label_suffix) {
  f.validate();
  const int n = g.num_players();
  if (f.num_players() != n) throw ContractViolation("mapping and game have different player counts");

  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& p = f.phi[static_cast<std::size_t>(i)];
    if (static_cast<int>(p.size()) != g.num_strategies(i)) {
      throw ContractViolation("phi_i size differs from the strategy count");
    }
    auto& target = labels[static_cast<std::size_t>(f.eta[static_cast<std::size_t>(i)])];
    target.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      target[static_cast<std::size_t>(p[k])] = g.labels(i)[k] + label_suffix;
    }
  }

  // Payoff table of the target, filled through f; the shape of the target
  // is implied by the labels.
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (const auto& ls : labels) {
    dims.push_back(ls.size());
    total *= ls.size();
  }
  std::vector<std::vector<double>> payoffs(total, std::vector<double>(static_cast<std::size_t>(n)));
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    const StrategyProfile t = apply_mapping(f, g.profile_at(k));
    std::size_t idx = 0;
    for (int j = 0; j < n; ++j) idx = idx * dims[static_cast<std::size_t>(j)] + static_cast<std::size_t>(t[j]);
    for (int i = 0; i < n; ++i) {
      payoffs[idx][static_cast<std::size_t>(f.eta[static_cast<std::size_t>(i)])] = g.payoff(i, k);
    }
  }
  return ClassicalGame(std::move(labels), std::move(payoffs));
}

std::optional<std::vector<AffineFit>> strategic_equivalence(const ClassicalGame& g,
                                                            const ClassicalGame& g2) {
  if (g.num_players() != g2.num_players()) return std::nullopt;
  for (int i = 0; i < g.num_players(); ++i) {
    if (g.labels(i) != g2.labels(i)) return std::nullopt;
  }

  std::vector<AffineFit> fits;
  for (int i = 0; i < g.num_players(); ++i) {
    // Fit through the extreme profiles of u_i for conditioning.
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t k = 1; k < g.num_profiles(); ++k) {
      if (g.payoff(i, k) < g.payoff(i, lo)) lo = k;
      if (g.payoff(i, k) > g.payoff(i, hi)) hi = k;
    }
    AffineFit fit;
    const double du = g.payoff(i, hi) - g.payoff(i, lo);
    if (du == 0.0) {
      fit.alpha = 1.0;
      fit.beta = g2.payoff(i, lo) - g.payoff(i, lo);
    } else {
      fit.alpha = (g2.payoff(i, hi) - g2.payoff(i, lo)) / du;
      fit.beta = g2.payoff(i, lo) - fit.alpha * g.payoff(i, lo);
    }
    if (!(fit.alpha > 0.0)) return std::nullopt;
    for (std::size_t k = 0; k < g.num_profiles(); ++k) {
      if (std::abs(fit.alpha * g.payoff(i, k) + fit.beta - g2.payoff(i, k)) > kAffineTol) {
        return std::nullopt;
      }
    }
    fits.push_back(fit);
  }
  return fits;
}

std::vector<StrategyProfile> pure_nash_equilibria(const ClassicalGame& g, double tol) {
  std::vector<StrategyProfile> out;
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    StrategyProfile s = g.profile_at(k);
    bool stable = true;
    for (int i = 0; i < g.num_players() && stable; ++i) {
      const double current = g.payoff(i, k);
      StrategyProfile dev = s;
      for (int alt = 0; alt < g.num_strategies(i) && stable; ++alt) {
        dev.indices[static_cast<std::size_t>(i)] = alt;
        if (g.payoff(i, dev) > current + tol) stable = false;
      }
    }
    if (stable) out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct Interval {
  double lo;
  double hi;
};

// Axis-aligned box [p.lo, p.hi] x [q.lo, q.hi] in the (p, q) square.
struct Box {
  Interval p;
  Interval q;
};

// Pieces of a best-response graph. `gain(x)` is the advantage of the first
// strategy when the opponent plays its first strategy with probability x:
// gain(x) = x * a + (1 - x) * b. The pieces are returned with the player's own
// probability as `own` and the opponent's as `other`.
std::vector<std::pair<Interval, Interval>> best_response_pieces(double a, double b) {
  std::vector<std::pair<Interval, Interval>> pieces;
  auto sign = [](double v) { return v > kPayoffTol ? 1 : (v < -kPayoffTol ? -1 : 0); };
  const int sa = sign(a);
  const int sb = sign(b);
  auto own_for = [](int s) { return s > 0 ? Interval{1, 1} : (s < 0 ? Interval{0, 0} : Interval{0, 1}); };

  if (sa == 0 && sb == 0) {
    pieces.push_back({Interval{0, 1}, Interval{0, 1}});
    return pieces;
  }
  if (sa == sb || sa == 0 || sb == 0) {
    // No sign change strictly inside (0, 1).
    const int s = sa != 0 ? sa : sb;
    pieces.push_back({own_for(s), Interval{0, 1}});
    if (sa == 0) pieces.push_back({Interval{0, 1}, Interval{1, 1}});
    if (sb == 0) pieces.push_back({Interval{0, 1}, Interval{0, 0}});
    return pieces;
  }
  // Opposite signs at the ends: a single indifference point.
  const double root = b / (b - a);
  pieces.push_back({own_for(sb), Interval{0, root}});
  pieces.push_back({Interval{0, 1}, Interval{root, root}});
  pieces.push_back({own_for(sa), Interval{root, 1}});
  return pieces;
}

std::optional<Interval> intersect(Interval x, Interval y) {
  const double lo = std::max(x.lo, y.lo);
  const double hi = std::min(x.hi, y.hi);
  if (lo > hi + kPayoffTol) return std::nullopt;
  return Interval{lo, std::max(lo, hi)};
}

}  // namespace

MixedEquilibria2x2 mixed_nash_2x2(const ClassicalGame& g) {
  if (g.num_players() != 2 || g.num_strategies(0) != 2 || g.num_strategies(1) != 2) {
    throw std::invalid_argument("mixed_nash_2x2 needs a 2-player 2x2 game");
  }
  auto a = [&](int r, int c) { return g.payoff(0, StrategyProfile{{r, c}}); };
  auto b = [&](int r, int c) { return g.payoff(1, StrategyProfile{{r, c}}); };

  // Player 1: own = p, other = q. Player 2: own = q, other = p.
  const auto br1 = best_response_pieces(a(0, 0) - a(1, 0), a(0, 1) - a(1, 1));
  const auto br2 = best_response_pieces(b(0, 0) - b(0, 1), b(1, 0) - b(1, 1));

  std::vector<Box> boxes;
  for (const auto& [p1, q1] : br1) {
    for (const auto& [q2, p2] : br2) {
      auto p = intersect(p1, p2);
      auto q = intersect(q1, q2);
      if (p && q) boxes.push_back(Box{*p, *q});
    }
  }

  MixedEquilibria2x2 result;
  auto add = [&](double p, double q) {
    for (const auto& e : result.profiles) {
      if (std::abs(e.p - p) <= 1e-9 && std::abs(e.q - q) <= 1e-9) return;
    }
    result.profiles.push_back(MixedProfile2x2{p, q});
  };
  for (const auto& box : boxes) {
    const bool flat_p = box.p.hi - box.p.lo <= kPayoffTol;
    const bool flat_q = box.q.hi - box.q.lo <= kPayoffTol;
    if (!(flat_p && flat_q)) result.continuum = true;
    for (double p : {box.p.lo, box.p.hi}) {
      for (double q : {box.q.lo, box.q.hi}) add(p, q);
    }
  }
  std::sort(result.profiles.begin(), result.profiles.end(),
            [](const MixedProfile2x2& x, const MixedProfile2x2& y) {
              return x.p != y.p ? x.p < y.p : x.q < y.q;
            });
  return result;
}

bool lemma1_transport_check(const GameMapping& f, const ClassicalGame& g,
                            const ClassicalGame& g2) {
  if (!is_strong_isomorphism(f, g, g2)) {
    throw ContractViolation("lemma1_transport_check requires a strong isomorphism");
  }
  const auto ne = pure_nash_equilibria(g);
  const auto ne2 = pure_nash_equilibria(g2);
  std::set<StrategyProfile> image;
  for (const auto& s : ne) image.insert(apply_mapping(f, s));
  const std::set<StrategyProfile> target(ne2.begin(), ne2.end());
  return image.size() == ne.size() && image == target;
}

}  // namespace qgame
