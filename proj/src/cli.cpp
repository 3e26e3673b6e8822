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

#include "qgame/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "qgame/equilibrium.hpp"
#include "qgame/game_io.hpp"
#include "qgame/lift.hpp"

namespace qgame::cli {
namespace {

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) out.push_back(tok);
  return out;
}

// Thrown for bad command-line values; maps to kExitInput.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& tok : split_commas(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError(std::string("bad number in ") + what + ": '" + tok + "'");
    }
  }
  return out;
}

std::vector<StrategySpace> parse_space_list(const std::string& s, int players) {
  std::vector<StrategySpace> out;
  for (const auto& name : split_commas(s)) {
    const auto sp = parse_space(name);
    if (!sp) throw InputError("unknown strategy space '" + name + "'");
    out.push_back(*sp);
  }
  if (static_cast<int>(out.size()) != players) {
    throw InputError("--spaces needs " + std::to_string(players) + " names");
  }
  return out;
}

GameFile load(const std::string& path) {
  try {
    return load_game_file(path);
  } catch (const GameFileError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<StrategySpace> spaces_or_full(const GameFile& f) {
  if (f.spaces) return *f.spaces;
  return std::vector<StrategySpace>(static_cast<std::size_t>(f.game.num_players()),
                                    StrategySpace::kFullSU2);
}

std::string space_list(const std::vector<StrategySpace>& spaces) {
  std::string s;
  for (auto sp : spaces) {
    if (!s.empty()) s += ' ';
    s += space_name(sp);
  }
  return s;
}

std::string describe_params(const SU2Params& p) {
  return "(" + fmt15(p.theta()) + ", " + fmt15(p.alpha()) + ", " + fmt15(p.beta()) + ")";
}

std::string describe_lift(const LiftedMapping& lm) {
  std::string s;
  for (std::size_t i = 0; i < lm.transforms.size(); ++i) {
    if (!s.empty()) s += ' ';
    s += lm.transforms[i].kind == PlayerTransform::Kind::kFlip ? "flip" : "keep";
  }
  return s;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QGAME_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("QGAME_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

int cmd_iso(const std::string& file_a, const std::string& file_b, std::ostream& out) {
  const GameFile a = load(file_a);
  const GameFile b = load(file_b);
  out << "tolerance: payoff " << kPayoffTol << ", affine " << kAffineTol << '\n';

  const auto isos = find_strong_isomorphisms(a.game, b.game);
  out << "strong isomorphisms: " << isos.size() << '\n';
  if (isos.empty()) out << "  none\n";
  for (std::size_t k = 0; k < isos.size(); ++k) {
    out << "  [" << k + 1 << "] " << describe_mapping(isos[k], a.game, b.game) << '\n';
  }

  const auto fit = strategic_equivalence(a.game, b.game);
  out << "strategic equivalence: ";
  if (!fit) {
    out << "none\n";
  } else {
    out << '\n';
    for (std::size_t i = 0; i < fit->size(); ++i) {
      out << "  player " << i + 1 << ": alpha " << fmt15((*fit)[i].alpha) << ", beta "
          << fmt15((*fit)[i].beta) << '\n';
    }
  }
  out << "verdict: " << (isos.empty() ? "not isomorphic" : "isomorphic") << '\n';
  return isos.empty() ? kExitNegative : kExitOk;
}

int cmd_lift_verify(const std::string& file_a, const std::string& file_b, int samples,
                    std::uint64_t seed, std::ostream& out) {
  const GameFile a = load(file_a);
  const GameFile b = load(file_b);
  if (!a.game.is_binary() || !b.game.is_binary()) throw InputError("lift-verify needs binary games");
  const EwlGame qa(a.game, spaces_or_full(a));
  const EwlGame qb(b.game, spaces_or_full(b));

  out << "seed: " << seed << '\n';
  out << "samples: " << samples << '\n';
  out << "tolerance: " << kLiftTol << '\n';
  out << "spaces: [" << space_list(qa.spaces()) << "] -> [" << space_list(qb.spaces()) << "]\n";

  const auto isos = find_strong_isomorphisms(a.game, b.game);
  if (isos.empty()) {
    out << "no strong isomorphism between the classical games; nothing to lift\n";
    return kExitNegative;
  }
  bool all_pass = true;
  for (std::size_t k = 0; k < isos.size(); ++k) {
    const LiftedMapping lm = lift(isos[k], a.game, b.game);
    const LiftReport r = verify_lift(lm, qa, qb, samples, seed);
    all_pass = all_pass && r.passed();
    out << "  [" << k + 1 << "] " << describe_mapping(isos[k], a.game, b.game) << '\n'
        << "      lift: " << describe_lift(lm) << " | evaluated " << r.evaluated << '/' << r.samples
        << " | space escapes " << r.space_escapes << " | max deviation " << std::scientific
        << std::setprecision(3) << r.max_deviation << std::defaultfloat << std::setprecision(6)
        << " | " << r.verdict() << '\n';
  }
  out << "verdict: " << (all_pass ? "pass" : "fail") << '\n';
  return all_pass ? kExitOk : kExitNegative;
}

int cmd_ne(const std::string& file, const std::string& spaces_flag, const std::string& grid_flag,
           double eps, const std::string& csv_path, std::ostream& out) {
  const GameFile f = load(file);
  if (!f.game.is_binary()) throw InputError("ne needs a binary game");
  const int n = f.game.num_players();
  const auto spaces = spaces_flag.empty() ? spaces_or_full(f) : parse_space_list(spaces_flag, n);

  const auto steps = parse_numbers(grid_flag, "--grid");
  if (steps.empty() || steps.size() > 3) throw InputError("--grid expects t[,a[,b]]");
  ParamGrid grid{static_cast<int>(steps[0]), steps.size() > 1 ? static_cast<int>(steps[1]) : 1,
                 steps.size() > 2 ? static_cast<int>(steps[2]) : 1};
  if (!(eps >= 0.0)) throw InputError("--eps must be non-negative");

  const EwlGame g(f.game, spaces);
  std::vector<EpsEquilibrium> ne;
  try {
    ne = grid_pure_ne(g, grid, eps);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  out << "spaces: " << space_list(spaces) << '\n';
  out << "grid: theta " << grid.theta_steps << ", alpha " << grid.alpha_steps << ", beta "
      << grid.beta_steps << '\n';
  out << "eps: " << eps << '\n';
  out << "equilibria: " << ne.size() << " (distinct outcome states: "
      << count_distinct_outcomes(ne) << ")\n";
  for (const auto& e : ne) {
    out << " ";
    for (const auto& p : e.profile) out << ' ' << describe_params(p);
    out << "  payoffs";
    for (double u : e.payoffs) out << ' ' << fmt15(u);
    out << "  eps " << fmt15(e.eps) << '\n';
  }

  if (!csv_path.empty()) {
    std::ostringstream csv;
    for (int i = 1; i <= n; ++i) csv << (i > 1 ? "," : "") << "theta" << i << ",alpha" << i << ",beta" << i;
    for (int i = 1; i <= n; ++i) csv << ",payoff" << i;
    csv << ",eps\n";
    for (const auto& e : ne) {
      bool first = true;
      for (const auto& p : e.profile) {
        csv << (first ? "" : ",") << fmt15(p.theta()) << ',' << fmt15(p.alpha()) << ',' << fmt15(p.beta());
        first = false;
      }
      for (double u : e.payoffs) csv << ',' << fmt15(u);
      csv << ',' << fmt15(e.eps) << '\n';
    }
    std::ofstream os(csv_path, std::ios::binary);
    os << csv.str();
    if (!os) return kExitIo;
  }
  return ne.empty() ? kExitNegative : kExitOk;
}

int cmd_surface(const std::string& file, int player, const std::string& opponent_flag,
                const std::string& grid_flag, const std::string& csv_path, std::ostream& out) {
  const GameFile f = load(file);
  if (f.game.num_players() != 2 || !f.game.is_binary()) {
    throw InputError("surface needs a 2-player binary game");
  }
  if (player != 1 && player != 2) throw InputError("--player must be 1 or 2");
  const auto opp = parse_numbers(opponent_flag, "--opponent");
  if (opp.size() < 2 || opp.size() > 3) throw InputError("--opponent expects theta,alpha[,beta]");
  SU2Params opponent;
  try {
    opponent = SU2Params(opp[0], opp[1], opp.size() > 2 ? opp[2] : 0.0);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto steps = parse_numbers(grid_flag, "--grid");
  if (steps.size() != 2 || steps[0] < 1 || steps[1] < 1) throw InputError("--grid expects t,a with t,a >= 1");

  const std::string csv = surface_csv(f.game, player - 1, opponent, static_cast<int>(steps[0]),
                                      static_cast<int>(steps[1]));
  if (csv_path.empty() || csv_path == "-") {
    out << csv;
    return kExitOk;
  }
  std::ofstream os(csv_path, std::ios::binary);
  os << csv;
  os.flush();
  if (!os) return kExitIo;
  out << "wrote " << static_cast<int>(steps[0]) * static_cast<int>(steps[1]) << " rows to " << csv_path
      << '\n';
  return kExitOk;
}

int cmd_identities(int draws, std::uint64_t seed, std::ostream& out) {
  const IdentityReport r = operator_identity_suite(draws, seed);
  out << "seed: " << r.seed << '\n';
  out << "draws: " << r.draws << '\n';
  out << "tolerance: " << r.tolerance << '\n';
  for (const auto& c : r.checks) {
    out << "  (" << c.name << ") " << (c.passed ? "PASS" : "FAIL") << "  residual " << std::scientific
        << std::setprecision(3) << c.max_residual << std::defaultfloat << std::setprecision(6) << "  "
        << c.description << '\n';
  }
  out << "verdict: " << (r.passed() ? "pass" : "fail") << '\n';
  return r.passed() ? kExitOk : kExitNegative;
}

}  // namespace

std::string describe_mapping(const GameMapping& f, const ClassicalGame& g, const ClassicalGame& g2) {
  std::ostringstream s;
  s << "eta:";
  for (int i = 0; i < f.num_players(); ++i) s << ' ' << i + 1 << "->" << f.eta[static_cast<std::size_t>(i)] + 1;
  for (int i = 0; i < f.num_players(); ++i) {
    const int target = f.eta[static_cast<std::size_t>(i)];
    s << " | phi" << i + 1 << ':';
    const auto& p = f.phi[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < p.size(); ++k) {
      s << ' ' << g.labels(i)[k] << "->" << g2.labels(target)[static_cast<std::size_t>(p[k])];
    }
  }
  return s.str();
}

std::string surface_csv(const ClassicalGame& g, int player, const SU2Params& opponent,
                        int theta_steps, int alpha_steps) {
  const EwlGame q(g);
  std::string csv = "theta,alpha,payoff1,payoff2\n";
  for (int a = 0; a < theta_steps; ++a) {
    const double theta = theta_steps == 1 ? 0.0 : (a == theta_steps - 1 ? kPi : kPi * a / (theta_steps - 1));
    for (int b = 0; b < alpha_steps; ++b) {
      const double alpha = alpha_steps == 1 ? 0.0 : kTwoPi * b / (alpha_steps - 1);
      std::vector<SU2Params> profile(2, opponent);
      profile[static_cast<std::size_t>(player)] = SU2Params(theta, alpha, 0.0);
      const auto u = ewl_payoffs(q, profile);
      csv += fmt15(theta) + ',' + fmt15(alpha) + ',' + fmt15(u[0]) + ',' + fmt15(u[1]) + '\n';
    }
  }
  return csv;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qgame: EWL quantum games, strong isomorphisms and equilibria", "qgame"};
  app.require_subcommand(1);

  std::string file_a, file_b, file, spaces_flag, grid_flag = "17,33,1", csv_path;
  std::string opponent_flag = "0,0", surface_grid = "17,33";
  std::optional<std::uint64_t> seed_flag;
  int samples = 100;
  int draws = 200;
  int player = 1;
  double eps = 1e-9;

  auto* iso = app.add_subcommand("iso", "Find strong isomorphisms between two games");
  iso->add_option("game_a", file_a, "First game file")->required();
  iso->add_option("game_b", file_b, "Second game file")->required();

  auto* lv = app.add_subcommand("lift-verify", "Lift each isomorphism to the EWL games and verify it");
  lv->add_option("game_a", file_a, "First game file")->required();
  lv->add_option("game_b", file_b, "Second game file")->required();
  lv->add_option("--samples", samples, "Random strategy profiles per mapping")->check(CLI::NonNegativeNumber);
  lv->add_option("--seed", seed_flag, "RNG seed (default: $QGAME_SEED or 1)");

  auto* ne = app.add_subcommand("ne", "Grid search for pure equilibria of the EWL game");
  ne->add_option("game", file, "Game file")->required();
  ne->add_option("--spaces", spaces_flag, "Comma-separated strategy spaces (full, alpha, beta, one)");
  ne->add_option("--grid", grid_flag, "Grid steps t[,a[,b]]")->capture_default_str();
  ne->add_option("--eps", eps, "Tolerated gain from a grid deviation")->capture_default_str();
  ne->add_option("--csv", csv_path, "Write the equilibrium table as CSV");

  auto* surface = app.add_subcommand("surface", "Payoff landscape against a fixed opponent strategy");
  surface->add_option("game", file, "2-player game file")->required();
  surface->add_option("--player", player, "Player whose strategy varies (1 or 2)")->capture_default_str();
  surface->add_option("--opponent", opponent_flag, "Opponent strategy theta,alpha[,beta]")->capture_default_str();
  surface->add_option("--grid", surface_grid, "Grid steps t,a")->capture_default_str();
  surface->add_option("--csv", csv_path, "Output CSV path (stdout if omitted)");

  auto* ids = app.add_subcommand("identities", "Check the operator identities behind the lift");
  ids->add_option("--samples", draws, "Random draws")->check(CLI::PositiveNumber);
  ids->add_option("--seed", seed_flag, "RNG seed (default: $QGAME_SEED or 1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const bool csv_to_stdout = surface->parsed() && (csv_path.empty() || csv_path == "-");
    if (!csv_to_stdout) out << "command: qgame " << join(args) << '\n';
    if (iso->parsed()) return cmd_iso(file_a, file_b, out);
    if (lv->parsed()) return cmd_lift_verify(file_a, file_b, samples, resolve_seed(seed_flag), out);
    if (ne->parsed()) return cmd_ne(file, spaces_flag, grid_flag, eps, csv_path, out);
    if (surface->parsed()) return cmd_surface(file, player, opponent_flag, surface_grid, csv_path, out);
    if (ids->parsed()) return cmd_identities(draws, resolve_seed(seed_flag), out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qgame::cli
