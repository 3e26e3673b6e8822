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

#include "qgame/game_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace qgame {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool valid_label(std::string_view s) {
  return !s.empty() && s.find_first_of(" \t(),:#") == std::string_view::npos;
}

int parse_int(std::string_view s, int line, const char* what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw GameFileError(line, std::string("expected an integer ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(const std::string& s, int line) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw GameFileError(line, "expected a finite number, got '" + s + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

GameFile parse_game_file(std::string_view text) {
  int players = 0;
  int players_line = 0;
  std::vector<std::vector<std::string>> labels;
  std::optional<std::vector<StrategySpace>> spaces;
  std::map<std::vector<std::string>, std::pair<std::vector<double>, int>> rows;
  int line_no = 0;

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw GameFileError(line_no, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));

    if (key == "players") {
      if (players != 0) throw GameFileError(line_no, "duplicate 'players' line");
      players = parse_int(value, line_no, "player count");
      if (players < 1) throw GameFileError(line_no, "player count must be positive");
      players_line = line_no;
      labels.assign(static_cast<std::size_t>(players), {});
      continue;
    }
    if (players == 0) throw GameFileError(line_no, "'players' must come first");

    if (key.starts_with("strategies")) {
      const int i = parse_int(trim(key.substr(10)), line_no, "player number");
      if (i < 1 || i > players) throw GameFileError(line_no, "player number out of range");
      auto& ls = labels[static_cast<std::size_t>(i - 1)];
      if (!ls.empty()) throw GameFileError(line_no, "duplicate strategies for player " + std::to_string(i));
      ls = split_ws(value);
      if (ls.size() < 2) throw GameFileError(line_no, "a player needs at least two strategies");
      for (std::size_t a = 0; a < ls.size(); ++a) {
        if (!valid_label(ls[a])) throw GameFileError(line_no, "invalid label '" + ls[a] + "'");
        for (std::size_t b = 0; b < a; ++b) {
          if (ls[a] == ls[b]) throw GameFileError(line_no, "duplicate label '" + ls[a] + "'");
        }
      }
    } else if (key == "spaces") {
      if (spaces) throw GameFileError(line_no, "duplicate 'spaces' line");
      const auto names = split_ws(value);
      if (static_cast<int>(names.size()) != players) {
        throw GameFileError(line_no, "need one space name per player");
      }
      std::vector<StrategySpace> sp;
      for (const auto& name : names) {
        const auto s = parse_space(name);
        if (!s) throw GameFileError(line_no, "unknown strategy space '" + name + "'");
        sp.push_back(*s);
      }
      spaces = std::move(sp);
    } else if (key.starts_with("payoff")) {
      const std::string_view rest = trim(key.substr(6));
      if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
        throw GameFileError(line_no, "expected 'payoff (l1,...,ln): v1 ... vn'");
      }
      std::vector<std::string> profile;
      std::string_view inner = rest.substr(1, rest.size() - 2);
      while (true) {
        const auto comma = inner.find(',');
        profile.emplace_back(trim(inner.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        inner = inner.substr(comma + 1);
      }
      if (static_cast<int>(profile.size()) != players) {
        throw GameFileError(line_no, "profile needs one label per player");
      }
      const auto tokens = split_ws(value);
      if (static_cast<int>(tokens.size()) != players) {
        throw GameFileError(line_no, "need one payoff per player");
      }
      std::vector<double> values;
      for (const auto& t : tokens) values.push_back(parse_double(t, line_no));
      if (rows.contains(profile)) throw GameFileError(line_no, "duplicate payoff line for this profile");
      rows.emplace(std::move(profile), std::make_pair(std::move(values), line_no));
    } else {
      throw GameFileError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (players == 0) throw GameFileError(line_no, "missing 'players' line");
  for (int i = 0; i < players; ++i) {
    if (labels[static_cast<std::size_t>(i)].empty()) {
      throw GameFileError(players_line, "missing strategies for player " + std::to_string(i + 1));
    }
  }

  // Resolve label tuples to indices and check completeness.
  std::size_t total = 1;
  for (const auto& ls : labels) total *= ls.size();
  std::vector<std::vector<double>> payoffs(total);
  std::vector<bool> seen(total, false);
  for (const auto& [profile, entry] : rows) {
    std::size_t idx = 0;
    for (int i = 0; i < players; ++i) {
      const auto& ls = labels[static_cast<std::size_t>(i)];
      const auto it = std::find(ls.begin(), ls.end(), profile[static_cast<std::size_t>(i)]);
      if (it == ls.end()) {
        throw GameFileError(entry.second, "unknown label '" + profile[static_cast<std::size_t>(i)] +
                                              "' for player " + std::to_string(i + 1));
      }
      idx = idx * ls.size() + static_cast<std::size_t>(it - ls.begin());
    }
    payoffs[idx] = entry.first;
    seen[idx] = true;
  }
  for (std::size_t k = 0; k < total; ++k) {
    if (!seen[k]) {
      throw GameFileError(line_no, "missing payoff line (" + std::to_string(total - rows.size()) +
                                       " of " + std::to_string(total) + " profiles absent)");
    }
  }
  return GameFile{ClassicalGame(std::move(labels), std::move(payoffs)), std::move(spaces)};
}

GameFile load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameFileError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game_file(buf.str());
}

std::string serialize_game_file(const GameFile& file) {
  const ClassicalGame& g = file.game;
  std::ostringstream out;
  out << "players: " << g.num_players() << '\n';
  for (int i = 0; i < g.num_players(); ++i) {
    out << "strategies " << i + 1 << ':';
    for (const auto& l : g.labels(i)) out << ' ' << l;
    out << '\n';
  }
  if (file.spaces) {
    out << "spaces:";
    for (auto s : *file.spaces) out << ' ' << space_name(s);
    out << '\n';
  }
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    const StrategyProfile s = g.profile_at(k);
    out << "payoff (";
    for (int i = 0; i < g.num_players(); ++i) {
      if (i > 0) out << ',';
      out << g.labels(i)[static_cast<std::size_t>(s[i])];
    }
    out << "):";
    for (int i = 0; i < g.num_players(); ++i) out << ' ' << format_double(g.payoff(i, k));
    out << '\n';
  }
  return out.str();
}

}  // namespace qgame
