// Copyright 2026 The faircore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faircore/instance_io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace faircore::io {

namespace {

using games::Mask;
using games::Money;
using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& source, const std::string& what) {
  throw std::runtime_error(source + ": " + what);
}

std::vector<std::string> read_players(const ordered_json& j, const std::string& source) {
  if (!j.contains("players") || !j["players"].is_array() || j["players"].empty()) {
    malformed(source, "missing or empty \"players\" array");
  }
  std::vector<std::string> players;
  for (const auto& p : j["players"]) {
    if (!p.is_string() || p.get<std::string>().empty()) {
      malformed(source, "player names must be nonempty strings");
    }
    players.push_back(p.get<std::string>());
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    for (std::size_t k = i + 1; k < players.size(); ++k) {
      if (players[i] == players[k]) malformed(source, "duplicate player \"" + players[i] + "\"");
    }
  }
  return players;
}

Money read_weight(const ordered_json& j, const std::string& source, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    malformed(source, std::string(what) + " must be a nonnegative integer");
  }
  return j.get<long long>();
}

}  // namespace

games::ExplicitGame Instance::as_explicit() const {
  if (explicit_game) return *explicit_game;
  return games::to_explicit(*is_game);
}

Instance parse_instance(const std::string& json_text, const std::string& source) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(source, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    malformed(source, "expected an object with a \"type\" field");
  }

  Instance inst;
  inst.source = source;
  inst.players = read_players(j, source);
  const int n = inst.player_count();
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[inst.players[i]] = i;

  const std::string type = j["type"].get<std::string>();
  if (type == "is") {
    if (!j.contains("edges") || !j["edges"].is_array()) {
      malformed(source, "IS instance needs an \"edges\" array");
    }
    std::vector<games::WeightedEdge> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
        malformed(source, "edges must be [player, player, weight] triples");
      }
      const auto u = index.find(e[0].get<std::string>());
      const auto v = index.find(e[1].get<std::string>());
      if (u == index.end() || v == index.end()) {
        malformed(source, "edge references an unknown player");
      }
      edges.push_back({u->second, v->second, read_weight(e[2], source, "edge weight")});
    }
    try {
      inst.is_game.emplace(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
      malformed(source, e.what());
    }
  } else if (type == "explicit") {
    if (n > games::kMaxExplicitPlayers) malformed(source, "explicit games cap at 16 players");
    if (!j.contains("values") || !j["values"].is_object()) {
      malformed(source, "explicit instance needs a \"values\" object");
    }
    std::vector<Money> values(std::size_t{1} << n, 0);
    for (const auto& [key, value] : j["values"].items()) {
      Mask mask = 0;
      std::stringstream names(key);
      std::string name;
      while (std::getline(names, name, ',')) {
        const auto it = index.find(name);
        if (it == index.end()) malformed(source, "coalition key names unknown player \"" + name + "\"");
        mask = games::mask_with(mask, it->second);
      }
      if (mask == 0) malformed(source, "empty coalition key (the empty value is implied 0)");
      values[mask] = read_weight(value, source, "coalition value");
    }
    try {
      inst.explicit_game.emplace(n, std::move(values));
    } catch (const std::invalid_argument& e) {
      malformed(source, e.what());
    }
  } else {
    malformed(source, "unknown type \"" + type + "\" (expected \"is\" or \"explicit\")");
  }
  if (j.contains("meta")) inst.meta_json = j["meta"].dump();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), path);
}

std::string serialize_instance(const Instance& instance) {
  ordered_json j;
  const int n = instance.player_count();
  if (instance.is_induced()) {
    j["type"] = "is";
    j["players"] = instance.players;
    ordered_json edges = ordered_json::array();
    for (const auto& e : instance.is_game->edges()) {
      edges.push_back({instance.players[e.u], instance.players[e.v], e.weight});
    }
    j["edges"] = std::move(edges);
  } else {
    j["type"] = "explicit";
    j["players"] = instance.players;
    ordered_json values = ordered_json::object();
    const auto& g = *instance.explicit_game;
    for (Mask s = 1; s <= g.grand_coalition(); ++s) {
      if (g.value(s) != 0) {
        std::string key;
        for (int i = 0; i < n; ++i) {
          if (!games::mask_contains(s, i)) continue;
          if (!key.empty()) key += ',';
          key += instance.players[i];
        }
        values[key] = g.value(s);
      }
      if (s == g.grand_coalition()) break;
    }
    j["values"] = std::move(values);
  }
  if (!instance.meta_json.empty()) j["meta"] = ordered_json::parse(instance.meta_json);
  return j.dump(2) + "\n";
}

games::ISGame random_is_game(const GeneratorConfig& config, int* repaired_edges) {
  if (config.vertex_count < 2) {
    throw std::invalid_argument("generator: need at least 2 vertices");
  }
  if (!(config.edge_prob > 0.0) || config.edge_prob > 1.0) {
    throw std::invalid_argument("generator: edge_prob must be in (0, 1]");
  }
  if (config.max_weight < 1) {
    throw std::invalid_argument("generator: max_weight must be positive");
  }
  std::mt19937_64 rng(config.seed);
  // Raw engine words keep the draw sequence identical across platforms.
  auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const int n = config.vertex_count;
  std::vector<games::WeightedEdge> edges;
  std::vector<bool> covered(n, false);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      const double u = uniform01();
      const Money w = 1 + static_cast<Money>(rng() % static_cast<std::uint64_t>(config.max_weight));
      if (u < config.edge_prob) {
        edges.push_back({i, k, w});
        covered[i] = covered[k] = true;
      }
    }
  }
  int repaired = 0;
  for (int i = 0; i < n; ++i) {
    if (covered[i]) continue;
    int neighbor = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    if (neighbor >= i) ++neighbor;
    edges.push_back({std::min(i, neighbor), std::max(i, neighbor), 1});
    covered[i] = covered[neighbor] = true;
    ++repaired;
  }
  if (repaired_edges) *repaired_edges = repaired;
  return games::ISGame(n, std::move(edges));
}

Instance generated_instance(const GeneratorConfig& config) {
  Instance inst;
  int repaired = 0;
  inst.is_game.emplace(random_is_game(config, &repaired));
  for (int i = 0; i < config.vertex_count; ++i) inst.players.push_back("v" + std::to_string(i));
  inst.source = "gen(seed=" + std::to_string(config.seed) + ")";
  ordered_json meta;
  meta["generator"]["n"] = config.vertex_count;
  meta["generator"]["edge_prob"] = config.edge_prob;
  meta["generator"]["w_max"] = config.max_weight;
  meta["generator"]["seed"] = config.seed;
  meta["generator"]["repaired_edges"] = repaired;
  inst.meta_json = meta.dump();
  return inst;
}

}  // namespace faircore::io
