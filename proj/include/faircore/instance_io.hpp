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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "faircore/games.hpp"

namespace faircore::io {

/// A parsed game instance. Player order in the file fixes the index order
/// used everywhere downstream. Exactly one of the two game forms is set.
struct Instance {
  std::vector<std::string> players;
  std::optional<games::ISGame> is_game;
  std::optional<games::ExplicitGame> explicit_game;
  std::string source;     // provenance: file path or generator tag
  std::string meta_json;  // optional metadata object, carried verbatim

  bool is_induced() const { return is_game.has_value(); }
  int player_count() const { return static_cast<int>(players.size()); }
  /// Value-table form; converts the IS form on demand (<= 16 players).
  games::ExplicitGame as_explicit() const;
};

/// Parses the JSON instance format:
///   {"type":"is","players":["A","B"],"edges":[["A","B",5]]}
///   {"type":"explicit","players":[...],"values":{"A,B":2,...}}
/// Coalition keys are comma-joined player names; missing coalitions
/// (including the empty one) default to 0.
Instance parse_instance(const std::string& json_text, const std::string& source = "<string>");

Instance load_instance(const std::string& path);

/// Inverse of parse_instance: parse(serialize(x)) reproduces the game.
std::string serialize_instance(const Instance& instance);

/// Seeded Erdos-Renyi style weighted graphs. Each unordered pair is kept
/// with probability edge_prob and weighted uniformly on {1..max_weight};
/// vertices left isolated are re-wired with one unit-weight edge to a
/// random neighbor so the IS invariants hold.
struct GeneratorConfig {
  int vertex_count = 5;
  double edge_prob = 0.5;  // in (0, 1]
  games::Money max_weight = 6;
  std::uint64_t seed = 0;
};

games::ISGame random_is_game(const GeneratorConfig& config, int* repaired_edges = nullptr);

/// Instance wrapper around random_is_game, with generator metadata.
Instance generated_instance(const GeneratorConfig& config);

}  // namespace faircore::io
