#include "logitlab/game_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "logitlab/error.hpp"
#include "logitlab/generators.hpp"

namespace logitlab {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw ParseError(ParseErrorKind::schema, what);
}

[[noreturn]] void semantic_error(const std::string& what) {
  throw ParseError(ParseErrorKind::semantic, what);
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) schema_error(where + " must be a number");
  return value.get<double>();
}

int integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) schema_error(where + " must be an integer");
  return value.get<int>();
}

std::vector<double> number_array(const json& value, std::size_t expected,
                                 const std::string& where) {
  if (!value.is_array()) schema_error(where + " must be an array");
  if (value.size() != expected) {
    schema_error(where + " has length " + std::to_string(value.size()) +
                 ", expected " + std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(number(value[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::size_t space_size(const std::vector<int>& radices) {
  // Validates radices and the budget.
  return ProfileSpace(radices).size();
}

Game parse_coordination(const json& payload, const std::vector<int>& radices) {
  if (!payload.is_object()) schema_error("'coordination' must be an object");
  for (int m : radices) {
    if (m != 2) semantic_error("coordination games require every radix to be 2");
  }
  const json& edges = require(payload, "edges");
  if (!edges.is_array()) schema_error("'edges' must be an array");
  std::vector<SocialGraph::Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const json& e = edges[k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 2) schema_error(where + " must be a pair");
    list.emplace_back(integer(e[0], where), integer(e[1], where));
  }
  CoordinationPayoffs payoffs{number(require(payload, "a"), "a"),
                              number(require(payload, "b"), "b"),
                              number(require(payload, "c"), "c"),
                              number(require(payload, "d"), "d")};
  try {
    SocialGraph graph(static_cast<int>(radices.size()), std::move(list));
    return gen_graphical_coordination(std::move(graph), payoffs);
  } catch (const GraphError& e) {
    semantic_error(e.what());
  } catch (const HypothesisError& e) {
    semantic_error(e.what());
  }
}

}  // namespace

Game parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::syntax, e.what(), e.byte);
  }
  if (!doc.is_object()) schema_error("top-level value must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "version" && key != "kind" && key != "radices" &&
        key != "players" && key != "utilities" && key != "potential" &&
        key != "coordination") {
      schema_error("unknown field '" + key + "'");
    }
  }

  const int version = integer(require(doc, "version"), "version");
  if (version != kGameFormatVersion) {
    semantic_error("unsupported format version " + std::to_string(version));
  }
  const json& kind_value = require(doc, "kind");
  if (!kind_value.is_string()) schema_error("'kind' must be a string");
  const std::string kind = kind_value.get<std::string>();

  const json& radices_value = require(doc, "radices");
  if (!radices_value.is_array() || radices_value.empty()) {
    schema_error("'radices' must be a non-empty array");
  }
  std::vector<int> radices;
  for (std::size_t k = 0; k < radices_value.size(); ++k) {
    const int m = integer(radices_value[k], "radices[" + std::to_string(k) + "]");
    if (m < 1) semantic_error("every radix must be at least 1");
    radices.push_back(m);
  }
  if (auto it = doc.find("players"); it != doc.end()) {
    if (integer(*it, "players") != static_cast<int>(radices.size())) {
      schema_error("'players' does not match the number of radices");
    }
  }

  const char* payload_key = nullptr;
  if (kind == "generic") {
    payload_key = "utilities";
  } else if (kind == "potential") {
    payload_key = "potential";
  } else if (kind == "coordination") {
    payload_key = "coordination";
  } else {
    schema_error("unknown kind '" + kind + "'");
  }
  for (const char* key : {"utilities", "potential", "coordination"}) {
    if (key != std::string_view(payload_key) && doc.contains(key)) {
      schema_error(std::string("field '") + key + "' not allowed for kind '" +
                   kind + "'");
    }
  }
  const json& payload = require(doc, payload_key);

  if (kind == "coordination") return parse_coordination(payload, radices);

  const std::size_t size = space_size(radices);
  if (kind == "potential") {
    PotentialTable phi{number_array(payload, size, "potential")};
    return Game::from_potential(std::move(radices), std::move(phi));
  }
  if (!payload.is_array() || payload.size() != radices.size()) {
    schema_error("'utilities' must hold one array per player");
  }
  std::vector<std::vector<double>> utilities;
  for (std::size_t i = 0; i < payload.size(); ++i) {
    utilities.push_back(
        number_array(payload[i], size, "utilities[" + std::to_string(i) + "]"));
  }
  return Game(std::move(radices), std::move(utilities));
}

std::string serialize_game(const Game& game) {
  if (!game.has_dense_utilities()) {
    throw UnsupportedError("cannot serialize a callback-backed game");
  }
  json doc;
  doc["version"] = kGameFormatVersion;
  doc["kind"] = std::string(to_string(game.kind()));
  doc["radices"] = std::vector<int>(game.space().radices().begin(),
                                    game.space().radices().end());
  switch (game.kind()) {
    case GameKind::coordination: {
      const auto& coord = *game.coordination();
      json edges = json::array();
      for (const auto& [u, v] : coord.graph.edges()) edges.push_back({u, v});
      doc["coordination"] = {{"edges", edges},
                             {"a", coord.payoffs.a},
                             {"b", coord.payoffs.b},
                             {"c", coord.payoffs.c},
                             {"d", coord.payoffs.d}};
      break;
    }
    case GameKind::potential:
      doc["potential"] = game.potential()->values;
      break;
    case GameKind::generic: {
      json utilities = json::array();
      for (int i = 0; i < game.players(); ++i) {
        std::vector<double> row(game.size());
        for (StateIndex x = 0; x < game.size(); ++x) row[x] = game.utility(i, x);
        utilities.push_back(std::move(row));
      }
      doc["utilities"] = std::move(utilities);
      break;
    }
  }
  return doc.dump(2) + "\n";
}

Game load_game(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

void save_game(const Game& game, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << serialize_game(game);
}

}  // namespace logitlab
