#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "logitlab/game.hpp"

namespace logitlab {

inline constexpr int kGameFormatVersion = 1;

/// Parses a `.game.json` document:
///
///   {"version": 1, "kind": "generic" | "potential" | "coordination",
///    "radices": [m_0, ..., m_{n-1}],
///    "utilities": [[u_0(x) for x in S], ...]          (generic)
///    "potential": [Phi(x) for x in S]                  (potential)
///    "coordination": {"edges": [[u, v], ...],
///                     "a": ..., "b": ..., "c": ..., "d": ...}}
///
/// Arrays over S are indexed by the little-endian state index. An optional
/// "players" key must equal the number of radices.
///
/// Throws ParseError (syntax errors carry the byte offset), or BudgetError
/// when |S| exceeds the state budget. Never returns a partially valid game.
Game parse_game(std::string_view text);

/// Inverse of parse_game. Throws UnsupportedError for callback-backed games.
std::string serialize_game(const Game& game);

Game load_game(const std::filesystem::path& path);
void save_game(const Game& game, const std::filesystem::path& path);

}  // namespace logitlab
