#pragma once

#include <string>

#include "edom/errors.hpp"

namespace edom {

// Per turn the defender moves at most one guard (Single) or any number
// (All); at most one guard may rest on a vertex (Simple) or any number
// (Multi).
enum class MoveMode { Single, All };
enum class Occupancy { Simple, Multi };

struct GameParams {
  MoveMode move_mode = MoveMode::All;
  Occupancy occupancy = Occupancy::Simple;

  bool operator==(const GameParams&) const = default;
};

inline constexpr GameParams kAllSimple{MoveMode::All, Occupancy::Simple};
inline constexpr GameParams kAllMulti{MoveMode::All, Occupancy::Multi};
inline constexpr GameParams kSingleSimple{MoveMode::Single, Occupancy::Simple};

// "all-simple", "all-multi", "single-simple", "single-multi".
std::string to_string(GameParams params);
GameParams game_params_from_string(const std::string& name);

}  // namespace edom
