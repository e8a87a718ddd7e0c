#pragma once

#include <string>

#include "strategos/engine/state.h"

namespace strategos::engine {

inline constexpr int kSaveVersion = 1;

// Canonical versioned text serialization with stable field order. Two states
// with identical contents always serialize to identical bytes.
std::string serialize_state(const GameState& state);

// Inverse of serialize_state. Throws std::runtime_error on malformed input
// or an unsupported save version (the message names the found version).
GameState deserialize_state(const std::string& text);

}  // namespace strategos::engine
