#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strategos/engine/state.h"
#include "strategos/strategy/strategy.h"

namespace strategos::codec {

inline constexpr int kDocFormatVersion = 1;

// The structured Markdown state document sent to strategists. Section order
// is fixed: Victory Progress, Strategies, Players, Cities, Military, Events.
struct MarkdownDoc {
  std::string text;
  std::vector<std::pair<std::string, std::size_t>> section_offsets;
};

// Renders the viewer-visible snapshot. `last_decision_turn` bounds the
// Events section (events strictly after it, capped to the last two turns
// with a "(truncated)" marker). Throws std::invalid_argument for a dead
// viewer.
MarkdownDoc encode_state(const engine::GameState& state, engine::PlayerId viewer,
                         const strategy::OverrideState& overrides,
                         const strategy::OptionCatalog& catalog, int last_decision_turn);

// Events section body: grouped by turn, numbered within each turn, payload
// fields in fixed order. `events` must be sorted by (turn, index).
std::string encode_events(const engine::GameState& state, engine::PlayerId viewer,
                          std::span<const engine::Event> events);

// Exhaustive key-per-line dump with no elision or truncation; the
// compactness baseline the Markdown format is measured against.
std::string encode_verbose_baseline(const engine::GameState& state, engine::PlayerId viewer);

}  // namespace strategos::codec
