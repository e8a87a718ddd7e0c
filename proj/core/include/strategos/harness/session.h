#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "strategos/bridge/tool_server.h"
#include "strategos/codec/markdown.h"
#include "strategos/engine/game.h"
#include "strategos/strategy/ops.h"
#include "strategos/tactical/builtin.h"

namespace strategos::harness {

// Which layer wrote each decision category for a player this turn.
struct WriterLog {
  std::array<strategy::Writer, strategy::kDecisionCategoryCount> writer;
};

// One hosted game: engine state plus the per-player strategy surface.
// The builtin strategist drives every category a player has not externally
// controlled; overrides stick once set.
class GameSession {
 public:
  explicit GameSession(const engine::GameConfig& config);
  explicit GameSession(engine::GameState state);

  const engine::GameState& state() const { return state_; }
  engine::GameState& mutable_state() { return state_; }

  strategy::OverrideState& overrides(engine::PlayerId p) { return overrides_[p]; }
  const strategy::OverrideState& overrides(engine::PlayerId p) const { return overrides_[p]; }

  strategy::OptionCatalog catalog(engine::PlayerId p) const;
  codec::MarkdownDoc document(engine::PlayerId p) const;

  // Builtin decision merged with whatever the player's overrides control.
  engine::StrategyDirectives resolve_directives(engine::PlayerId p, WriterLog* log = nullptr);

  // Advances one full turn with resolved directives for every player.
  // Consumes research/policy queues that the engine picked up.
  std::vector<engine::Event> advance();

  // Decision-episode surface (used by the episode runner and the servers).
  bridge::ToolSession& open_episode(engine::PlayerId p);
  bridge::ToolSession* current_episode() { return episode_ ? episode_.get() : nullptr; }
  void close_episode();
  int last_decision_turn(engine::PlayerId p) const { return last_decision_turn_[p]; }
  // Records that an episode ran at the current boundary (after the turn that
  // just finished, i.e. event turn state_.turn - 1).
  void mark_decision(engine::PlayerId p) { last_decision_turn_[p] = state_.turn - 1; }

  // Per-turn histories for analytics (index = turn).
  const std::vector<std::array<std::int8_t, 8>>& grand_history() const { return grand_history_; }
  const std::vector<WriterLog>& writer_history(engine::PlayerId p) const {
    return writer_history_[p];
  }
  const std::vector<std::vector<int>>& peak_scores() const { return peak_scores_; }

 private:
  void init();

  engine::GameState state_;
  std::vector<strategy::OverrideState> overrides_;
  std::vector<int> last_decision_turn_;
  std::unique_ptr<bridge::ToolSession> episode_;
  engine::PlayerId episode_player_ = 0;

  std::vector<std::array<std::int8_t, 8>> grand_history_;  // per turn, per player
  std::vector<std::vector<WriterLog>> writer_history_;     // [player][turn]
  std::vector<std::vector<int>> peak_scores_;               // [player] -> per turn score
};

}  // namespace strategos::harness
