#pragma once

#include "strategos/harness/session.h"

namespace strategos::bench {

// A mid-game state: run the builtin strategist for `turns` turns.
inline harness::GameSession midgame_session(std::uint64_t seed, int turns = 60) {
  engine::GameConfig cfg;
  cfg.seed = seed;
  harness::GameSession session(cfg);
  for (int t = 0; t < turns && !session.state().terminal(); ++t) session.advance();
  return session;
}

}  // namespace strategos::bench
