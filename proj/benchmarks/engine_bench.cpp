#include <benchmark/benchmark.h>

#include "bench_support.h"

namespace {

void BM_NewGame(benchmark::State& state) {
  strategos::engine::GameConfig cfg;
  cfg.seed = 7;
  for (auto _ : state) {
    auto game = strategos::engine::new_game(cfg);
    benchmark::DoNotOptimize(game.tiles.data());
  }
}
BENCHMARK(BM_NewGame);

void BM_AdvanceTurnMidgame(benchmark::State& state) {
  auto session = strategos::bench::midgame_session(11);
  for (auto _ : state) {
    if (session.state().terminal() ||
        session.state().turn >= session.state().config.max_turns) {
      state.PauseTiming();
      session = strategos::bench::midgame_session(11);
      state.ResumeTiming();
    }
    session.advance();
  }
}
BENCHMARK(BM_AdvanceTurnMidgame);

void BM_FullBuiltinGame(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    strategos::engine::GameConfig cfg;
    cfg.seed = seed++;
    strategos::harness::GameSession session(cfg);
    while (!session.state().terminal() &&
           session.state().turn < session.state().config.max_turns &&
           session.state().players[0].alive) {
      session.advance();
    }
    benchmark::DoNotOptimize(session.state().turn);
  }
}
BENCHMARK(BM_FullBuiltinGame)->Unit(benchmark::kMillisecond);

}  // namespace
