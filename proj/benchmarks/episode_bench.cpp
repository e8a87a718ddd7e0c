#include <benchmark/benchmark.h>

#include "bench_support.h"
#include "strategos/strategist/scripted.h"

namespace {

// The full decision pipeline: encode the state, run an episode against a
// scripted strategist, apply the result.
void BM_DecisionPipeline(benchmark::State& state) {
  auto session = strategos::bench::midgame_session(31);
  strategos::strategist::ScriptedStrategist strategist("always-keep");
  int episode_id = 0;
  for (auto _ : state) {
    const auto doc = session.document(0);
    auto& tools = session.open_episode(0);
    strategos::strategist::EpisodeContext ctx;
    ctx.doc = &doc;
    ctx.turn = session.state().turn;
    ctx.episode_id = ++episode_id;
    const auto record = strategos::strategist::run_decision_episode(ctx, strategist, tools);
    session.close_episode();
    benchmark::DoNotOptimize(record.rounds);
  }
}
BENCHMARK(BM_DecisionPipeline);

}  // namespace
