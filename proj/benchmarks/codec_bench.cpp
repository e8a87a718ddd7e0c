#include <benchmark/benchmark.h>

#include "bench_support.h"
#include "strategos/codec/markdown.h"
#include "strategos/codec/tokens.h"

namespace {

void BM_EncodeState(benchmark::State& state) {
  auto session = strategos::bench::midgame_session(23);
  for (auto _ : state) {
    const auto doc = session.document(0);
    benchmark::DoNotOptimize(doc.text.data());
  }
}
BENCHMARK(BM_EncodeState);

void BM_EncodeVerboseBaseline(benchmark::State& state) {
  auto session = strategos::bench::midgame_session(23);
  for (auto _ : state) {
    const auto text = strategos::codec::encode_verbose_baseline(session.state(), 0);
    benchmark::DoNotOptimize(text.data());
  }
}
BENCHMARK(BM_EncodeVerboseBaseline);

void BM_EstimateTokens(benchmark::State& state) {
  auto session = strategos::bench::midgame_session(23);
  const auto doc = session.document(0);
  for (auto _ : state) {
    const auto estimate = strategos::codec::estimate_tokens(doc.text);
    benchmark::DoNotOptimize(estimate.input_tokens);
  }
}
BENCHMARK(BM_EstimateTokens);

}  // namespace
