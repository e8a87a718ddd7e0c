#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "strategos/analytics/report.h"
#include "strategos/bridge/service.h"
#include "strategos/codec/tool_schema.h"
#include "strategos/engine/save.h"
#include "strategos/harness/batch.h"
#include "strategos/strategist/scripted.h"

namespace {

volatile std::sig_atomic_t g_stop = 0;
void handle_signal(int) { g_stop = 1; }

strategos::engine::GameConfig make_game_config(int width, int height, int players, int max_turns) {
  strategos::engine::GameConfig cfg;
  cfg.map_width = width;
  cfg.map_height = height;
  cfg.player_count = players;
  cfg.max_turns = max_turns;
  return cfg;
}

std::string transcripts_dir_for(const std::string& output_path) {
  return output_path + ".transcripts";
}

int cmd_run(const std::string& condition_text, std::uint64_t seed, int width, int height,
            int players, int max_turns, const std::string& out, bool transcripts) {
  const auto condition = strategos::harness::Condition::parse(condition_text);
  const auto config = make_game_config(width, height, players, max_turns);

  strategos::harness::RunOptions options;
  std::unique_ptr<std::ofstream> transcript_file;
  if (transcripts) {
    const std::string dir = transcripts_dir_for(out.empty() ? "records.jsonl" : out);
    std::filesystem::create_directories(dir);
    const std::string path =
        dir + "/" + condition.name + "-" + std::to_string(seed) + ".jsonl";
    transcript_file = std::make_unique<std::ofstream>(path, std::ios::trunc);
    options.on_episode = [&](const strategos::strategist::DecisionRecord& r) {
      *transcript_file << strategos::strategist::decision_record_json(r).dump() << "\n";
    };
  }

  const auto record = strategos::harness::run_game(condition, seed, config, options);
  if (!out.empty()) {
    strategos::harness::RecordWriter writer(out);
    writer.append(record);
    std::cout << "appended record to " << out << "\n";
  }
  std::cout << record.to_json().dump(2) << "\n";
  return 0;
}

int cmd_batch(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config: " << config_path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto cfg =
      strategos::harness::ExperimentConfig::from_json(nlohmann::ordered_json::parse(buffer.str()));
  const auto result = strategos::harness::run_batch(cfg);
  std::cout << "batch complete: " << result.games_run << " run, " << result.games_skipped
            << " skipped (resume), output " << result.output_path << "\n";
  return 0;
}

int cmd_serve(int port, int frame_port, std::uint64_t seed, int width, int height, int players,
              int max_turns, const std::string& bind, bool allow_advance) {
  auto cfg = make_game_config(width, height, players, max_turns);
  cfg.seed = seed;
  strategos::harness::GameSession session(cfg);

  strategos::bridge::SessionApi api(session, 0, allow_advance);
  strategos::bridge::RestServer rest(api);
  const int rest_port = rest.start(bind, port);
  if (rest_port < 0) {
    std::cerr << "failed to bind REST server\n";
    return 1;
  }
  strategos::bridge::FrameServer frames(api);
  const int bound_frame_port = frames.start(bind, frame_port);
  if (bound_frame_port < 0) {
    std::cerr << "failed to bind frame server\n";
    return 1;
  }

  std::cout << "serving seed " << seed << "\n";
  std::cout << "REST:   http://" << strategos::bridge::bind_address_or_default(bind) << ":"
            << rest_port << "  (GET /state /catalog /events /tools /save, POST /tool /advance)\n";
  std::cout << "frames: " << strategos::bridge::bind_address_or_default(bind) << ":"
            << bound_frame_port << "  (4-byte big-endian length prefix + JSON)\n";

  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  frames.stop();
  rest.stop();
  return 0;
}

int cmd_analyze(const std::string& in_path, const std::string& out_dir, double lambda) {
  const auto records = strategos::harness::read_all_records(in_path);
  if (records.empty()) {
    std::cerr << "no records in " << in_path << "\n";
    return 1;
  }
  const auto summary = strategos::analytics::compute_metrics(records);
  const auto regressions = strategos::analytics::run_regressions(records, lambda);
  const auto files = strategos::analytics::emit_report(summary, regressions, out_dir);
  for (const auto& f : files) std::cout << "wrote " << f << "\n";
  for (const auto& c : summary.conditions) {
    std::cout << c.condition << ": " << c.games << " games, win_rate=" << c.win_rate
              << ", score_ratio=" << c.mean_score_ratio << "\n";
  }
  return 0;
}

int cmd_replay(const std::string& record_path, const std::string& condition_filter,
               std::int64_t seed_filter) {
  const auto records = strategos::harness::read_all_records(record_path);
  const strategos::harness::GameRecord* chosen = nullptr;
  for (const auto& r : records) {
    if (!condition_filter.empty() && r.condition != condition_filter) continue;
    if (seed_filter >= 0 && r.seed != static_cast<std::uint64_t>(seed_filter)) continue;
    chosen = &r;
    break;
  }
  if (!chosen) {
    std::cerr << "no matching record\n";
    return 1;
  }
  if (chosen->condition.rfind("llm", 0) == 0) {
    std::cerr << "LLM-condition games cannot be replayed deterministically\n";
    return 1;
  }

  // Builtin replays need no strategist; scripted conditions re-run their
  // preset against a fresh session so the event log is reproduced exactly.
  auto cfg = make_game_config(chosen->map_width, chosen->map_height, chosen->player_count,
                              chosen->max_turns);
  cfg.seed = chosen->seed;
  strategos::harness::GameSession session(cfg);

  std::unique_ptr<strategos::strategist::Strategist> strategist_impl;
  if (chosen->condition != "builtin") {
    strategist_impl = std::make_unique<strategos::strategist::ScriptedStrategist>(
        chosen->condition);
  }
  while (!session.state().terminal() && session.state().turn < cfg.max_turns &&
         session.state().players[0].alive) {
    session.advance();
    if (session.state().terminal() || !session.state().players[0].alive) break;
    if (session.state().turn >= cfg.max_turns) break;
    if (strategist_impl) {
      auto& tool_session = session.open_episode(0);
      strategos::strategist::EpisodeContext ctx;
      const auto doc = session.document(0);
      ctx.doc = &doc;
      ctx.turn = session.state().turn - 1;
      strategos::strategist::run_decision_episode(ctx, *strategist_impl, tool_session);
      session.close_episode();
    }
  }
  const auto& state = session.state();
  std::cout << "condition " << chosen->condition << " seed " << chosen->seed << "\n";
  for (const auto& e : state.event_log) {
    std::cout << "turn " << e.turn << " #" << e.index << " " << strategos::engine::to_string(e.kind)
              << " " << e.payload.dump() << "\n";
  }
  if (state.victory) {
    std::cout << "victory: player " << state.victory->winner << " by "
              << strategos::engine::to_string(state.victory->kind) << " on turn "
              << state.victory->turn << "\n";
  }
  return 0;
}

int cmd_tools_schema(const std::string& out_path) {
  const auto doc = strategos::codec::tool_schemas_json();
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::ofstream out(out_path, std::ios::trunc);
  out << doc.dump(2) << "\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strategos: deterministic mini-4X engine with pluggable macro strategists"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run a single game");
  std::string run_condition = "builtin";
  std::uint64_t run_seed = 1;
  int width = 16, height = 16, players = 4, max_turns = 200;
  std::string run_out;
  bool run_transcripts = false;
  run->add_option("--condition", run_condition,
                  "builtin | scripted:<preset> | llm:<model>@<url>");
  run->add_option("--seed", run_seed, "Game seed");
  run->add_option("--width", width, "Map width");
  run->add_option("--height", height, "Map height");
  run->add_option("--players", players, "Player count");
  run->add_option("--max-turns", max_turns, "Turn limit");
  run->add_option("--out", run_out, "Append the record to this JSONL file");
  run->add_flag("--transcripts", run_transcripts, "Write per-episode transcripts");

  // batch
  auto* batch = app.add_subcommand("batch", "Run an experiment batch from a config file");
  std::string batch_config;
  batch->add_option("--config", batch_config, "JSON experiment config")->required();

  // serve
  auto* serve = app.add_subcommand("serve", "Host one game behind the REST + frame bridge");
  int serve_port = 8077;
  int frame_port = 0;
  std::uint64_t serve_seed = 1;
  std::string bind_addr;
  bool no_advance = false;
  serve->add_option("--port", serve_port, "REST port (0 = ephemeral)");
  serve->add_option("--frame-port", frame_port, "Frame protocol port (0 = ephemeral)");
  serve->add_option("--seed", serve_seed, "Game seed");
  serve->add_option("--width", width, "Map width");
  serve->add_option("--height", height, "Map height");
  serve->add_option("--players", players, "Player count");
  serve->add_option("--max-turns", max_turns, "Turn limit");
  serve->add_option("--bind", bind_addr, "Bind address (default STRATEGOS_BIND_ADDR or loopback)");
  serve->add_flag("--no-advance", no_advance, "Disable POST /advance (read-only stepping)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Compute metrics, regressions and reports");
  std::string analyze_in, analyze_out = "analysis";
  double lambda = 0.01;
  analyze->add_option("--in", analyze_in, "Input records JSONL")->required();
  analyze->add_option("--out", analyze_out, "Output directory");
  analyze->add_option("--lambda", lambda, "L1 strength for logistic fits");

  // replay
  auto* replay = app.add_subcommand("replay", "Re-run a recorded game and dump its event log");
  std::string replay_record, replay_condition;
  std::int64_t replay_seed = -1;
  replay->add_option("--record", replay_record, "Records JSONL file")->required();
  replay->add_option("--condition", replay_condition, "Condition filter");
  replay->add_option("--seed", replay_seed, "Seed filter");

  // tools-schema
  auto* schema = app.add_subcommand("tools-schema", "Print or write the tool descriptor file");
  std::string schema_out;
  schema->add_option("--out", schema_out, "Output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_condition, run_seed, width, height, players, max_turns, run_out,
                     run_transcripts);
    }
    if (batch->parsed()) return cmd_batch(batch_config);
    if (serve->parsed()) {
      return cmd_serve(serve_port, frame_port, serve_seed, width, height, players, max_turns,
                       bind_addr, !no_advance);
    }
    if (analyze->parsed()) return cmd_analyze(analyze_in, analyze_out, lambda);
    if (replay->parsed()) return cmd_replay(replay_record, replay_condition, replay_seed);
    if (schema->parsed()) return cmd_tools_schema(schema_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
