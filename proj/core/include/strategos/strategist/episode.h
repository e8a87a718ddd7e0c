#pragma once

#include <array>
#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include "strategos/bridge/tool_server.h"
#include "strategos/codec/markdown.h"
#include "strategos/codec/tokens.h"
#include "strategos/codec/tool_schema.h"

namespace strategos::strategist {

using Json = nlohmann::ordered_json;

enum class EpisodeOutcome { Completed, TimeoutGap, ErrorGap, ForcedClose };
const char* to_string(EpisodeOutcome o);
bool parse_episode_outcome(const std::string& s, EpisodeOutcome& out);

struct ToolCallRecord {
  std::string name;
  Json arguments;
  bool ok = false;
  std::string error;
};

// One strategist episode, fully accounted.
struct DecisionRecord {
  int turn = 0;
  int episode_id = 0;
  std::vector<ToolCallRecord> tool_calls;
  std::array<std::string, strategy::kDecisionCategoryCount> rationale;  // per category
  long long input_tokens = 0;
  long long output_tokens = 0;
  int rounds = 0;
  long long latency_ms = 0;
  EpisodeOutcome outcome = EpisodeOutcome::Completed;
};

struct EpisodeContext {
  engine::PlayerId player = 0;
  const codec::MarkdownDoc* doc = nullptr;
  std::chrono::milliseconds deadline{30000};
  int round_cap = 8;
  int turn = 0;
  int episode_id = 0;
};

struct ToolCall {
  std::string name;
  Json arguments;
};

// One strategist round input: the state document, the tools still available,
// and validator feedback from the previous round (empty on the first).
struct RoundInput {
  const codec::MarkdownDoc* doc = nullptr;
  std::vector<codec::ToolDescriptor> tools;
  std::string feedback;
  int round = 1;
};

struct RoundReply {
  std::vector<ToolCall> calls;
  long long input_tokens = 0;   // 0 = unreported, estimate instead
  long long output_tokens = 0;
  bool transport_error = false;
  bool transport_timeout = false;
  std::string error;
};

class Strategist {
 public:
  virtual ~Strategist() = default;
  virtual std::string name() const = 0;
  virtual RoundReply decide(const RoundInput& input) = 0;
};

// Loops strategist rounds against the tool session until a finishing tool,
// the deadline, or the round cap. Deadline or cap auto-issues keep-status-quo
// (outcome forced_close); transport failure yields error_gap/timeout_gap and
// leaves prior strategy in force.
DecisionRecord run_decision_episode(const EpisodeContext& ctx, Strategist& strategist,
                                    bridge::ToolSession& session);

// System prompt for LLM strategists, rendered from the bundled template with
// the engine-specific Situation block.
std::string render_system_prompt(const engine::GameState& state, engine::PlayerId player);

// Transcript form of an episode (one JSONL line per episode).
Json decision_record_json(const DecisionRecord& record);

}  // namespace strategos::strategist
