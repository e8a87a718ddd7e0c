#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace strategos::codec {

inline constexpr int kToolSchemaVersion = 1;

struct ToolDescriptor {
  std::string name;
  std::string description;
  bool finishing = false;  // closes the decision episode
  nlohmann::ordered_json parameters;  // JSON-schema style object
};

// The five decision tools. set-strategy and keep-status-quo are finishing;
// every tool requires a rationale argument.
const std::vector<ToolDescriptor>& tool_schemas();

const ToolDescriptor* find_tool(const std::string& name);

// Machine-readable descriptor document (the published tool_schemas.json).
nlohmann::ordered_json tool_schemas_json();

// Chat-completions "tools" array form.
nlohmann::ordered_json tool_schemas_chat_format();

}  // namespace strategos::codec
