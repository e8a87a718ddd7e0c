#pragma once

#include <set>
#include <string>
#include <vector>

#include "strategos/codec/tool_schema.h"
#include "strategos/strategy/ops.h"

namespace strategos::bridge {

using Json = nlohmann::ordered_json;

struct ToolError {
  std::string code;     // VALIDATION | REUSED | CLOSED | UNKNOWN_TOOL | BAD_ARGS
  std::string message;
  std::string field;    // offending field/value when known
  std::string suggestion;
};

struct ToolResponse {
  bool ok = false;
  Json payload;
  ToolError error;

  Json to_json() const;
};

// One decision episode: schema-validated tool dispatch against a player's
// override surface. Tools are consumed on success; finishing tools close the
// episode; after close every call errors CLOSED and mutates nothing.
class ToolSession {
 public:
  ToolSession(strategy::OptionCatalog catalog, strategy::OverrideState& overrides);

  ToolResponse call(const std::string& name, const Json& arguments);

  // Published schemas minus consumed tools; empty once closed.
  std::vector<codec::ToolDescriptor> remaining_tools() const;

  bool closed() const { return closed_; }
  bool consumed(const std::string& name) const { return consumed_.count(name) > 0; }
  const strategy::OptionCatalog& catalog() const { return catalog_; }
  const strategy::OverrideState& overrides() const { return overrides_; }

 private:
  ToolResponse dispatch(const std::string& name, const Json& arguments);

  strategy::OptionCatalog catalog_;
  strategy::OverrideState& overrides_;
  std::set<std::string> consumed_;
  bool closed_ = false;
};

}  // namespace strategos::bridge
