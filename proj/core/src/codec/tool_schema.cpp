#include "strategos/codec/tool_schema.h"

#include "strategos/strategy/strategy.h"

namespace strategos::codec {

using Json = nlohmann::ordered_json;

namespace {

Json string_param(const char* description) {
  Json p;
  p["type"] = "string";
  p["description"] = description;
  return p;
}

Json persona_param() {
  Json p;
  p["type"] = "integer";
  p["minimum"] = 1;
  p["maximum"] = 10;
  return p;
}

std::vector<ToolDescriptor> build_schemas() {
  std::vector<ToolDescriptor> tools;

  {
    ToolDescriptor t;
    t.name = "set-persona";
    t.description =
        "Change the in-game AI's diplomatic persona. Provide only the parameters you want to "
        "change; each is an integer from 1 to 10.";
    t.finishing = false;
    Json props;
    for (const char* name : strategy::Persona::param_names()) props[name] = persona_param();
    props["rationale"] = string_param("Why this persona change is right for the situation.");
    t.parameters["type"] = "object";
    t.parameters["properties"] = std::move(props);
    t.parameters["required"] = Json::array({"rationale"});
    tools.push_back(std::move(t));
  }
  {
    ToolDescriptor t;
    t.name = "set-research";
    t.description =
        "Change the NEXT technology to research (applied when the current one finishes). The "
        "choice must come from the Research options list.";
    t.finishing = false;
    Json props;
    props["technology"] = string_param("Technology name from the Research options list.");
    props["rationale"] = string_param("Why this technology is the right next step.");
    t.parameters["type"] = "object";
    t.parameters["properties"] = std::move(props);
    t.parameters["required"] = Json::array({"technology", "rationale"});
    tools.push_back(std::move(t));
  }
  {
    ToolDescriptor t;
    t.name = "set-policy";
    t.description =
        "Change the NEXT policy to adopt (applied when enough culture accumulates). The choice "
        "must come from the Policies options list, exactly as written.";
    t.finishing = false;
    Json props;
    props["policy"] = string_param("Policy entry from the Policies options list.");
    props["rationale"] = string_param("Why this policy fits the current strategy.");
    t.parameters["type"] = "object";
    t.parameters["properties"] = std::move(props);
    t.parameters["required"] = Json::array({"policy", "rationale"});
    tools.push_back(std::move(t));
  }
  {
    ToolDescriptor t;
    t.name = "set-strategy";
    t.description =
        "Set the grand strategy and the supporting economic/military strategy sets. This "
        "finishes the decision-making loop; take other actions first.";
    t.finishing = true;
    Json props;
    props["grand"] = string_param("Grand strategy from the GrandStrategy options list.");
    Json econ;
    econ["type"] = "array";
    econ["items"] = Json{{"type", "string"}};
    econ["description"] = "Economic strategies to activate (replaces the current set).";
    props["economic"] = std::move(econ);
    Json mil;
    mil["type"] = "array";
    mil["items"] = Json{{"type", "string"}};
    mil["description"] = "Military strategies to activate (replaces the current set).";
    props["military"] = std::move(mil);
    props["rationale"] = string_param("Why this strategic posture is right for the situation.");
    t.parameters["type"] = "object";
    t.parameters["properties"] = std::move(props);
    t.parameters["required"] = Json::array({"rationale"});
    tools.push_back(std::move(t));
  }
  {
    ToolDescriptor t;
    t.name = "keep-status-quo";
    t.description =
        "Keep every current decision unchanged. This also finishes the decision-making loop.";
    t.finishing = true;
    Json props;
    props["rationale"] = string_param("Why no change is warranted this turn.");
    t.parameters["type"] = "object";
    t.parameters["properties"] = std::move(props);
    t.parameters["required"] = Json::array({"rationale"});
    tools.push_back(std::move(t));
  }
  return tools;
}

}  // namespace

const std::vector<ToolDescriptor>& tool_schemas() {
  static const std::vector<ToolDescriptor> schemas = build_schemas();
  return schemas;
}

const ToolDescriptor* find_tool(const std::string& name) {
  for (const auto& t : tool_schemas()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

Json tool_schemas_json() {
  Json doc;
  doc["schema_version"] = kToolSchemaVersion;
  Json tools = Json::array();
  for (const auto& t : tool_schemas()) {
    Json tj;
    tj["name"] = t.name;
    tj["description"] = t.description;
    tj["finishing"] = t.finishing;
    tj["parameters"] = t.parameters;
    tools.push_back(std::move(tj));
  }
  doc["tools"] = std::move(tools);
  return doc;
}

Json tool_schemas_chat_format() {
  Json tools = Json::array();
  for (const auto& t : tool_schemas()) {
    Json fn;
    fn["name"] = t.name;
    fn["description"] = t.description;
    fn["parameters"] = t.parameters;
    Json tj;
    tj["type"] = "function";
    tj["function"] = std::move(fn);
    tools.push_back(std::move(tj));
  }
  return tools;
}

}  // namespace strategos::codec
