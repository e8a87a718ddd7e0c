#include "strategos/tactical/flavor.h"

namespace strategos::tactical {

namespace {
constexpr const char* kFlavorNames[kFlavorCount] = {
    "Offense", "Defense",  "Expansion", "Growth",     "Gold",      "Science",   "Culture",
    "Faith",   "Diplomacy", "Wonder",    "NavalRecon", "LandRecon", "Happiness", "Production",
};
}

const char* to_string(Flavor f) { return kFlavorNames[static_cast<int>(f)]; }

bool parse_flavor(const std::string& s, Flavor& out) {
  for (int i = 0; i < kFlavorCount; ++i) {
    if (s == kFlavorNames[i]) {
      out = static_cast<Flavor>(i);
      return true;
    }
  }
  return false;
}

}  // namespace strategos::tactical
