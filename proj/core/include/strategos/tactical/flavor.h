#pragma once

#include <array>
#include <string>

namespace strategos::tactical {

enum class Flavor {
  Offense,
  Defense,
  Expansion,
  Growth,
  Gold,
  Science,
  Culture,
  Faith,
  Diplomacy,
  Wonder,
  NavalRecon,
  LandRecon,
  Happiness,
  Production,
};

inline constexpr int kFlavorCount = 14;

const char* to_string(Flavor f);
bool parse_flavor(const std::string& s, Flavor& out);

// Named tactical weights, clamped to [0, 100] after every modification.
class FlavorVector {
 public:
  FlavorVector() { weights_.fill(10); }

  static FlavorVector zero() {
    FlavorVector v;
    v.weights_.fill(0);
    return v;
  }

  int operator[](Flavor f) const { return weights_[static_cast<int>(f)]; }

  void set(Flavor f, int value) { weights_[static_cast<int>(f)] = clamp(value); }
  void add(Flavor f, int delta) { set(f, weights_[static_cast<int>(f)] + delta); }

  bool operator==(const FlavorVector&) const = default;

 private:
  static int clamp(int v) { return v < 0 ? 0 : (v > 100 ? 100 : v); }
  std::array<int, kFlavorCount> weights_;
};

}  // namespace strategos::tactical
