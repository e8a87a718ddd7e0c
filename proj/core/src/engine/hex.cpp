#include "strategos/engine/hex.h"

namespace strategos::engine {

std::vector<Hex> hexes_within(Hex center, int radius, int width, int height) {
  std::vector<Hex> out;
  for (int y = center.y - radius; y <= center.y + radius; ++y) {
    for (int x = center.x - radius; x <= center.x + radius; ++x) {
      if (x < 0 || x >= width || y < 0 || y >= height) continue;
      const Hex h{x, y};
      if (hex_distance(center, h) <= radius) out.push_back(h);
    }
  }
  return out;
}

}  // namespace strategos::engine
