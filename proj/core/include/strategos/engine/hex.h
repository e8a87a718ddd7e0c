#pragma once

#include <array>
#include <cstdlib>
#include <vector>

namespace strategos::engine {

// Odd-row offset hex coordinates on a width x height grid.
struct Hex {
  int x = 0;
  int y = 0;
  bool operator==(const Hex&) const = default;
};

// Neighbor offsets depend on row parity (odd-r layout).
inline std::array<Hex, 6> hex_neighbors(Hex h) {
  const bool odd = (h.y & 1) != 0;
  if (odd) {
    return {Hex{h.x, h.y - 1},     Hex{h.x + 1, h.y - 1}, Hex{h.x - 1, h.y},
            Hex{h.x + 1, h.y},     Hex{h.x, h.y + 1},     Hex{h.x + 1, h.y + 1}};
  }
  return {Hex{h.x - 1, h.y - 1}, Hex{h.x, h.y - 1}, Hex{h.x - 1, h.y},
          Hex{h.x + 1, h.y},     Hex{h.x - 1, h.y + 1}, Hex{h.x, h.y + 1}};
}

inline int hex_distance(Hex a, Hex b) {
  // Convert odd-r offset to cube coordinates.
  const int aq = a.x - (a.y - (a.y & 1)) / 2;
  const int ar = a.y;
  const int bq = b.x - (b.y - (b.y & 1)) / 2;
  const int br = b.y;
  const int dq = aq - bq;
  const int dr = ar - br;
  const int ds = (-aq - ar) - (-bq - br);
  return (std::abs(dq) + std::abs(dr) + std::abs(ds)) / 2;
}

// All tiles within `radius` of center, clipped to the grid, in scan order.
std::vector<Hex> hexes_within(Hex center, int radius, int width, int height);

}  // namespace strategos::engine
