#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>

namespace paracook {

/// Simulated time, in abstract time units.
using Ticks = std::int64_t;

/// Grid coordinate: x is the column, y the row, origin top-left.
struct Coord {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

constexpr Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }

inline int manhattan(Coord a, Coord b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

// Fixed neighbour order N, E, S, W. Every tie-break in the project uses it.
inline constexpr std::array<Coord, 4> kNeighbourOffsets{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

}  // namespace paracook
