#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paracook/world/geometry.hpp"
#include "paracook/world/item.hpp"

namespace paracook::world {

using StationId = std::size_t;
using AgentIndex = std::size_t;

enum class CellKind { Floor, StationCell };

enum class StationKind { Dispenser, CuttingBoard, Stove, Sink, Counter, ServingWindow, DirtyPlateReturn };

std::string_view to_string(StationKind k);
std::optional<StationKind> parse_station_kind(std::string_view s);

struct Station {
  std::string name;
  StationKind kind = StationKind::Counter;
  std::string ingredient;  // Dispenser only
  Coord pos;
  std::vector<Item> contents;           // bottom-to-top stack
  std::optional<AgentIndex> busy_by;    // set while a Process targets this station

  const Item* top() const { return contents.empty() ? nullptr : &contents.back(); }
  Item* top() { return contents.empty() ? nullptr : &contents.back(); }
};

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Static kitchen layout plus the initial contents of every station.
class GridMap {
 public:
  GridMap() = default;
  GridMap(int width, int height, std::vector<Station> stations, std::vector<Coord> agent_spawns);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_bounds(Coord c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }

  /// Throws std::out_of_range outside the grid.
  CellKind cell(Coord c) const;

  const std::vector<Station>& stations() const { return stations_; }
  const std::vector<Coord>& agent_spawns() const { return spawns_; }

  std::optional<StationId> station_at(Coord c) const;
  std::optional<StationId> find_station(std::string_view name) const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<CellKind> cells_;
  std::vector<Station> stations_;
  std::vector<Coord> spawns_;
};

/// True iff the cell is floor. Agents never block each other.
bool passable(const GridMap& map, Coord c);

/// Stations 4-adjacent to `c`, in N, E, S, W order.
std::vector<StationId> adjacent_stations(const GridMap& map, Coord c);

using Path = std::vector<Coord>;

/// Minimum-length 4-connected floor path from `from` to `to` inclusive, or nullopt when unreachable.
/// Ties are broken by the fixed N, E, S, W expansion order, so replays are identical.
std::optional<Path> shortest_path(const GridMap& map, Coord from, Coord to);

/// Tiles travelled along a path (its length minus one).
inline int path_tiles(const Path& p) { return p.empty() ? 0 : static_cast<int>(p.size()) - 1; }

/// Floor BFS distance from `from` to every cell; -1 where unreachable or not floor.
std::vector<int> floor_distances(const GridMap& map, Coord from);

/// Checks every layout invariant; throws MapError with the first violation.
void validate_map(const GridMap& map);

}  // namespace paracook::world
