#include "paracook/world/grid_map.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace paracook::world {

std::string_view to_string(StationKind k) {
  switch (k) {
    case StationKind::Dispenser: return "dispenser";
    case StationKind::CuttingBoard: return "cutting_board";
    case StationKind::Stove: return "stove";
    case StationKind::Sink: return "sink";
    case StationKind::Counter: return "counter";
    case StationKind::ServingWindow: return "serving_window";
    case StationKind::DirtyPlateReturn: return "dirty_plate_return";
  }
  return "?";
}

std::optional<StationKind> parse_station_kind(std::string_view s) {
  for (StationKind k : {StationKind::Dispenser, StationKind::CuttingBoard, StationKind::Stove, StationKind::Sink,
                        StationKind::Counter, StationKind::ServingWindow, StationKind::DirtyPlateReturn})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

GridMap::GridMap(int width, int height, std::vector<Station> stations, std::vector<Coord> agent_spawns)
    : width_(width), height_(height), stations_(std::move(stations)), spawns_(std::move(agent_spawns)) {
  if (width <= 0 || height <= 0) throw MapError("map dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), CellKind::Floor);
  for (const Station& s : stations_) {
    if (!in_bounds(s.pos)) throw MapError("station '" + s.name + "' lies outside the grid");
    cells_[static_cast<std::size_t>(s.pos.y) * width_ + s.pos.x] = CellKind::StationCell;
  }
}

CellKind GridMap::cell(Coord c) const {
  if (!in_bounds(c))
    throw std::out_of_range("coordinate (" + std::to_string(c.x) + ", " + std::to_string(c.y) + ") out of bounds");
  return cells_[static_cast<std::size_t>(c.y) * width_ + c.x];
}

std::optional<StationId> GridMap::station_at(Coord c) const {
  for (StationId i = 0; i < stations_.size(); ++i)
    if (stations_[i].pos == c) return i;
  return std::nullopt;
}

std::optional<StationId> GridMap::find_station(std::string_view name) const {
  for (StationId i = 0; i < stations_.size(); ++i)
    if (stations_[i].name == name) return i;
  return std::nullopt;
}

bool passable(const GridMap& map, Coord c) { return map.cell(c) == CellKind::Floor; }

std::vector<StationId> adjacent_stations(const GridMap& map, Coord c) {
  std::vector<StationId> out;
  for (Coord d : kNeighbourOffsets) {
    Coord n = c + d;
    if (!map.in_bounds(n)) continue;
    if (auto id = map.station_at(n)) out.push_back(*id);
  }
  return out;
}

namespace {

std::size_t index_of(const GridMap& map, Coord c) { return static_cast<std::size_t>(c.y) * map.width() + c.x; }

// BFS over floor cells from `from`; parents[i] is the index the cell was first reached from.
void floor_bfs(const GridMap& map, Coord from, std::vector<int>& dist, std::vector<int>* parents) {
  const std::size_t n = static_cast<std::size_t>(map.width()) * map.height();
  dist.assign(n, -1);
  if (parents) parents->assign(n, -1);
  if (!passable(map, from)) return;
  std::deque<Coord> queue{from};
  dist[index_of(map, from)] = 0;
  while (!queue.empty()) {
    Coord c = queue.front();
    queue.pop_front();
    const int dc = dist[index_of(map, c)];
    for (Coord d : kNeighbourOffsets) {
      Coord n2 = c + d;
      if (!map.in_bounds(n2) || map.cell(n2) != CellKind::Floor) continue;
      const std::size_t ni = index_of(map, n2);
      if (dist[ni] != -1) continue;
      dist[ni] = dc + 1;
      if (parents) (*parents)[ni] = static_cast<int>(index_of(map, c));
      queue.push_back(n2);
    }
  }
}

}  // namespace

std::vector<int> floor_distances(const GridMap& map, Coord from) {
  std::vector<int> dist;
  floor_bfs(map, from, dist, nullptr);
  return dist;
}

std::optional<Path> shortest_path(const GridMap& map, Coord from, Coord to) {
  if (!passable(map, from) || !passable(map, to)) return std::nullopt;
  std::vector<int> dist;
  std::vector<int> parents;
  floor_bfs(map, from, dist, &parents);
  const std::size_t target = index_of(map, to);
  if (dist[target] < 0) return std::nullopt;
  Path path(static_cast<std::size_t>(dist[target]) + 1);
  int cur = static_cast<int>(target);
  for (std::size_t k = path.size(); k-- > 0;) {
    path[k] = Coord{cur % map.width(), cur / map.width()};
    cur = parents[static_cast<std::size_t>(cur)];
  }
  return path;
}

void validate_map(const GridMap& map) {
  std::set<Coord> positions;
  std::set<std::string> names;
  for (const Station& s : map.stations()) {
    if (s.name.empty()) throw MapError("station without a name");
    if (!names.insert(s.name).second) throw MapError("duplicate station name '" + s.name + "'");
    if (!positions.insert(s.pos).second) throw MapError("two stations share a cell at '" + s.name + "'");
    if (s.kind == StationKind::Dispenser && find_ingredient(s.ingredient) == nullptr)
      throw MapError("dispenser '" + s.name + "' has unknown ingredient '" + s.ingredient + "'");
    if (s.kind == StationKind::Stove) {
      if (s.contents.size() > 1 || (s.top() && !s.top()->is_cookware()))
        throw MapError("stove '" + s.name + "' may only hold a single pot or pan");
    }
  }
  if (map.agent_spawns().empty()) throw MapError("map has no agent spawns");
  for (Coord c : map.agent_spawns()) {
    if (!map.in_bounds(c) || map.cell(c) != CellKind::Floor) throw MapError("agent spawn is not a floor cell");
  }

  // Every floor cell must be mutually reachable.
  const std::vector<int> dist = floor_distances(map, map.agent_spawns().front());
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x) {
      Coord c{x, y};
      if (map.cell(c) == CellKind::Floor && dist[index_of(map, c)] < 0)
        throw MapError("floor is not connected at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  for (const Station& s : map.stations()) {
    bool touches_floor = false;
    for (Coord d : kNeighbourOffsets) {
      Coord n = s.pos + d;
      touches_floor = touches_floor || (map.in_bounds(n) && map.cell(n) == CellKind::Floor);
    }
    if (!touches_floor) throw MapError("station '" + s.name + "' is not adjacent to any floor cell");
  }
}

}  // namespace paracook::world
