#include "paracook/world/bundle.hpp"

#include <charconv>
#include <stdexcept>

namespace paracook::world {

void TimeConstants::validate() const {
  const std::pair<const char*, Ticks> fields[] = {
      {"move_per_tile", move_per_tile}, {"interact", interact},   {"cut", cut},
      {"pot_cook", pot_cook},           {"pan_cook", pan_cook},   {"wash_plate", wash_plate},
      {"dirty_plate_return", dirty_plate_return},
  };
  for (const auto& [name, value] : fields)
    if (value <= 0) throw std::invalid_argument(std::string("time constant '") + name + "' must be positive");
}

const Recipe* TaskBundle::find_recipe(std::string_view rid) const {
  for (const Recipe& r : recipes)
    if (r.id == rid) return &r;
  return nullptr;
}

std::string agent_name(AgentIndex index) { return "agent" + std::to_string(index + 1); }

std::optional<AgentIndex> parse_agent_name(std::string_view name) {
  constexpr std::string_view prefix = "agent";
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view digits = name.substr(prefix.size());
  if (digits.front() == '0') return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) return std::nullopt;
  return value - 1;
}

}  // namespace paracook::world
