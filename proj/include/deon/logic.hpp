#ifndef DEON_LOGIC_HPP_
#define DEON_LOGIC_HPP_

#include <optional>
#include <string_view>

namespace deon {

enum class Logic { Sdl, Ddl };

constexpr std::string_view to_string(Logic l) { return l == Logic::Sdl ? "sdl" : "ddl"; }

constexpr std::optional<Logic> parse_logic(std::string_view s) {
  if (s == "sdl") return Logic::Sdl;
  if (s == "ddl") return Logic::Ddl;
  return std::nullopt;
}

}  // namespace deon

#endif  // DEON_LOGIC_HPP_
