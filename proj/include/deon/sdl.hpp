// Standard deontic logic (modal logic D) over finite serial Kripke models.

#ifndef DEON_SDL_HPP_
#define DEON_SDL_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "deon/formula.hpp"

namespace deon {

using World = std::size_t;

struct KripkeModel {
  std::size_t world_count = 1;
  // successors[w] lists the worlds accessible from w.
  std::vector<std::set<World>> successors;
  // Atoms absent from the map are false everywhere.
  std::map<std::string, std::set<World>> valuation;
  World current_world = 0;

  // Empty accessibility over n worlds.
  static KripkeModel with_worlds(std::size_t n);

  void add_edge(World from, World to);
  bool holds(const std::string& atom, World w) const;

  // Index ranges and current_world; seriality is checked separately.
  bool well_formed() const;

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;
};

// Raised when a formula uses a construct the selected logic lacks.
class UnsupportedConstruct : public std::runtime_error {
 public:
  explicit UnsupportedConstruct(const Formula& offending);
  const Formula& offending() const { return offending_; }

 private:
  Formula offending_;
};

// Throws UnsupportedConstruct on the first dyadic obligation in f.
void require_sdl_syntax(const Formula& f);

bool is_serial(const KripkeModel& m);

// Worlds where f holds; entry w is the truth value at w.
std::vector<bool> extension_sdl(const KripkeModel& m, const Formula& f);
bool eval_sdl(const KripkeModel& m, World w, const Formula& f);

}  // namespace deon

#endif  // DEON_SDL_HPP_
