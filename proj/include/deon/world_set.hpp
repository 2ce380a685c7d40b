#ifndef DEON_WORLD_SET_HPP_
#define DEON_WORLD_SET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace deon {

// A subset of worlds {0..n-1} as a canonical bit pattern, bit i = world i.
class WorldSet {
 public:
  static constexpr std::size_t kMaxWorlds = 16;

  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr WorldSet all(std::size_t n) { return WorldSet((std::uint32_t{1} << n) - 1); }
  static constexpr WorldSet single(std::size_t w) { return WorldSet(std::uint32_t{1} << w); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t w) const { return (bits_ >> w) & 1u; }
  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const { return (bits_ & o.bits_) != 0; }
  int count() const { return std::popcount(bits_); }

  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet minus(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  constexpr WorldSet complement(std::size_t n) const { return all(n).minus(*this); }

  friend constexpr bool operator==(WorldSet a, WorldSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator<(WorldSet a, WorldSet b) { return a.bits_ < b.bits_; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < 32; ++w) {
      if (contains(w)) out.push_back(w);
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t w : members()) {
      if (!first) s += ",";
      s += std::to_string(w);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace deon

#endif  // DEON_WORLD_SET_HPP_
