#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace qtc {

// Deepest representable subdivision level. pack() lays out 5 bits of level
// plus 29 bits per coordinate in one 64-bit word.
inline constexpr int kMaxLevel = 29;

// Address of one square of the dyadic grid: level 0 is the unit square and
// each level halves the side. x counts columns, y counts rows, y up. The
// square covers [x,x+1] x [y,y+1] in units of 2^-level.
struct SquareKey {
  int level = 0;
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  // Canonical order everywhere: lexicographic (level, x, y).
  friend constexpr auto operator<=>(const SquareKey&,
                                    const SquareKey&) = default;

  constexpr bool in_range() const {
    return level >= 0 && level <= kMaxLevel && x < (1u << level) &&
           y < (1u << level);
  }

  constexpr SquareKey parent() const { return {level - 1, x >> 1, y >> 1}; }

  // Children in canonical order: SW, NW, SE, NE.
  constexpr std::array<SquareKey, 4> children() const {
    return {SquareKey{level + 1, 2 * x, 2 * y},
            SquareKey{level + 1, 2 * x, 2 * y + 1},
            SquareKey{level + 1, 2 * x + 1, 2 * y},
            SquareKey{level + 1, 2 * x + 1, 2 * y + 1}};
  }

  constexpr std::uint64_t pack() const {
    return (std::uint64_t(level) << 58) | (std::uint64_t(x) << 29) |
           std::uint64_t(y);
  }

  static constexpr SquareKey unpack(std::uint64_t v) {
    return {int(v >> 58), std::uint32_t((v >> 29) & 0x1fffffffu),
            std::uint32_t(v & 0x1fffffffu)};
  }

  // Root-to-square path, two bits per step, left-aligned so an ancestor's
  // code is a bit prefix of every descendant's. Drives exact partition
  // checks.
  constexpr std::uint64_t path_code() const {
    std::uint64_t p = 0;
    for (int i = 0; i < level; ++i) {
      const std::uint64_t digit =
          (std::uint64_t((y >> (level - 1 - i)) & 1u) << 1) |
          std::uint64_t((x >> (level - 1 - i)) & 1u);
      p |= digit << (62 - 2 * i);
    }
    return p;
  }

  // True iff this square's region contains (or equals) other's region.
  constexpr bool contains(const SquareKey& other) const {
    if (level > other.level) return false;
    const int shift = other.level - level;
    return (other.x >> shift) == x && (other.y >> shift) == y;
  }

  std::string str() const {
    return "(" + std::to_string(level) + "," + std::to_string(x) + "," +
           std::to_string(y) + ")";
  }
};

// SplitMix64 finalizer; the fixed hash behind every seeded decision in the
// library (see README for the reproducibility contract).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct PackedKeyHash {
  std::size_t operator()(std::uint64_t v) const {
    return std::size_t(mix64(v));
  }
};

}  // namespace qtc
