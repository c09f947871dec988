#pragma once

#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

#include "spho/order.hpp"

namespace spho {

// ---------------------------------------------------------------------------
// Colors of theory T: c_n for finite blocks, w / sw / z for omega, omega*,
// zeta.  Tagged values rather than numeric offsets.
// ---------------------------------------------------------------------------

enum class InfColor : std::uint8_t { W, SW, Z };

struct FiniteColor {
  std::uint64_t n;  // >= 1
  auto operator<=>(const FiniteColor&) const = default;
};

using Color = std::variant<FiniteColor, InfColor>;

Color color_of(const BlockType& t);
BlockType block_of(const Color& c);

// ---------------------------------------------------------------------------
// Colored orderings (theory T).  A ColorShuffle reuses the SizeSet machinery
// for its finite colors and carries infinite-color flags.
// ---------------------------------------------------------------------------

struct Point {
  Color color;
  auto operator<=>(const Point&) const = default;
};

struct ColorShuffle {
  SizeSet finite_colors;
  InfSet inf_colors;  // omega ~ w, omega_star ~ sw, zeta ~ z
  auto operator<=>(const ColorShuffle&) const = default;
};

using ColoredItem = std::variant<Point, ColorShuffle>;

struct ColoredOrdering {
  std::vector<ColoredItem> items;
  friend bool operator==(const ColoredOrdering& a, const ColoredOrdering& b) {
    return a.items == b.items;
  }
};

// T adjacency axioms (4)-(7) on adjacent points: no c_i before c_j, no c_i
// before w, no sw before c_i, no sw before w.
bool satisfies_t_adjacency(const ColoredOrdering& c);

// ---------------------------------------------------------------------------
// Multicolored models (theory T').
// ---------------------------------------------------------------------------

struct RCell {
  Color color;
  auto operator<=>(const RCell&) const = default;
};

struct SCell {
  std::vector<Color> colors;  // non-empty, sorted, unique
  auto operator<=>(const SCell&) const = default;
};

using TPrimeCell = std::variant<RCell, SCell>;

struct TPrimeModel {
  std::vector<TPrimeCell> cells;
  friend bool operator==(const TPrimeModel& a, const TPrimeModel& b) {
    return a.cells == b.cells;
  }
};

// Empty string when valid, else the violated axiom spelled out.
std::string validate_tprime(const TPrimeModel& m);
bool tprime_valid(const TPrimeModel& m);

// Variant without the adjacency axioms (3b)-(3e); colors still unique.
std::string validate_tprime_minus(const TPrimeModel& m);

// ---------------------------------------------------------------------------
// The correspondences.
// ---------------------------------------------------------------------------

// Quotient by the block relation, color by block type.  Rejects orderings
// with a forbidden adjacency (those denote merged blocks).
ColoredOrdering phi(const SymbolicOrdering& o);

// Inverse of phi; rejects inputs violating the T adjacency axioms.
SymbolicOrdering psi(const ColoredOrdering& c);

// R(c) -> Point(c), S(A) -> ColorShuffle(A); rejects invalid models with the
// violated axiom named.
ColoredOrdering expand_g(const TPrimeModel& m);

// psi . expand_g; the image is always sp-homogeneous.
SymbolicOrdering big_f(const TPrimeModel& m);

}  // namespace spho
