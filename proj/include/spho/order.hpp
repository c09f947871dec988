#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace spho {

// ---------------------------------------------------------------------------
// Block types: finite n (n >= 1), omega, omega*, zeta.
// ---------------------------------------------------------------------------

enum class InfType : std::uint8_t { Omega, OmegaStar, Zeta };

struct Finite {
  std::uint64_t n;  // >= 1
  auto operator<=>(const Finite&) const = default;
};

using BlockType = std::variant<Finite, InfType>;

bool is_finite(const BlockType& t);
std::uint64_t finite_size(const BlockType& t);  // requires is_finite
BlockType reversed(const BlockType& t);         // omega <-> omega*, rest fixed

// Set of infinite block types, as flags.
struct InfSet {
  bool omega = false;
  bool omega_star = false;
  bool zeta = false;

  bool any() const { return omega || omega_star || zeta; }
  int count() const { return int(omega) + int(omega_star) + int(zeta); }
  bool contains(InfType t) const;
  void insert(InfType t);
  InfSet reversed() const { return InfSet{omega_star, omega, zeta}; }
  bool disjoint(const InfSet& o) const {
    return !(omega && o.omega) && !(omega_star && o.omega_star) && !(zeta && o.zeta);
  }
  auto operator<=>(const InfSet&) const = default;
};

// ---------------------------------------------------------------------------
// SizeSet: a family of finite block sizes.
//
// Represented as a sorted explicit set plus an optional unbounded arithmetic
// tail {offset, offset+stride, ...}.  The spec's three variants map to:
//   ExplicitSet       -> no tail
//   Cofinal(m)        -> tail stride 1, offset m
//   Progression(d, r) -> tail stride d, offset r
// The union form also covers grammar inputs like Sh{2, 5..}.
// ---------------------------------------------------------------------------

struct SizeSet {
  struct Tail {
    std::uint64_t stride = 1;  // >= 1
    std::uint64_t offset = 1;  // >= 1
    auto operator<=>(const Tail&) const = default;
  };

  std::vector<std::uint64_t> explicit_sizes;  // sorted, unique, canonical
  std::optional<Tail> tail;

  static SizeSet empty_set() { return SizeSet{}; }
  static SizeSet explicit_set(std::vector<std::uint64_t> sizes);
  static SizeSet cofinal(std::uint64_t min);
  static SizeSet progression(std::uint64_t stride, std::uint64_t offset);

  bool empty() const { return explicit_sizes.empty() && !tail; }
  bool bounded() const { return !tail; }
  bool contains(std::uint64_t n) const;
  // Largest explicit size (0 when none); the bound of the set when bounded.
  std::uint64_t max_bounded() const;
  bool disjoint(const SizeSet& o) const;

  // Absorb explicit members into the tail, rewrite stride-1 tails, and pull
  // adjacent explicit sizes into the tail (e.g. {4} u [5,oo) -> [4,oo)).
  void canonicalize();

  auto operator<=>(const SizeSet&) const = default;
};

// ---------------------------------------------------------------------------
// Components and orderings.
// ---------------------------------------------------------------------------

struct Single {
  BlockType block;
  auto operator<=>(const Single&) const = default;
};

// Sh(A) with A = sizes u infs; A must be non-empty.  sizes may be empty only
// when some infinite type is present.
struct Shuffle {
  SizeSet sizes;
  InfSet infs;

  bool pure_infinite() const { return sizes.empty() && infs.any(); }
  bool contains(const BlockType& t) const;
  auto operator<=>(const Shuffle&) const = default;
};

using Component = std::variant<Single, Shuffle>;

bool operator==(const Component& a, const Component& b);

struct SymbolicOrdering {
  std::vector<Component> components;

  bool empty() const { return components.empty(); }
  std::size_t size() const { return components.size(); }
  const Component& operator[](std::size_t i) const { return components[i]; }

  friend bool operator==(const SymbolicOrdering& a, const SymbolicOrdering& b) {
    return a.components == b.components;
  }
};

SymbolicOrdering ordering(std::vector<Component> comps);
Component single(BlockType t);
Component single_finite(std::uint64_t n);
Component shuffle(SizeSet sizes, InfSet infs = {});

// Concatenation of component sequences (no normalization).
SymbolicOrdering concat(const SymbolicOrdering& a, const SymbolicOrdering& b);

// ---------------------------------------------------------------------------
// Operations.
// ---------------------------------------------------------------------------

// Rewrites to the fixpoint of: adjacent mergeable singles, adjacent identical
// shuffles, and a single absorbed between two identical shuffles containing
// its type.  Scans left to right, applies the first applicable rule, restarts.
SymbolicOrdering normalize(SymbolicOrdering o);

// True when no adjacent pair has a greatest element on the left (finite or
// omega* single) and a least element on the right (finite or omega single).
bool well_formed(const SymbolicOrdering& o);

bool is_sp_homogeneous(const SymbolicOrdering& o);
bool is_weakly_sp_homogeneous(const SymbolicOrdering& o);

struct OrderProfile {
  enum class Card : std::uint8_t { Zero, Finite, Infinite };

  Card cardinality = Card::Zero;
  std::uint64_t cardinality_value = 0;  // meaningful when finite

  bool successivities_infinite = false;
  std::uint64_t successivity_count = 0;  // meaningful when finite

  bool finite_sizes_bounded = true;

  struct UsedType {
    BlockType type;
    bool in_shuffle = false;
  };
  std::vector<UsedType> used_types;      // explicitly representable entries
  bool unbounded_family_in_shuffle = false;

  bool infinite() const { return cardinality == Card::Infinite; }
};

OrderProfile order_profile(const SymbolicOrdering& o);

// Mirror image: reverses the sequence and swaps omega <-> omega*.
SymbolicOrdering reverse(const SymbolicOrdering& o);

}  // namespace spho
