#include "spho/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "spho/errors.hpp"

namespace spho {

Color color_of(const BlockType& t) {
  if (is_finite(t)) return FiniteColor{finite_size(t)};
  switch (std::get<InfType>(t)) {
    case InfType::Omega: return InfColor::W;
    case InfType::OmegaStar: return InfColor::SW;
    case InfType::Zeta: return InfColor::Z;
  }
  return InfColor::Z;
}

BlockType block_of(const Color& c) {
  if (auto* f = std::get_if<FiniteColor>(&c)) return Finite{f->n};
  switch (std::get<InfColor>(c)) {
    case InfColor::W: return InfType::Omega;
    case InfColor::SW: return InfType::OmegaStar;
    case InfColor::Z: return InfType::Zeta;
  }
  return InfType::Zeta;
}

namespace {

// The D(x) of color c has a greatest element iff c is finite or sw, and a
// least element iff c is finite or w.
bool color_has_greatest(const Color& c) {
  if (std::holds_alternative<FiniteColor>(c)) return true;
  return std::get<InfColor>(c) == InfColor::SW;
}
bool color_has_least(const Color& c) {
  if (std::holds_alternative<FiniteColor>(c)) return true;
  return std::get<InfColor>(c) == InfColor::W;
}

}  // namespace

bool satisfies_t_adjacency(const ColoredOrdering& c) {
  for (std::size_t i = 0; i + 1 < c.items.size(); ++i) {
    auto* a = std::get_if<Point>(&c.items[i]);
    auto* b = std::get_if<Point>(&c.items[i + 1]);
    if (a && b && color_has_greatest(a->color) && color_has_least(b->color)) return false;
  }
  return true;
}

std::string validate_tprime_minus(const TPrimeModel& m) {
  std::set<Color> r_used, s_used;
  for (const auto& cell : m.cells) {
    if (auto* r = std::get_if<RCell>(&cell)) {
      if (!r_used.insert(r->color).second)
        return "axiom (5): R-color used more than once";
    } else {
      const auto& s = std::get<SCell>(cell);
      if (s.colors.empty()) return "S-cell needs a non-empty color set";
      for (const auto& c : s.colors)
        if (!s_used.insert(c).second)
          return "axiom (6): S-color used more than once";
    }
  }
  for (const auto& c : r_used)
    if (s_used.count(c)) return "axiom (7): color used both as R-label and S-label";
  return "";
}

std::string validate_tprime(const TPrimeModel& m) {
  std::string base = validate_tprime_minus(m);
  if (!base.empty()) return base;
  for (std::size_t i = 0; i + 1 < m.cells.size(); ++i) {
    auto* a = std::get_if<RCell>(&m.cells[i]);
    auto* b = std::get_if<RCell>(&m.cells[i + 1]);
    if (a && b && color_has_greatest(a->color) && color_has_least(b->color))
      return "axiom (3): adjacent R-cells violate the T adjacency axioms";
  }
  return "";
}

bool tprime_valid(const TPrimeModel& m) { return validate_tprime(m).empty(); }

ColoredOrdering phi(const SymbolicOrdering& o) {
  if (!well_formed(o))
    throw domain_error("phi: input has a forbidden adjacency (un-normalized)");
  ColoredOrdering c;
  c.items.reserve(o.size());
  for (const auto& comp : o.components) {
    if (auto* s = std::get_if<Single>(&comp)) {
      c.items.push_back(Point{color_of(s->block)});
    } else {
      const auto& sh = std::get<Shuffle>(comp);
      c.items.push_back(ColorShuffle{sh.sizes, sh.infs});
    }
  }
  return c;
}

SymbolicOrdering psi(const ColoredOrdering& c) {
  if (!satisfies_t_adjacency(c))
    throw domain_error("psi: input violates a T adjacency axiom");
  SymbolicOrdering o;
  o.components.reserve(c.items.size());
  for (const auto& item : c.items) {
    if (auto* p = std::get_if<Point>(&item)) {
      o.components.push_back(Single{block_of(p->color)});
    } else {
      const auto& sh = std::get<ColorShuffle>(item);
      if (sh.finite_colors.empty() && !sh.inf_colors.any())
        throw domain_error("psi: empty color shuffle");
      o.components.push_back(Shuffle{sh.finite_colors, sh.inf_colors});
    }
  }
  return o;
}

ColoredOrdering expand_g(const TPrimeModel& m) {
  if (auto err = validate_tprime(m); !err.empty())
    throw domain_error("expand_g: invalid T' model: " + err);
  ColoredOrdering c;
  c.items.reserve(m.cells.size());
  for (const auto& cell : m.cells) {
    if (auto* r = std::get_if<RCell>(&cell)) {
      c.items.push_back(Point{r->color});
    } else {
      const auto& s = std::get<SCell>(cell);
      ColorShuffle sh;
      std::vector<std::uint64_t> sizes;
      for (const auto& col : s.colors) {
        if (auto* f = std::get_if<FiniteColor>(&col)) {
          sizes.push_back(f->n);
        } else {
          switch (std::get<InfColor>(col)) {
            case InfColor::W: sh.inf_colors.omega = true; break;
            case InfColor::SW: sh.inf_colors.omega_star = true; break;
            case InfColor::Z: sh.inf_colors.zeta = true; break;
          }
        }
      }
      sh.finite_colors = SizeSet::explicit_set(std::move(sizes));
      c.items.push_back(std::move(sh));
    }
  }
  return c;
}

SymbolicOrdering big_f(const TPrimeModel& m) { return psi(expand_g(m)); }

}  // namespace spho
