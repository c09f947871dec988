#include "spho/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "spho/errors.hpp"

namespace spho {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw parse_error(std::string("expected '") + c + "' in " + what, i);
  }
  bool eat_word(const char* w) {
    skip_ws();
    std::size_t j = i, k = 0;
    while (w[k] && j < s.size() && s[j] == w[k]) ++j, ++k;
    if (w[k]) return false;
    // Words must not run into an identifier character.
    if (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])))) return false;
    i = j;
    return true;
  }
  std::uint64_t integer() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected an integer", i);
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + std::uint64_t(s[i] - '0');
      if (v > 1'000'000'000ULL) throw parse_error("integer too large", i);
      ++i;
    }
    if (v == 0) throw parse_error("InvalidSize: integers must be >= 1", i);
    return v;
  }
};

// One "type" entry inside Sh{...}.
void parse_shuffle_type(Cursor& c, SizeSet& sizes, InfSet& infs) {
  if (c.eat_word("w*") || c.eat_word("sw")) {
    infs.omega_star = true;
    return;
  }
  if (c.eat_word("w")) {
    // Allow "w*" written without word break handling above.
    if (c.eat('*')) {
      infs.omega_star = true;
    } else {
      infs.omega = true;
    }
    return;
  }
  if (c.eat_word("z")) {
    infs.zeta = true;
    return;
  }
  if (c.eat_word("ap")) {
    c.expect('(', "ap(stride, offset)");
    std::uint64_t d = c.integer();
    c.expect(',', "ap(stride, offset)");
    std::uint64_t r = c.integer();
    c.expect(')', "ap(stride, offset)");
    if (sizes.tail) throw parse_error("at most one unbounded size family per shuffle", c.i);
    sizes.tail = SizeSet::Tail{d, r};
    return;
  }
  std::uint64_t n = c.integer();
  c.skip_ws();
  if (c.i + 1 < c.s.size() && c.s[c.i] == '.' && c.s[c.i + 1] == '.') {
    c.i += 2;
    if (sizes.tail) throw parse_error("at most one unbounded size family per shuffle", c.i);
    sizes.tail = SizeSet::Tail{1, n};
    return;
  }
  sizes.explicit_sizes.push_back(n);
}

Component parse_component(Cursor& c) {
  if (c.eat_word("Sh")) {
    c.expect('{', "shuffle");
    if (c.eat('}')) throw parse_error("EmptyShuffle: Sh{} is not a valid shuffle", c.i);
    SizeSet sizes;
    InfSet infs;
    parse_shuffle_type(c, sizes, infs);
    while (c.eat(',')) parse_shuffle_type(c, sizes, infs);
    c.expect('}', "shuffle");
    sizes.canonicalize();
    return shuffle(std::move(sizes), infs);
  }
  if (c.eat_word("w*") || c.eat_word("sw")) return single(InfType::OmegaStar);
  if (c.eat_word("w")) {
    if (c.eat('*')) return single(InfType::OmegaStar);
    return single(InfType::Omega);
  }
  if (c.eat_word("z")) return single(InfType::Zeta);
  return single_finite(c.integer());
}

}  // namespace

SymbolicOrdering parse_ordering(const std::string& text) {
  Cursor c{text};
  if (c.eat_word("empty")) {
    if (!c.done()) throw parse_error("trailing input after 'empty'", c.i);
    return {};
  }
  SymbolicOrdering o;
  o.components.push_back(parse_component(c));
  while (c.eat('+')) o.components.push_back(parse_component(c));
  if (!c.done()) throw parse_error("trailing input", c.i);
  return o;
}

namespace {

void print_size_set(std::ostringstream& out, const SizeSet& s, bool& first) {
  auto sep = [&] {
    if (!first) out << ",";
    first = false;
  };
  for (auto n : s.explicit_sizes) {
    sep();
    out << n;
  }
  if (s.tail) {
    sep();
    if (s.tail->stride == 1)
      out << s.tail->offset << "..";
    else
      out << "ap(" << s.tail->stride << "," << s.tail->offset << ")";
  }
}

void print_inf_set(std::ostringstream& out, const InfSet& infs, bool& first) {
  auto sep = [&] {
    if (!first) out << ",";
    first = false;
  };
  if (infs.omega) {
    sep();
    out << "w";
  }
  if (infs.omega_star) {
    sep();
    out << "w*";
  }
  if (infs.zeta) {
    sep();
    out << "z";
  }
}

}  // namespace

std::string print_ordering(const SymbolicOrdering& o) {
  if (o.empty()) return "empty";
  std::ostringstream out;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) out << " + ";
    if (auto* s = std::get_if<Single>(&o[i])) {
      if (is_finite(s->block)) {
        out << finite_size(s->block);
      } else {
        switch (std::get<InfType>(s->block)) {
          case InfType::Omega: out << "w"; break;
          case InfType::OmegaStar: out << "w*"; break;
          case InfType::Zeta: out << "z"; break;
        }
      }
    } else {
      const auto& sh = std::get<Shuffle>(o[i]);
      out << "Sh{";
      bool first = true;
      print_size_set(out, sh.sizes, first);
      print_inf_set(out, sh.infs, first);
      out << "}";
    }
  }
  return out.str();
}

// --- models ------------------------------------------------------------------

namespace {

Color parse_color(Cursor& c) {
  if (c.eat_word("w*") || c.eat_word("sw")) return InfColor::SW;
  if (c.eat_word("w")) {
    if (c.eat('*')) return InfColor::SW;
    return InfColor::W;
  }
  if (c.eat_word("z")) return InfColor::Z;
  return FiniteColor{c.integer()};
}

}  // namespace

TPrimeModel parse_model(const std::string& text) {
  Cursor c{text};
  TPrimeModel m;
  if (c.eat_word("empty")) {
    if (!c.done()) throw parse_error("trailing input after 'empty'", c.i);
    return m;
  }
  while (!c.done()) {
    if (c.eat_word("R")) {
      m.cells.push_back(RCell{parse_color(c)});
    } else if (c.eat_word("S")) {
      c.expect('{', "S-cell");
      SCell cell;
      cell.colors.push_back(parse_color(c));
      while (c.eat(',')) cell.colors.push_back(parse_color(c));
      c.expect('}', "S-cell");
      std::sort(cell.colors.begin(), cell.colors.end());
      cell.colors.erase(std::unique(cell.colors.begin(), cell.colors.end()),
                        cell.colors.end());
      m.cells.push_back(std::move(cell));
    } else {
      throw parse_error("expected R<color> or S{...}", c.i);
    }
  }
  return m;
}

std::string print_color(const Color& c) {
  if (auto* f = std::get_if<FiniteColor>(&c)) return std::to_string(f->n);
  switch (std::get<InfColor>(c)) {
    case InfColor::W: return "w";
    case InfColor::SW: return "w*";
    case InfColor::Z: return "z";
  }
  return "?";
}

std::string print_model(const TPrimeModel& m) {
  if (m.cells.empty()) return "empty";
  std::ostringstream out;
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    if (i) out << " ";
    if (auto* r = std::get_if<RCell>(&m.cells[i])) {
      out << "R" << print_color(r->color);
    } else {
      const auto& s = std::get<SCell>(m.cells[i]);
      out << "S{";
      for (std::size_t j = 0; j < s.colors.size(); ++j) {
        if (j) out << ",";
        out << print_color(s.colors[j]);
      }
      out << "}";
    }
  }
  return out.str();
}

std::string print_colored(const ColoredOrdering& c) {
  if (c.items.empty()) return "empty";
  std::ostringstream out;
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    if (i) out << " + ";
    if (auto* p = std::get_if<Point>(&c.items[i])) {
      if (auto* f = std::get_if<FiniteColor>(&p->color))
        out << "c" << f->n;
      else
        out << print_color(p->color);
    } else {
      const auto& sh = std::get<ColorShuffle>(c.items[i]);
      out << "Sh_c{";
      bool first = true;
      auto sep = [&] {
        if (!first) out << ",";
        first = false;
      };
      for (auto n : sh.finite_colors.explicit_sizes) {
        sep();
        out << "c" << n;
      }
      if (sh.finite_colors.tail) {
        sep();
        if (sh.finite_colors.tail->stride == 1)
          out << "c" << sh.finite_colors.tail->offset << "..";
        else
          out << "c.ap(" << sh.finite_colors.tail->stride << ","
              << sh.finite_colors.tail->offset << ")";
      }
      if (sh.inf_colors.omega) {
        sep();
        out << "w";
      }
      if (sh.inf_colors.omega_star) {
        sep();
        out << "w*";
      }
      if (sh.inf_colors.zeta) {
        sep();
        out << "z";
      }
      out << "}";
    }
  }
  return out.str();
}

}  // namespace spho
