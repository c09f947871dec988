#include "spho/order.hpp"

#include <algorithm>
#include <numeric>

#include "spho/errors.hpp"

namespace spho {

bool is_finite(const BlockType& t) { return std::holds_alternative<Finite>(t); }

std::uint64_t finite_size(const BlockType& t) { return std::get<Finite>(t).n; }

BlockType reversed(const BlockType& t) {
  if (is_finite(t)) return t;
  switch (std::get<InfType>(t)) {
    case InfType::Omega: return InfType::OmegaStar;
    case InfType::OmegaStar: return InfType::Omega;
    case InfType::Zeta: return InfType::Zeta;
  }
  return t;
}

bool InfSet::contains(InfType t) const {
  switch (t) {
    case InfType::Omega: return omega;
    case InfType::OmegaStar: return omega_star;
    case InfType::Zeta: return zeta;
  }
  return false;
}

void InfSet::insert(InfType t) {
  switch (t) {
    case InfType::Omega: omega = true; break;
    case InfType::OmegaStar: omega_star = true; break;
    case InfType::Zeta: zeta = true; break;
  }
}

// --- SizeSet ---------------------------------------------------------------

SizeSet SizeSet::explicit_set(std::vector<std::uint64_t> sizes) {
  SizeSet s;
  s.explicit_sizes = std::move(sizes);
  s.canonicalize();
  return s;
}

SizeSet SizeSet::cofinal(std::uint64_t min) {
  if (min == 0) throw domain_error("cofinal size set needs min >= 1");
  SizeSet s;
  s.tail = Tail{1, min};
  return s;
}

SizeSet SizeSet::progression(std::uint64_t stride, std::uint64_t offset) {
  if (stride == 0 || offset == 0)
    throw domain_error("progression needs stride >= 1 and offset >= 1");
  SizeSet s;
  s.tail = Tail{stride, offset};
  s.canonicalize();
  return s;
}

bool SizeSet::contains(std::uint64_t n) const {
  if (std::binary_search(explicit_sizes.begin(), explicit_sizes.end(), n)) return true;
  if (tail && n >= tail->offset && (n - tail->offset) % tail->stride == 0) return true;
  return false;
}

std::uint64_t SizeSet::max_bounded() const {
  return explicit_sizes.empty() ? 0 : explicit_sizes.back();
}

void SizeSet::canonicalize() {
  for (auto n : explicit_sizes)
    if (n == 0) throw domain_error("block sizes must be >= 1");
  std::sort(explicit_sizes.begin(), explicit_sizes.end());
  explicit_sizes.erase(std::unique(explicit_sizes.begin(), explicit_sizes.end()),
                       explicit_sizes.end());
  if (!tail) return;
  if (tail->stride == 0 || tail->offset == 0)
    throw domain_error("progression needs stride >= 1 and offset >= 1");
  // Drop explicit members already in the tail.
  std::erase_if(explicit_sizes, [&](std::uint64_t n) {
    return n >= tail->offset && (n - tail->offset) % tail->stride == 0;
  });
  // Pull explicit sizes one stride below the tail into it.
  while (!explicit_sizes.empty() && tail->offset > tail->stride &&
         explicit_sizes.back() == tail->offset - tail->stride) {
    tail->offset -= tail->stride;
    explicit_sizes.pop_back();
  }
}

bool SizeSet::disjoint(const SizeSet& o) const {
  for (auto n : explicit_sizes)
    if (o.contains(n)) return false;
  for (auto n : o.explicit_sizes)
    if (contains(n)) return false;
  if (tail && o.tail) {
    // Arithmetic tails meet iff offsets agree modulo gcd of strides; any
    // congruence solution has representatives above both offsets.
    std::uint64_t g = std::gcd(tail->stride, o.tail->stride);
    if (tail->offset % g == o.tail->offset % g) return false;
  }
  return true;
}

// --- Components ------------------------------------------------------------

bool Shuffle::contains(const BlockType& t) const {
  if (is_finite(t)) return sizes.contains(finite_size(t));
  return infs.contains(std::get<InfType>(t));
}

bool operator==(const Component& a, const Component& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<Single>(a))
    return std::get<Single>(a) == std::get<Single>(b);
  return std::get<Shuffle>(a) == std::get<Shuffle>(b);
}

SymbolicOrdering ordering(std::vector<Component> comps) {
  return SymbolicOrdering{std::move(comps)};
}

Component single(BlockType t) {
  if (is_finite(t) && finite_size(t) == 0) throw domain_error("finite block needs n >= 1");
  return Single{t};
}

Component single_finite(std::uint64_t n) { return single(Finite{n}); }

Component shuffle(SizeSet sizes, InfSet infs) {
  sizes.canonicalize();
  if (sizes.empty() && !infs.any()) throw domain_error("shuffle set must be non-empty");
  return Shuffle{std::move(sizes), infs};
}

SymbolicOrdering concat(const SymbolicOrdering& a, const SymbolicOrdering& b) {
  SymbolicOrdering r = a;
  r.components.insert(r.components.end(), b.components.begin(), b.components.end());
  return r;
}

// --- normalize -------------------------------------------------------------

namespace {

const Single* as_single(const Component& c) { return std::get_if<Single>(&c); }
const Shuffle* as_shuffle(const Component& c) { return std::get_if<Shuffle>(&c); }

// Forced block arithmetic on adjacent singles.
std::optional<Single> merge_singles(const Single& a, const Single& b) {
  if (is_finite(a.block) && is_finite(b.block))
    return Single{Finite{finite_size(a.block) + finite_size(b.block)}};
  if (is_finite(a.block) && b.block == BlockType{InfType::Omega})
    return Single{InfType::Omega};
  if (a.block == BlockType{InfType::OmegaStar} && is_finite(b.block))
    return Single{InfType::OmegaStar};
  if (a.block == BlockType{InfType::OmegaStar} && b.block == BlockType{InfType::Omega})
    return Single{InfType::Zeta};
  return std::nullopt;
}

}  // namespace

SymbolicOrdering normalize(SymbolicOrdering o) {
  auto& cs = o.components;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cs.size() && !changed; ++i) {
      if (i + 1 < cs.size()) {
        if (auto* a = as_single(cs[i])) {
          if (auto* b = as_single(cs[i + 1])) {
            if (auto m = merge_singles(*a, *b)) {
              cs[i] = *m;
              cs.erase(cs.begin() + i + 1);
              changed = true;
              continue;
            }
          }
        }
        if (auto* a = as_shuffle(cs[i])) {
          if (auto* b = as_shuffle(cs[i + 1]); b && *a == *b) {
            cs.erase(cs.begin() + i + 1);
            changed = true;
            continue;
          }
        }
      }
      if (i + 2 < cs.size()) {
        auto* a = as_shuffle(cs[i]);
        auto* m = as_single(cs[i + 1]);
        auto* b = as_shuffle(cs[i + 2]);
        if (a && m && b && *a == *b && a->contains(m->block)) {
          cs.erase(cs.begin() + i + 1, cs.begin() + i + 3);
          changed = true;
        }
      }
    }
  }
  return o;
}

bool well_formed(const SymbolicOrdering& o) {
  auto has_greatest = [](const Component& c) {
    auto* s = as_single(c);
    return s && (is_finite(s->block) || s->block == BlockType{InfType::OmegaStar});
  };
  auto has_least = [](const Component& c) {
    auto* s = as_single(c);
    return s && (is_finite(s->block) || s->block == BlockType{InfType::Omega});
  };
  for (std::size_t i = 0; i + 1 < o.size(); ++i)
    if (has_greatest(o[i]) && has_least(o[i + 1])) return false;
  return true;
}

// --- deciders ----------------------------------------------------------------

namespace {

// Disjointness of the type families of two components.
bool families_disjoint(const Component& a, const Component& b) {
  if (auto* sa = as_single(a)) {
    if (auto* sb = as_single(b)) return !(sa->block == sb->block);
    return !as_shuffle(b)->contains(sa->block);
  }
  if (auto* sb = as_single(b)) return !as_shuffle(a)->contains(sb->block);
  const auto& A = *as_shuffle(a);
  const auto& B = *as_shuffle(b);
  return A.sizes.disjoint(B.sizes) && A.infs.disjoint(B.infs);
}

}  // namespace

bool is_sp_homogeneous(const SymbolicOrdering& raw) {
  SymbolicOrdering o = normalize(raw);
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = i + 1; j < o.size(); ++j)
      if (!families_disjoint(o[i], o[j])) return false;
  return true;
}

// A single block anywhere may serve as an exceptional point, and a shuffle
// splits at any block of its own family (Sh(A) = Sh(A) + P + Sh(A)).  What
// cannot be separated is the junction of two adjacent shuffles, so weak
// homogeneity reduces to disjointness of adjacent shuffle pairs.
bool is_weakly_sp_homogeneous(const SymbolicOrdering& raw) {
  SymbolicOrdering o = normalize(raw);
  for (std::size_t i = 0; i + 1 < o.size(); ++i) {
    auto* a = as_shuffle(o[i]);
    auto* b = as_shuffle(o[i + 1]);
    if (a && b && !families_disjoint(o[i], o[i + 1])) return false;
  }
  return true;
}

OrderProfile order_profile(const SymbolicOrdering& o) {
  OrderProfile p;
  bool all_finite_singles = true;
  std::uint64_t card = 0;
  std::uint64_t succ = 0;

  auto note_type = [&](BlockType t, bool in_shuffle) {
    for (auto& u : p.used_types)
      if (u.type == t && u.in_shuffle == in_shuffle) return;
    p.used_types.push_back({t, in_shuffle});
  };

  for (const auto& c : o.components) {
    if (auto* s = std::get_if<Single>(&c)) {
      note_type(s->block, false);
      if (is_finite(s->block)) {
        card += finite_size(s->block);
        succ += finite_size(s->block) - 1;
      } else {
        all_finite_singles = false;
        p.successivities_infinite = true;
      }
    } else {
      const auto& sh = std::get<Shuffle>(c);
      all_finite_singles = false;
      if (!sh.sizes.bounded()) {
        p.finite_sizes_bounded = false;
        p.unbounded_family_in_shuffle = true;
        p.successivities_infinite = true;
      }
      for (auto n : sh.sizes.explicit_sizes) {
        note_type(Finite{n}, true);
        if (n >= 2) p.successivities_infinite = true;
      }
      if (sh.infs.omega) note_type(InfType::Omega, true);
      if (sh.infs.omega_star) note_type(InfType::OmegaStar, true);
      if (sh.infs.zeta) note_type(InfType::Zeta, true);
      if (sh.infs.any()) p.successivities_infinite = true;
    }
  }

  if (o.empty()) {
    p.cardinality = OrderProfile::Card::Zero;
  } else if (all_finite_singles) {
    p.cardinality = OrderProfile::Card::Finite;
    p.cardinality_value = card;
  } else {
    p.cardinality = OrderProfile::Card::Infinite;
  }
  if (!p.successivities_infinite) p.successivity_count = succ;
  return p;
}

SymbolicOrdering reverse(const SymbolicOrdering& o) {
  SymbolicOrdering r;
  r.components.reserve(o.size());
  for (auto it = o.components.rbegin(); it != o.components.rend(); ++it) {
    if (auto* s = std::get_if<Single>(&*it)) {
      r.components.push_back(Single{reversed(s->block)});
    } else {
      auto sh = std::get<Shuffle>(*it);
      sh.infs = sh.infs.reversed();
      r.components.push_back(sh);
    }
  }
  return r;
}

}  // namespace spho
