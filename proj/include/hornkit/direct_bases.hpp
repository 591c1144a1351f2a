#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hornkit/canonical_bases.hpp"
#include "hornkit/closure.hpp"

namespace hornkit {

// stems(e): the minimal U with e in c(U) and e not in U.
class StemTable {
 public:
  StemTable(UniversePtr u, std::vector<std::vector<AttrSet>> stems) : universe_(std::move(u)), stems_(std::move(stems)) {
    std::map<AttrSet, AttrSet, CanonicalLess> roots;
    for (std::size_t e = 0; e < stems_.size(); ++e) {
      stems_[e] = sorted_canonical(std::move(stems_[e]));
      for (const auto& x : stems_[e]) {
        auto it = roots.try_emplace(x, AttrSet(universe_->size())).first;
        it->second.insert(e);
      }
    }
    for (auto& [x, r] : roots) entries_.push_back({x, r});
  }

  struct Entry {
    AttrSet stem;
    AttrSet roots;
  };

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  std::size_t width() const { return universe_->size(); }

  const std::vector<AttrSet>& stems(std::size_t e) const {
    if (e >= stems_.size()) throw Error(ErrorCode::element_out_of_range, std::to_string(e));
    return stems_[e];
  }

  // Distinct stems with their root sets, canonical order of stems.
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  AttrSet roots(const AttrSet& x) const {
    for (const auto& en : entries_)
      if (en.stem == x) return en.roots;
    return AttrSet(width());
  }

 private:
  UniversePtr universe_;
  std::vector<std::vector<AttrSet>> stems_;
  std::vector<Entry> entries_;
};

// Cardinality-layered scan of subsets of E \ (c(empty) u {e}); supersets of stems
// already found are skipped, so every hit is minimal.
inline StemTable stem_table(const ClosureSource& src, const Limits& limits = {}) {
  const std::size_t n = src.width();
  detail::require_exhaustive(n, limits, "stem search");
  const AttrSet bottom = src.close(AttrSet(n));
  std::vector<std::vector<AttrSet>> stems(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (bottom.contains(e)) {
      stems[e].push_back(AttrSet(n));
      continue;
    }
    std::vector<std::size_t> pool;
    for (std::size_t x = 0; x < n; ++x)
      if (x != e && !bottom.contains(x)) pool.push_back(x);
    detail::for_each_subset_by_size(pool.size(), [&](const AttrSet& idx) {
      AttrSet u(n);
      idx.for_each([&](std::size_t b) { u.insert(pool[b]); });
      for (const auto& s : stems[e])
        if (s.is_subset_of(u)) return;
      if (src.close(u).contains(e)) stems[e].push_back(std::move(u));
    });
  }
  return StemTable(src.universe_ptr(), std::move(stems));
}

// {X -> roots(X)}: the canonical direct base.
inline ImplicationSet canonical_direct(const StemTable& t) {
  std::vector<Implication> out;
  for (const auto& en : t.entries()) out.push_back({en.stem, en.roots});
  return ImplicationSet(t.universe_ptr(), std::move(out));
}

inline ImplicationSet canonical_direct(const ClosureSource& src, const Limits& limits = {}) {
  return canonical_direct(stem_table(src, limits));
}

struct StemClass {
  AttrSet stem;
  AttrSet roots;
  AttrSet closure;
  bool strong = false;           // roots == c(X) \ X
  AttrSet closure_minimal_for;  // roots e for which c(X) is minimal among c(stems(e))
};

inline std::vector<StemClass> classify_stems(const ClosureSource& src, const StemTable& t) {
  require_same_universe(src.universe_ptr(), t.universe_ptr());
  std::map<AttrSet, AttrSet, CanonicalLess> closure_of;
  for (const auto& en : t.entries()) closure_of.emplace(en.stem, src.close(en.stem));
  std::vector<StemClass> out;
  for (const auto& en : t.entries()) {
    StemClass c{en.stem, en.roots, closure_of.at(en.stem), false, AttrSet(t.width())};
    c.strong = c.roots == c.closure - c.stem;
    en.roots.for_each([&](std::size_t e) {
      bool minimal = std::none_of(t.stems(e).begin(), t.stems(e).end(), [&](const AttrSet& u) {
        return closure_of.at(u).is_proper_subset_of(c.closure);
      });
      if (minimal) c.closure_minimal_for.insert(e);
    });
    out.push_back(std::move(c));
  }
  return out;
}

// A unit base meant to be applied in a single ordered pass; the first
// binary_count items are the binary part.
struct OrderedBase {
  ImplicationSet items;
  std::size_t binary_count = 0;
};

// Binary unit implicates x -> y, then the non-binary unit implicates X -> e that
// no other stem of e strictly refines, where U refines X when each u in U lies
// below some x in X (u <= x iff x -> u is a binary implicate, or u == x).
inline OrderedBase d_basis(const ClosureSource& src, const Limits& limits = {}) {
  StemTable t = stem_table(src, limits);
  const std::size_t n = t.width();
  std::vector<AttrSet> below(n, AttrSet(n));  // below[x] = {y : y <= x}
  for (std::size_t x = 0; x < n; ++x) below[x].insert(x);
  std::vector<Implication> binary, rest;
  for (const auto& en : t.entries()) {
    if (en.stem.count() != 1) continue;
    std::size_t x = en.stem.first();
    below[x] |= en.roots;
    en.roots.for_each([&](std::size_t y) { binary.push_back({en.stem, AttrSet::of(n, {y})}); });
  }
  auto refines = [&](const AttrSet& u, const AttrSet& x) {
    AttrSet down(n);
    x.for_each([&](std::size_t a) { down |= below[a]; });
    return u.is_subset_of(down);
  };
  for (const auto& en : t.entries()) {
    if (en.stem.count() == 1) continue;
    en.roots.for_each([&](std::size_t e) {
      bool minimal = std::none_of(t.stems(e).begin(), t.stems(e).end(), [&](const AttrSet& u) {
        return u != en.stem && refines(u, en.stem) && !refines(en.stem, u);
      });
      if (minimal) rest.push_back({en.stem, AttrSet::of(n, {e})});
    });
  }
  auto by_canon = [](const Implication& a, const Implication& b) { return canonical_less(a, b); };
  std::sort(binary.begin(), binary.end(), by_canon);
  std::sort(rest.begin(), rest.end(), by_canon);
  OrderedBase out{ImplicationSet(t.universe_ptr()), binary.size()};
  binary.insert(binary.end(), rest.begin(), rest.end());
  out.items = ImplicationSet(t.universe_ptr(), std::move(binary));
  return out;
}

// One pass over the implications in order.
inline AttrSet ordered_close(const ImplicationSet& ordered, const AttrSet& s) {
  require_width(ordered.universe_ptr(), s);
  AttrSet cur = s;
  for (const auto& i : ordered)
    if (i.premise.is_subset_of(cur)) cur |= i.conclusion;
  return cur;
}

// With verify, the result is checked against the full fixpoint closure.
inline AttrSet ordered_close(const OrderedBase& base, const AttrSet& s, bool verify = false) {
  AttrSet out = ordered_close(base.items, s);
  if (verify && out != close(base.items, s))
    throw Error(ErrorCode::verification_failed, "single pass differs from the closure");
  return out;
}

}  // namespace hornkit
