#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hornkit/attr_set.hpp"
#include "hornkit/universe.hpp"

namespace hornkit {

struct Implication {
  AttrSet premise;
  AttrSet conclusion;

  // B contained in A: satisfied by every set.
  bool is_trivial() const { return conclusion.is_subset_of(premise); }
  bool is_unit() const { return conclusion.count() == 1; }

  friend bool operator==(const Implication&, const Implication&) = default;
};

inline bool canonical_less(const Implication& a, const Implication& b) {
  if (a.premise != b.premise) return canonical_less(a.premise, b.premise);
  return canonical_less(a.conclusion, b.conclusion);
}

struct Measures {
  std::size_t ca = 0;   // number of implications
  std::size_t s = 0;    // lhs + rhs
  std::size_t lhs = 0;  // total premise size
  std::size_t rhs = 0;  // total conclusion size

  friend bool operator==(const Measures&, const Measures&) = default;
};

// Ordered list of implications over one universe.
class ImplicationSet {
 public:
  ImplicationSet() = default;
  explicit ImplicationSet(UniversePtr universe) : universe_(std::move(universe)) {}
  ImplicationSet(UniversePtr universe, std::vector<Implication> items)
      : universe_(std::move(universe)), items_(std::move(items)) {
    for (const auto& i : items_) {
      require_width(universe_, i.premise);
      require_width(universe_, i.conclusion);
    }
  }

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const Universe& universe() const { return *universe_; }
  std::size_t width() const { return universe_->size(); }

  const std::vector<Implication>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Implication& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  ImplicationSet with(std::vector<Implication> items) const { return ImplicationSet(universe_, std::move(items)); }

  // Builds A -> B from position lists.
  Implication make(std::initializer_list<std::size_t> a, std::initializer_list<std::size_t> b) const {
    return {AttrSet::of(width(), a), AttrSet::of(width(), b)};
  }

 private:
  UniversePtr universe_;
  std::vector<Implication> items_;
};

inline Measures measures(const ImplicationSet& sigma) {
  Measures m;
  m.ca = sigma.size();
  for (const auto& i : sigma) {
    m.lhs += i.premise.count();
    m.rhs += i.conclusion.count();
  }
  m.s = m.lhs + m.rhs;
  return m;
}

// A -> B becomes A -> b for each b in B; empty conclusions vanish.
inline ImplicationSet unit_expand(const ImplicationSet& sigma) {
  std::vector<Implication> out;
  for (const auto& i : sigma) {
    i.conclusion.for_each([&](std::size_t b) {
      AttrSet c(sigma.width());
      c.insert(b);
      out.push_back({i.premise, std::move(c)});
    });
  }
  return sigma.with(std::move(out));
}

// Merges implications sharing a premise; first-occurrence order.
inline ImplicationSet aggregate(const ImplicationSet& sigma) {
  std::vector<Implication> out;
  std::unordered_map<AttrSet, std::size_t, AttrSetHash> slot;
  for (const auto& i : sigma) {
    auto [it, fresh] = slot.emplace(i.premise, out.size());
    if (fresh)
      out.push_back(i);
    else
      out[it->second].conclusion |= i.conclusion;
  }
  return sigma.with(std::move(out));
}

// Drops trivial implications and exact duplicates, keeping order.
inline ImplicationSet normalize(const ImplicationSet& sigma) {
  std::vector<Implication> out;
  for (const auto& i : sigma) {
    if (i.is_trivial()) continue;
    if (std::find(out.begin(), out.end(), i) != out.end()) continue;
    out.push_back(i);
  }
  return sigma.with(std::move(out));
}

inline ImplicationSet sorted_canonical(const ImplicationSet& sigma) {
  std::vector<Implication> out(sigma.begin(), sigma.end());
  std::sort(out.begin(), out.end(), [](const Implication& a, const Implication& b) { return canonical_less(a, b); });
  return sigma.with(std::move(out));
}

// Order-insensitive comparison of the underlying sets of implications.
inline bool same_implications(const ImplicationSet& a, const ImplicationSet& b) {
  if (!same_universe(a.universe_ptr(), b.universe_ptr())) return false;
  auto sa = sorted_canonical(normalize(a)), sb = sorted_canonical(normalize(b));
  return sa.items() == sb.items();
}

}  // namespace hornkit
