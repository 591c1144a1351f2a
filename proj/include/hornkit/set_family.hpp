#pragma once

#include <algorithm>
#include <vector>

#include "hornkit/attr_set.hpp"
#include "hornkit/universe.hpp"

namespace hornkit {

// Finite family of subsets of one universe.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(UniversePtr universe) : universe_(std::move(universe)) {}
  SetFamily(UniversePtr universe, std::vector<AttrSet> sets) : universe_(std::move(universe)), sets_(std::move(sets)) {
    for (const auto& s : sets_) require_width(universe_, s);
  }

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const Universe& universe() const { return *universe_; }
  std::size_t width() const { return universe_->size(); }

  const std::vector<AttrSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const AttrSet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  // Quadratic; computed on request rather than stored.
  bool is_antichain() const {
    for (std::size_t i = 0; i < sets_.size(); ++i)
      for (std::size_t j = 0; j < sets_.size(); ++j)
        if (i != j && sets_[i].is_subset_of(sets_[j])) return false;
    return true;
  }

  bool contains(const AttrSet& s) const { return std::find(sets_.begin(), sets_.end(), s) != sets_.end(); }

  SetFamily with(std::vector<AttrSet> sets) const { return SetFamily(universe_, std::move(sets)); }

 private:
  UniversePtr universe_;
  std::vector<AttrSet> sets_;
};

inline std::vector<AttrSet> sorted_canonical(std::vector<AttrSet> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

inline SetFamily sorted_canonical(const SetFamily& f) { return f.with(sorted_canonical(f.sets())); }

// Inclusion-minimal members, canonical order, duplicates removed.
inline std::vector<AttrSet> minimal_members(std::vector<AttrSet> sets) {
  sets = sorted_canonical(std::move(sets));
  std::vector<AttrSet> out;
  for (auto& s : sets) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const AttrSet& m) { return m.is_subset_of(s); });
    if (!dominated) out.push_back(std::move(s));
  }
  return out;
}

// Inclusion-maximal members, canonical order, duplicates removed.
inline std::vector<AttrSet> maximal_members(std::vector<AttrSet> sets) {
  sets = sorted_canonical(std::move(sets));
  std::vector<AttrSet> out;
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const AttrSet& m) { return it->is_subset_of(m); });
    if (!dominated) out.push_back(*it);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline SetFamily minimal_members(const SetFamily& f) { return f.with(minimal_members(f.sets())); }
inline SetFamily maximal_members(const SetFamily& f) { return f.with(maximal_members(f.sets())); }

inline bool same_sets(const SetFamily& a, const SetFamily& b) {
  return same_universe(a.universe_ptr(), b.universe_ptr()) && sorted_canonical(a.sets()) == sorted_canonical(b.sets());
}

}  // namespace hornkit
