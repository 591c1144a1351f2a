#pragma once

#include <cstdint>
#include <vector>

#include "hornkit/closure.hpp"

namespace hornkit {

namespace detail {

inline void require_exhaustive(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.max_exhaustive || n > 62)
    throw Error(ErrorCode::bound_exceeded, std::string(what) + " scans all subsets of " + std::to_string(n) +
                                               " elements; limit is " + std::to_string(limits.max_exhaustive));
}

// Every subset of an n-element universe, by cardinality then mask order.
template <class F>
void for_each_subset_by_size(std::size_t n, F&& f) {
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      f(AttrSet(n));
      continue;
    }
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (m < limit) {
      f(AttrSet::from_mask(n, m));
      std::uint64_t c = m & (~m + 1), r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

// Closure of s under items[i] for alive[i] != 0, i != skip.
inline AttrSet close_subset(const std::vector<Implication>& items, const std::vector<char>& alive, std::size_t skip,
                            AttrSet s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i == skip || !alive[i]) continue;
      if (items[i].premise.is_subset_of(s) && !items[i].conclusion.is_subset_of(s)) {
        s |= items[i].conclusion;
        changed = true;
      }
    }
  }
  return s;
}

}  // namespace detail

// Pseudoclosed sets in canonical order. P qualifies when c(P) != P and P contains
// c(Q) for every pseudoclosed Q strictly inside it; scanning by cardinality means
// the second test is closure under the implications found so far.
inline std::vector<AttrSet> pseudoclosed_sets(const ClosureSource& src, const Limits& limits = {}) {
  const std::size_t n = src.width();
  detail::require_exhaustive(n, limits, "pseudoclosed search");
  std::vector<AttrSet> found;
  std::vector<AttrSet> closures;
  detail::for_each_subset_by_size(n, [&](const AttrSet& p) {
    for (std::size_t i = 0; i < found.size(); ++i)
      if (found[i].is_subset_of(p) && !closures[i].is_subset_of(p)) return;
    AttrSet cp = src.close(p);
    if (cp == p) return;
    found.push_back(p);
    closures.push_back(std::move(cp));
  });
  return sorted_canonical(std::move(found));
}

// {P -> c(P) : P pseudoclosed}: the minimum-cardinality base.
inline ImplicationSet gd_base(const ClosureSource& src, const Limits& limits = {}) {
  std::vector<Implication> out;
  for (auto& p : pseudoclosed_sets(src, limits)) {
    AttrSet cp = src.close(p);
    out.push_back({std::move(p), std::move(cp)});
  }
  return ImplicationSet(src.universe_ptr(), std::move(out));
}

// Single left-to-right pass; an implication goes when the survivors entail it.
inline ImplicationSet remove_redundancy(const ImplicationSet& sigma) {
  const auto& items = sigma.items();
  std::vector<char> alive(items.size(), 1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    AttrSet c = detail::close_subset(items, alive, i, items[i].premise);
    if (items[i].conclusion.is_subset_of(c)) alive[i] = 0;
  }
  std::vector<Implication> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (alive[i]) out.push_back(items[i]);
  return sigma.with(std::move(out));
}

// Conclusions replaced by full closures, then duplicates and redundancy removed.
// With trim, each survivor A -> c(A) is reported as A -> c(A) \ A.
inline ImplicationSet shock_minimize(const ImplicationSet& sigma, bool trim = false) {
  ImplicationClosure c(sigma);
  std::vector<Implication> full;
  for (const auto& i : sigma) full.push_back({i.premise, c.close(i.premise)});
  ImplicationSet out = remove_redundancy(normalize(sigma.with(std::move(full))));
  if (!trim) return out;
  std::vector<Implication> trimmed;
  for (const auto& i : out) trimmed.push_back({i.premise, i.conclusion - i.premise});
  return out.with(std::move(trimmed));
}

inline bool is_minimum(const ImplicationSet& sigma, const Limits& limits = {}) {
  return normalize(sigma).size() == gd_base(sigma, limits).size();
}

}  // namespace hornkit
