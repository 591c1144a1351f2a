#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "hornkit/attr_set.hpp"
#include "hornkit/error.hpp"
#include "hornkit/implication.hpp"
#include "hornkit/limits.hpp"
#include "hornkit/set_family.hpp"

namespace hornkit {

enum class Layout { automatic, row_wise, vertical };

// The column layout pays off once implications outnumber elements this many times over.
inline constexpr std::size_t vertical_ratio = 4;

// Closure operator of an implication set, with a precomputed layout.
class ImplicationClosure {
 public:
  explicit ImplicationClosure(ImplicationSet sigma, Layout layout = Layout::automatic) : sigma_(std::move(sigma)) {
    if (layout == Layout::automatic)
      layout = sigma_.size() > vertical_ratio * sigma_.width() ? Layout::vertical : Layout::row_wise;
    layout_ = layout;
    if (layout_ == Layout::vertical) build_columns();
  }

  const ImplicationSet& sigma() const noexcept { return sigma_; }
  Layout layout() const noexcept { return layout_; }

  // One application of every implication whose premise lies in s.
  AttrSet step(const AttrSet& s) const {
    require_width(sigma_.universe_ptr(), s);
    AttrSet out = s;
    for (const auto& i : sigma_)
      if (i.premise.is_subset_of(s)) out |= i.conclusion;
    return out;
  }

  AttrSet close(const AttrSet& s) const {
    require_width(sigma_.universe_ptr(), s);
    return layout_ == Layout::vertical ? close_vertical(s) : close_rows(s);
  }

 private:
  AttrSet close_rows(const AttrSet& s) const {
    AttrSet cur = s;
    std::vector<char> fired(sigma_.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < sigma_.size(); ++i) {
        if (fired[i] || !sigma_[i].premise.is_subset_of(cur)) continue;
        fired[i] = 1;
        if (!sigma_[i].conclusion.is_subset_of(cur)) {
          cur |= sigma_[i].conclusion;
          changed = true;
        }
      }
    }
    return cur;
  }

  // Implications blocked by a missing element are read off its column.
  AttrSet close_vertical(const AttrSet& s) const {
    const std::size_t n = sigma_.size();
    AttrSet cur = s;
    AttrSet fired(n);
    while (true) {
      AttrSet ready = AttrSet::full(n);
      for (std::size_t j = 0; j < columns_.size(); ++j)
        if (!cur.contains(j)) ready -= columns_[j];
      ready -= fired;
      if (ready.empty()) break;
      fired |= ready;
      AttrSet next = cur;
      ready.for_each([&](std::size_t i) { next |= sigma_[i].conclusion; });
      if (next == cur) break;
      cur = std::move(next);
    }
    return cur;
  }

  void build_columns() {
    columns_.assign(sigma_.width(), AttrSet(sigma_.size()));
    for (std::size_t i = 0; i < sigma_.size(); ++i)
      sigma_[i].premise.for_each([&](std::size_t j) { columns_[j].insert(i); });
  }

  ImplicationSet sigma_;
  Layout layout_ = Layout::row_wise;
  std::vector<AttrSet> columns_;
};

// Smallest member of f containing s; the full set when no member does.
inline AttrSet close_family(const SetFamily& f, const AttrSet& s) {
  require_width(f.universe_ptr(), s);
  AttrSet out = AttrSet::full(f.width());
  for (const auto& m : f)
    if (s.is_subset_of(m)) out &= m;
  return out;
}

// A closure operator given either by implications or by a generating family.
class ClosureSource {
 public:
  ClosureSource(const ImplicationSet& sigma) : impl_(ImplicationClosure(sigma)) {}
  ClosureSource(const ImplicationClosure& c) : impl_(c) {}
  ClosureSource(const SetFamily& family) : impl_(family) {}

  const UniversePtr& universe_ptr() const {
    if (auto* c = std::get_if<ImplicationClosure>(&impl_)) return c->sigma().universe_ptr();
    return std::get<SetFamily>(impl_).universe_ptr();
  }
  const Universe& universe() const { return *universe_ptr(); }
  std::size_t width() const { return universe().size(); }

  bool is_family() const noexcept { return std::holds_alternative<SetFamily>(impl_); }
  const SetFamily* family() const noexcept { return std::get_if<SetFamily>(&impl_); }
  const ImplicationSet* sigma() const noexcept {
    auto* c = std::get_if<ImplicationClosure>(&impl_);
    return c ? &c->sigma() : nullptr;
  }

  AttrSet close(const AttrSet& s) const {
    if (auto* c = std::get_if<ImplicationClosure>(&impl_)) return c->close(s);
    return close_family(std::get<SetFamily>(impl_), s);
  }

 private:
  std::variant<ImplicationClosure, SetFamily> impl_;
};

inline AttrSet step(const ImplicationSet& sigma, const AttrSet& s) { return ImplicationClosure(sigma).step(s); }

inline AttrSet close(const ImplicationSet& sigma, const AttrSet& s, Layout layout = Layout::automatic) {
  return ImplicationClosure(sigma, layout).close(s);
}

inline AttrSet close(const ClosureSource& src, const AttrSet& s) { return src.close(s); }

// Successive rounds s, step(s), step(step(s)), ... up to the fixpoint.
struct ClosureTrace {
  std::vector<AttrSet> rounds;
  const AttrSet& result() const { return rounds.back(); }
};

inline ClosureTrace close_trace(const ImplicationSet& sigma, const AttrSet& s) {
  ImplicationClosure c(sigma, Layout::row_wise);
  ClosureTrace t;
  t.rounds.push_back(s);
  while (true) {
    AttrSet next = c.step(t.rounds.back());
    if (next == t.rounds.back()) break;
    t.rounds.push_back(std::move(next));
  }
  return t;
}

// No implication fires outside s.
inline bool is_closed(const ImplicationSet& sigma, const AttrSet& s) {
  require_width(sigma.universe_ptr(), s);
  for (const auto& i : sigma)
    if (i.premise.is_subset_of(s) && !i.conclusion.is_subset_of(s)) return false;
  return true;
}

inline bool is_closed(const ClosureSource& src, const AttrSet& s) { return src.close(s) == s; }

inline bool entails(const ClosureSource& src, const Implication& imp) {
  return imp.conclusion.is_subset_of(src.close(imp.premise));
}

inline bool entails_all(const ClosureSource& src, const ImplicationSet& other) {
  require_same_universe(src.universe_ptr(), other.universe_ptr());
  for (const auto& i : other)
    if (!entails(src, i)) return false;
  return true;
}

inline bool equivalent(const ImplicationSet& a, const ImplicationSet& b) {
  require_same_universe(a.universe_ptr(), b.universe_ptr());
  return entails_all(ImplicationClosure(a), b) && entails_all(ImplicationClosure(b), a);
}

namespace detail {

// Calls f on every subset of s.
template <class F>
void for_each_subset(const AttrSet& s, F&& f) {
  auto elems = s.elements();
  const std::size_t k = elems.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    AttrSet u(s.width());
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u) u.insert(elems[b]);
    f(u);
  }
}

}  // namespace detail

// Iterates S -> S u {c(U) : U in S, c(U) != c(S)}; exponential in |S|, so bounded.
inline AttrSet quasiclosure(const ClosureSource& src, const AttrSet& s, const Limits& limits = {}) {
  require_width(src.universe_ptr(), s);
  AttrSet cur = s;
  while (true) {
    if (cur.count() > limits.max_exhaustive || cur.count() >= 63)
      throw Error(ErrorCode::bound_exceeded, "quasiclosure of a " + std::to_string(cur.count()) +
                                                 "-element set exceeds the limit of " +
                                                 std::to_string(limits.max_exhaustive));
    const AttrSet whole = src.close(cur);
    AttrSet next = cur;
    detail::for_each_subset(cur, [&](const AttrSet& u) {
      AttrSet cu = src.close(u);
      if (cu != whole) next |= cu;
    });
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

// Closed sets in lectic order (lowest position most significant).
class LecticEnumerator {
 public:
  explicit LecticEnumerator(ClosureSource src) : src_(std::move(src)) {}

  std::optional<AttrSet> next() {
    if (done_) return std::nullopt;
    if (!current_) {
      current_ = src_.close(AttrSet(src_.width()));
      return current_;
    }
    AttrSet a = *current_;
    for (std::size_t i = src_.width(); i-- > 0;) {
      if (a.contains(i)) {
        a.erase(i);
        continue;
      }
      AttrSet probe = a;
      probe.insert(i);
      AttrSet b = src_.close(probe);
      std::size_t fresh = (b - a).first();
      if (fresh >= i) {
        current_ = std::move(b);
        return current_;
      }
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  ClosureSource src_;
  std::optional<AttrSet> current_;
  bool done_ = false;
};

inline std::vector<AttrSet> enumerate_closed_lectic(const ClosureSource& src) {
  std::vector<AttrSet> out;
  LecticEnumerator e(src);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

// The closure system F itself, as a family.
inline SetFamily closed_family(const ClosureSource& src) {
  return SetFamily(src.universe_ptr(), enumerate_closed_lectic(src));
}

}  // namespace hornkit
