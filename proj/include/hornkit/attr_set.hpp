#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "hornkit/error.hpp"

namespace hornkit {

// Fixed-width bitset over element positions 0..width-1.
class AttrSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::size_t word_bits = 64;

  AttrSet() = default;
  explicit AttrSet(std::size_t width) : width_(width), words_((width + word_bits - 1) / word_bits, 0) {}

  static AttrSet full(std::size_t width) {
    AttrSet s(width);
    for (auto& w : s.words_) w = ~word_type{0};
    s.trim();
    return s;
  }

  static AttrSet of(std::size_t width, std::initializer_list<std::size_t> elems) {
    AttrSet s(width);
    for (auto e : elems) s.insert(e);
    return s;
  }

  template <class Range>
  static AttrSet from_range(std::size_t width, const Range& elems) {
    AttrSet s(width);
    for (auto e : elems) s.insert(static_cast<std::size_t>(e));
    return s;
  }

  // Low 64 positions taken from a mask; convenient for small universes.
  static AttrSet from_mask(std::size_t width, word_type mask) {
    AttrSet s(width);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  word_type to_mask() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t width() const noexcept { return width_; }

  bool contains(std::size_t e) const {
    return e < width_ && ((words_[e / word_bits] >> (e % word_bits)) & 1u) != 0;
  }

  void insert(std::size_t e) {
    check(e);
    words_[e / word_bits] |= word_type{1} << (e % word_bits);
  }

  void erase(std::size_t e) {
    check(e);
    words_[e / word_bits] &= ~(word_type{1} << (e % word_bits));
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }

  bool is_full() const { return count() == width_; }

  bool is_subset_of(const AttrSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  bool is_proper_subset_of(const AttrSet& o) const { return is_subset_of(o) && *this != o; }

  bool intersects(const AttrSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  // First element at or after `from`, or npos.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= width_) return npos;
    std::size_t wi = from / word_bits;
    word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (w != 0) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }

  std::size_t first() const noexcept { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      word_type w = words_[i];
      while (w != 0) {
        f(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  AttrSet complement() const {
    AttrSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  AttrSet& operator|=(const AttrSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  AttrSet& operator&=(const AttrSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  AttrSet& operator-=(const AttrSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend AttrSet operator|(AttrSet a, const AttrSet& b) { return a |= b; }
  friend AttrSet operator&(AttrSet a, const AttrSet& b) { return a &= b; }
  friend AttrSet operator-(AttrSet a, const AttrSet& b) { return a -= b; }

  friend bool operator==(const AttrSet& a, const AttrSet& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(width_);
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check(std::size_t e) const {
    if (e >= width_) throw Error(ErrorCode::element_out_of_range, "position " + std::to_string(e));
  }

  void trim() {
    if (width_ % word_bits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (width_ % word_bits)) - 1;
  }

  std::size_t width_ = 0;
  std::vector<word_type> words_;
};

// Canonical order: cardinality first, then lexicographic on ascending positions.
inline bool canonical_less(const AttrSet& a, const AttrSet& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  std::size_t i = a.first(), j = b.first();
  while (i != AttrSet::npos && j != AttrSet::npos) {
    if (i != j) return i < j;
    i = a.next(i + 1);
    j = b.next(j + 1);
  }
  return false;
}

struct CanonicalLess {
  bool operator()(const AttrSet& a, const AttrSet& b) const { return canonical_less(a, b); }
};

struct AttrSetHash {
  std::size_t operator()(const AttrSet& s) const noexcept { return s.hash(); }
};

}  // namespace hornkit
