#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hornkit/canonical_bases.hpp"
#include "hornkit/closure.hpp"
#include "hornkit/set_family.hpp"

namespace hornkit {

using BigCount = boost::multiprecision::cpp_int;

// A 012n-row: positions fixed to 1 or 0, free positions (2), and bubbles
// (each bubble demands at least one 0 among its positions). Bubbles are
// pairwise disjoint, have at least two positions and avoid ones and zeros.
struct Row {
  AttrSet ones;
  AttrSet zeros;
  std::vector<AttrSet> bubbles;

  static Row universal(std::size_t width) { return {AttrSet(width), AttrSet(width), {}}; }

  std::size_t width() const { return ones.width(); }

  AttrSet free_positions() const {
    AttrSet f = (ones | zeros).complement();
    for (const auto& b : bubbles) f -= b;
    return f;
  }

  bool contains(const AttrSet& x) const {
    if (!ones.is_subset_of(x) || x.intersects(zeros)) return false;
    return std::none_of(bubbles.begin(), bubbles.end(), [&](const AttrSet& b) { return b.is_subset_of(x); });
  }

  bool is_012() const { return bubbles.empty(); }

  BigCount count() const {
    BigCount c = 1;
    c <<= free_positions().count();
    for (const auto& b : bubbles) c *= (BigCount(1) << b.count()) - 1;
    return c;
  }

  // Bubbles ordered by their first position; makes rows comparable.
  void normalize() {
    std::sort(bubbles.begin(), bubbles.end(), [](const AttrSet& a, const AttrSet& b) { return a.first() < b.first(); });
  }

  friend bool operator==(Row a, Row b) {
    a.normalize();
    b.normalize();
    return a.ones == b.ones && a.zeros == b.zeros && a.bubbles == b.bubbles;
  }
};

struct RowSystem {
  UniversePtr universe;
  std::vector<Row> rows;
};

namespace detail {

// Row restricted to sets containing p; a bubble left with one position turns it to 0.
inline std::optional<Row> force_ones(Row r, const AttrSet& p) {
  if (p.intersects(r.zeros)) return std::nullopt;
  r.ones |= p;
  std::vector<AttrSet> kept;
  for (auto& b : r.bubbles) {
    if (!b.intersects(p)) {
      kept.push_back(std::move(b));
      continue;
    }
    AttrSet rest = b - p;
    std::size_t k = rest.count();
    if (k == 0) return std::nullopt;
    if (k == 1)
      r.zeros |= rest;
    else
      kept.push_back(std::move(rest));
  }
  r.bubbles = std::move(kept);
  return r;
}

// Row restricted to sets missing position p; a bubble through p is satisfied and dissolves.
inline std::optional<Row> force_zero(Row r, std::size_t p) {
  if (r.ones.contains(p)) return std::nullopt;
  r.zeros.insert(p);
  std::erase_if(r.bubbles, [&](const AttrSet& b) { return b.contains(p); });
  return r;
}

// Splits a bubble into bubble-free pieces: b1..b_{j-1} = 1, bj = 0, rest free.
inline std::vector<Row> split_bubble(const Row& r, std::size_t which) {
  std::vector<Row> out;
  Row base = r;
  AttrSet b = base.bubbles[which];
  base.bubbles.erase(base.bubbles.begin() + static_cast<std::ptrdiff_t>(which));
  AttrSet prefix(r.width());
  b.for_each([&](std::size_t p) {
    Row piece = base;
    piece.ones |= prefix;
    piece.zeros.insert(p);
    out.push_back(std::move(piece));
    prefix.insert(p);
  });
  return out;
}

inline void impose_noncover(const Row& r, const AttrSet& n, std::vector<Row>& out) {
  if (n.intersects(r.zeros)) {
    out.push_back(r);
    return;
  }
  AttrSet open = n - r.ones;
  std::size_t k = open.count();
  if (k == 0) return;
  if (k == 1) {
    if (auto z = force_zero(r, open.first())) out.push_back(std::move(*z));
    return;
  }
  for (const auto& b : r.bubbles)
    if (b.is_subset_of(open)) {
      out.push_back(r);
      return;
    }
  for (std::size_t i = 0; i < r.bubbles.size(); ++i) {
    if (r.bubbles[i].intersects(open)) {
      // Clash with an existing bubble: fall back to bubble-free pieces.
      for (const auto& piece : split_bubble(r, i)) impose_noncover(piece, n, out);
      return;
    }
  }
  Row fresh = r;
  fresh.bubbles.push_back(open);
  fresh.normalize();
  out.push_back(std::move(fresh));
}

}  // namespace detail

// Rows whose union is {X in r : n not contained in X}.
inline std::vector<Row> impose_noncover(const Row& r, const AttrSet& n) {
  std::vector<Row> out;
  detail::impose_noncover(r, n, out);
  return out;
}

// Rows whose union is {X in r : X satisfies A -> B}, pairwise disjoint.
inline std::vector<Row> impose_implication(const Row& r, const Implication& imp) {
  const AttrSet& a = imp.premise;
  AttrSet b = imp.conclusion - a;
  if (a.intersects(r.zeros) || b.is_subset_of(r.ones)) return {r};
  std::vector<Row> out;
  detail::impose_noncover(r, a, out);
  if (!b.intersects(r.zeros))
    if (auto forced = detail::force_ones(r, a | b)) out.push_back(std::move(*forced));
  return out;
}

inline RowSystem impose_implication(const RowSystem& rs, const Implication& imp) {
  RowSystem out{rs.universe, {}};
  for (const auto& r : rs.rows)
    for (auto& piece : impose_implication(r, imp)) out.rows.push_back(std::move(piece));
  return out;
}

inline RowSystem impose_noncover(const RowSystem& rs, const AttrSet& n) {
  RowSystem out{rs.universe, {}};
  for (const auto& r : rs.rows) detail::impose_noncover(r, n, out.rows);
  return out;
}

// Models of sigma as disjoint rows, folding implications in input order.
inline RowSystem enumerate_compact(const ImplicationSet& sigma) {
  RowSystem rs{sigma.universe_ptr(), {Row::universal(sigma.width())}};
  for (const auto& imp : sigma) rs = impose_implication(rs, imp);
  return rs;
}

inline BigCount count(const RowSystem& rs) {
  BigCount c = 0;
  for (const auto& r : rs.rows) c += r.count();
  return c;
}

// Each bubble b1..bk expands to (0,2,..,2), (1,0,2,..), ..., (1,..,1,0).
inline std::vector<Row> to_012(const Row& r) {
  std::vector<Row> todo{r}, out;
  while (!todo.empty()) {
    Row cur = std::move(todo.back());
    todo.pop_back();
    if (cur.is_012()) {
      out.push_back(std::move(cur));
      continue;
    }
    auto pieces = detail::split_bubble(cur, 0);
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) todo.push_back(std::move(*it));
  }
  return out;
}

inline RowSystem to_012(const RowSystem& rs) {
  RowSystem out{rs.universe, {}};
  for (const auto& r : rs.rows)
    for (auto& piece : to_012(r)) out.rows.push_back(std::move(piece));
  return out;
}

// Every member set, row by row.
inline std::vector<AttrSet> denotation(const RowSystem& rs) {
  std::vector<AttrSet> out;
  for (const auto& r : to_012(rs).rows) {
    auto free = r.free_positions().elements();
    if (free.size() >= 63) throw Error(ErrorCode::bound_exceeded, "row denotes more than 2^62 sets");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
      AttrSet x = r.ones;
      for (std::size_t b = 0; b < free.size(); ++b)
        if ((m >> b) & 1u) x.insert(free[b]);
      out.push_back(std::move(x));
    }
  }
  return out;
}

// Space-separated symbols; bubbles are lettered a, b, ... by first position.
inline std::string render_row(const Row& r) {
  Row n = r;
  n.normalize();
  std::string out;
  for (std::size_t p = 0; p < n.width(); ++p) {
    if (p) out += ' ';
    if (n.ones.contains(p)) {
      out += '1';
    } else if (n.zeros.contains(p)) {
      out += '0';
    } else {
      auto it = std::find_if(n.bubbles.begin(), n.bubbles.end(), [&](const AttrSet& b) { return b.contains(p); });
      if (it == n.bubbles.end()) {
        out += '2';
      } else {
        std::size_t k = static_cast<std::size_t>(it - n.bubbles.begin());
        out += k < 26 ? std::string(1, static_cast<char>('a' + k)) : "n" + std::to_string(k);
      }
    }
  }
  return out;
}

// Pure implications plus complications (sets that no model may contain).
class HornSystem {
 public:
  HornSystem(ImplicationSet sigma, SetFamily gamma) : sigma_(std::move(sigma)), gamma_(minimal_members(gamma)) {
    require_same_universe(sigma_.universe_ptr(), gamma_.universe_ptr());
  }
  explicit HornSystem(ImplicationSet sigma) : sigma_(std::move(sigma)), gamma_(sigma_.universe_ptr()) {}

  const ImplicationSet& sigma() const noexcept { return sigma_; }
  const SetFamily& gamma() const noexcept { return gamma_; }
  const UniversePtr& universe_ptr() const { return sigma_.universe_ptr(); }
  std::size_t size() const { return sigma_.size() + gamma_.size(); }

  bool is_model(const AttrSet& x) const {
    if (!is_closed(sigma_, x)) return false;
    return std::none_of(gamma_.begin(), gamma_.end(), [&](const AttrSet& a) { return a.is_subset_of(x); });
  }

 private:
  ImplicationSet sigma_;
  SetFamily gamma_;
};

struct SatResult {
  bool satisfiable = true;
  AttrSet bottom;  // c(empty); a complication inside it rules out every model
};

inline SatResult horn_satisfiable(const HornSystem& h) {
  SatResult r{true, close(h.sigma(), AttrSet(h.sigma().width()))};
  for (const auto& a : h.gamma())
    if (a.is_subset_of(r.bottom)) r.satisfiable = false;
  return r;
}

inline RowSystem enumerate_horn(const HornSystem& h) {
  RowSystem rs = enumerate_compact(h.sigma());
  for (const auto& a : h.gamma()) rs = impose_noncover(rs, a);
  return rs;
}

// Equivalent system with at most one complication: the minimum pure base of
// Mod(h) plus E, paired with the single complication E. Pure input is
// returned minimized with no complication.
inline HornSystem theorem6_compress(const HornSystem& h) {
  if (h.gamma().empty()) return HornSystem(shock_minimize(h.sigma()));
  std::vector<Implication> items(h.sigma().begin(), h.sigma().end());
  const AttrSet full = AttrSet::full(h.sigma().width());
  for (const auto& a : h.gamma()) items.push_back({a, full});
  ImplicationSet base = shock_minimize(h.sigma().with(std::move(items)));
  return HornSystem(std::move(base), SetFamily(h.universe_ptr(), {full}));
}

}  // namespace hornkit
