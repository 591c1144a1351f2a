#pragma once

#include <algorithm>
#include <vector>

#include "hornkit/closure.hpp"
#include "hornkit/compact_enumeration.hpp"
#include "hornkit/direct_bases.hpp"
#include "hornkit/set_family.hpp"

namespace hornkit {

// Berge multiplication: transversals are extended edge by edge and kept minimal.
inline SetFamily minimal_transversals(const SetFamily& h) {
  const std::size_t n = h.width();
  auto edges = minimal_members(h.sets());
  if (!edges.empty() && edges.front().empty()) return h.with({});
  std::vector<AttrSet> tr{AttrSet(n)};
  for (const auto& x : edges) {
    std::vector<AttrSet> next;
    for (const auto& t : tr) {
      if (t.intersects(x)) {
        next.push_back(t);
        continue;
      }
      x.for_each([&](std::size_t v) {
        AttrSet u = t;
        u.insert(v);
        next.push_back(std::move(u));
      });
    }
    tr = minimal_members(std::move(next));
  }
  return h.with(std::move(tr));
}

namespace detail {

inline void require_element(const UniversePtr& u, std::size_t e) {
  if (e >= u->size()) throw Error(ErrorCode::element_out_of_range, std::to_string(e));
}

// Largest member of a bubble-free row that avoids e.
inline std::optional<AttrSet> row_max_avoiding(const Row& r, std::size_t e) {
  if (r.ones.contains(e)) return std::nullopt;
  AttrSet top = r.ones | r.free_positions();
  top.erase(e);
  return top;
}

}  // namespace detail

// Maximal closed sets avoiding e, read off a generating family.
inline SetFamily max_noncovers(const SetFamily& h, std::size_t e) {
  detail::require_element(h.universe_ptr(), e);
  std::vector<AttrSet> avoid;
  for (const auto& y : h)
    if (!y.contains(e)) avoid.push_back(y);
  return h.with(maximal_members(std::move(avoid)));
}

// Same, from the bubble-free rows of Mod(sigma): each row offers one candidate.
inline SetFamily max_noncovers(const RowSystem& rows012, std::size_t e) {
  detail::require_element(rows012.universe, e);
  std::vector<AttrSet> cand;
  for (const auto& r : rows012.rows)
    if (auto top = detail::row_max_avoiding(r, e)) cand.push_back(std::move(*top));
  return SetFamily(rows012.universe, maximal_members(std::move(cand)));
}

inline SetFamily max_noncovers(const ClosureSource& src, std::size_t e) {
  if (auto* f = src.family()) return max_noncovers(*f, e);
  return max_noncovers(to_012(enumerate_compact(*src.sigma())), e);
}

enum class MeetIrrMethod { rows, definitional };

// Closed sets other than E that are not the intersection of strictly larger closed sets.
inline SetFamily meet_irreducibles_definitional(const ClosureSource& src) {
  auto closed = enumerate_closed_lectic(src);
  const AttrSet full = AttrSet::full(src.width());
  std::vector<AttrSet> out;
  for (const auto& x : closed) {
    if (x == full) continue;
    AttrSet meet = full;
    for (const auto& y : closed)
      if (x.is_proper_subset_of(y)) meet &= y;
    if (meet != x) out.push_back(x);
  }
  return SetFamily(src.universe_ptr(), sorted_canonical(std::move(out)));
}

// Union over e of the maximal closed sets avoiding e.
inline SetFamily meet_irreducibles(const ClosureSource& src, MeetIrrMethod method = MeetIrrMethod::rows) {
  if (method == MeetIrrMethod::definitional) return meet_irreducibles_definitional(src);
  std::vector<AttrSet> out;
  if (auto* f = src.family()) {
    for (std::size_t e = 0; e < src.width(); ++e)
      for (const auto& x : max_noncovers(*f, e)) out.push_back(x);
  } else {
    RowSystem rows = to_012(enumerate_compact(*src.sigma()));
    for (std::size_t e = 0; e < src.width(); ++e)
      for (const auto& x : max_noncovers(rows, e)) out.push_back(x);
  }
  return SetFamily(src.universe_ptr(), sorted_canonical(std::move(out)));
}

// Complements of the maximal members of m that avoid e.
inline SetFamily complemented_max_noncovers(const SetFamily& m, std::size_t e) {
  std::vector<AttrSet> out;
  for (const auto& x : max_noncovers(m, e)) out.push_back(x.complement());
  return m.with(sorted_canonical(std::move(out)));
}

// stems(e) from a generating family: mtr of the complemented maximal noncovers, minus {e}.
// For e in the bottom closed set the result is {empty}.
inline SetFamily stems_from_meetirr(const SetFamily& m, std::size_t e) {
  detail::require_element(m.universe_ptr(), e);
  auto tr = minimal_transversals(complemented_max_noncovers(m, e));
  const AttrSet single = AttrSet::of(m.width(), {e});
  std::vector<AttrSet> out;
  for (const auto& t : tr)
    if (t != single) out.push_back(t);
  return m.with(std::move(out));
}

// Complemented maximal noncovers of e from its stems: mtr(stems(e) u {{e}}).
inline SetFamily cmax_from_stems(const StemTable& t, std::size_t e) {
  detail::require_element(t.universe_ptr(), e);
  std::vector<AttrSet> h = t.stems(e);
  h.push_back(AttrSet::of(t.width(), {e}));
  return minimal_transversals(SetFamily(t.universe_ptr(), std::move(h)));
}

// Minimal generating sets of E: transversals of the complemented hyperplanes.
inline SetFamily minimal_keys(const ClosureSource& src) {
  SetFamily gen = src.family() ? *src.family() : meet_irreducibles(src);
  const AttrSet full = AttrSet::full(src.width());
  std::vector<AttrSet> proper;
  for (const auto& x : gen)
    if (x != full) proper.push_back(x);
  std::vector<AttrSet> comps;
  for (const auto& hp : maximal_members(std::move(proper))) comps.push_back(hp.complement());
  return minimal_transversals(SetFamily(src.universe_ptr(), std::move(comps)));
}

}  // namespace hornkit
