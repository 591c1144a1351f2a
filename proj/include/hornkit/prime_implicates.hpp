#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "hornkit/canonical_bases.hpp"
#include "hornkit/closure.hpp"

namespace hornkit {

// Disjunction of negated `negatives` and, if present, the positive literal.
struct HornClause {
  AttrSet negatives;
  std::optional<std::size_t> positive;

  bool is_pure() const noexcept { return positive.has_value(); }
  // A positive literal repeated among the negatives makes a tautology.
  bool well_formed() const { return !positive || !negatives.contains(*positive); }

  // Literal-set inclusion.
  bool subsumes(const HornClause& o) const {
    if (positive && positive != o.positive) return false;
    return negatives.is_subset_of(o.negatives);
  }

  friend bool operator==(const HornClause&, const HornClause&) = default;
};

inline HornClause to_clause(const Implication& unit) {
  if (!unit.is_unit()) throw Error(ErrorCode::malformed_input, "clause needs a single conclusion element");
  return {unit.premise, unit.conclusion.first()};
}

inline Implication to_implication(const HornClause& c) {
  AttrSet concl(c.negatives.width());
  if (c.positive) concl.insert(*c.positive);
  return {c.negatives, std::move(concl)};
}

// Canonical order of the negatives, then the positive literal (negative clauses last).
inline bool canonical_less(const HornClause& a, const HornClause& b) {
  if (a.negatives != b.negatives) return canonical_less(a.negatives, b.negatives);
  std::size_t pa = a.positive.value_or(AttrSet::npos), pb = b.positive.value_or(AttrSet::npos);
  return pa < pb;
}

// Resolvent of two clauses that clash in exactly one variable.
inline std::optional<HornClause> consensus(const HornClause& a, const HornClause& b) {
  bool ab = a.positive && b.negatives.contains(*a.positive);
  bool ba = b.positive && a.negatives.contains(*b.positive);
  if (ab == ba) return std::nullopt;
  const HornClause& giver = ab ? a : b;  // its positive literal is resolved away
  const HornClause& taker = ab ? b : a;
  HornClause r{giver.negatives | taker.negatives, taker.positive};
  r.negatives.erase(*giver.positive);
  return r;
}

// Consensus closure with subsumed clauses discarded as soon as they appear.
// The survivors are exactly the prime implicates, canonically ordered.
inline std::vector<HornClause> consensus_closure(const std::vector<HornClause>& input) {
  std::vector<HornClause> kept;
  std::deque<HornClause> queue;
  for (const auto& c : input) {
    if (!c.well_formed()) continue;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    HornClause c = std::move(queue.front());
    queue.pop_front();
    if (std::any_of(kept.begin(), kept.end(), [&](const HornClause& k) { return k.subsumes(c); })) continue;
    std::erase_if(kept, [&](const HornClause& k) { return c.subsumes(k); });
    for (const auto& k : kept)
      if (auto r = consensus(c, k)) queue.push_back(std::move(*r));
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), [](const HornClause& a, const HornClause& b) { return canonical_less(a, b); });
  return kept;
}

inline std::vector<HornClause> clauses_of(const ImplicationSet& sigma) {
  std::vector<HornClause> out;
  for (const auto& u : unit_expand(sigma)) {
    HornClause c = to_clause(u);
    if (c.well_formed()) out.push_back(std::move(c));
  }
  return out;
}

// All prime implicates of sigma as unit implications.
inline ImplicationSet prime_implicates(const ImplicationSet& sigma) {
  std::vector<Implication> out;
  for (const auto& c : consensus_closure(clauses_of(sigma))) out.push_back(to_implication(c));
  return sigma.with(std::move(out));
}

// A pure Horn theory always has the full set as a model, so negative clauses are
// never implied; a pure clause is prime when no single negative can be dropped.
inline bool is_prime_implicate(const ImplicationSet& sigma, const HornClause& c) {
  require_width(sigma.universe_ptr(), c.negatives);
  if (!c.well_formed() || !c.positive) return false;
  ImplicationClosure cl(sigma);
  if (!cl.close(c.negatives).contains(*c.positive)) return false;
  bool prime = true;
  c.negatives.for_each([&](std::size_t x) {
    if (!prime) return;
    AttrSet smaller = c.negatives;
    smaller.erase(x);
    if (cl.close(smaller).contains(*c.positive)) prime = false;
  });
  return prime;
}

struct AcyclicityReport {
  bool acyclic = true;
  std::vector<std::size_t> cycle;  // closed walk x0 -> x1 -> ... -> x0 when cyclic
};

// Cycle search in the graph with an arc a -> p for every prime implicate N -> p, a in N.
inline AcyclicityReport is_acyclic(const ImplicationSet& sigma) {
  const std::size_t n = sigma.width();
  std::vector<AttrSet> succ(n, AttrSet(n));
  for (const auto& c : consensus_closure(clauses_of(sigma)))
    c.negatives.for_each([&](std::size_t a) { succ[a].insert(*c.positive); });

  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  AcyclicityReport report;
  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    bool found = false;
    succ[v].for_each([&](std::size_t w) {
      if (found) return;
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        report.cycle.assign(it, stack.end());
        report.cycle.push_back(w);
        found = true;
      } else if (state[w] == 0) {
        found = self(self, w);
      }
    });
    stack.pop_back();
    state[v] = 2;
    return found;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(dfs, v)) {
      report.acyclic = false;
      break;
    }
  }
  return report;
}

// The nonredundant base of prime unit implications, unique for acyclic theories.
inline ImplicationSet acyclic_base(const ImplicationSet& sigma) {
  auto report = is_acyclic(sigma);
  if (!report.acyclic) {
    std::string walk;
    for (auto v : report.cycle) walk += (walk.empty() ? "" : " -> ") + sigma.universe().label(v);
    throw Error(ErrorCode::not_acyclic, "cycle " + walk);
  }
  return remove_redundancy(prime_implicates(sigma));
}

}  // namespace hornkit
