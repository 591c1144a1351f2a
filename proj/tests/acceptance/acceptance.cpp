// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hornkit/hornkit.hpp"
#include "property_checks.hpp"

using namespace hornkit;

namespace {

constexpr double small_case_seconds = 1.0;
constexpr int property_instances = 1000;
constexpr std::size_t property_max_elements = 8;
constexpr double property_seconds = 60.0;
constexpr int compression_instances = 200;
constexpr double compression_seconds = 120.0;
constexpr int layout_queries = 10000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs >= limit) {
    o.ok = false;
    o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("criterion %2d: %s  %-58s %8.3f s%s%s\n", id, o.ok ? "PASS" : "FAIL", name.c_str(), secs,
              o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::string> lines(const ImplicationSet& s) { return fixtures::rendered(s); }

}  // namespace

int main() {
  criterion(1, "minimum base of the seven-element family", small_case_seconds, [] {
    Outcome o;
    auto gd = gd_base(fixtures::family("fig4a.fam"));
    o.require(gd.size() == 6, "expected 6 implications");
    o.require(lines(gd) == std::vector<std::string>{"-> 1 2", "1 2 3 -> 1 2 3 4", "1 2 4 -> 1 2 3 4",
                                                    "1 2 6 -> 1 2 3 4 5 6 7", "1 2 7 -> 1 2 3 4 5 6 7",
                                                    "1 2 3 4 5 -> 1 2 3 4 5 6 7"},
              "implications differ");
    return o;
  });

  criterion(2, "minimum base of the nine-element system", small_case_seconds, [] {
    Outcome o;
    auto gd = gd_base(fixtures::sigma("eq15.imp"));
    o.require(gd.size() == 8, "expected 8 implications");
    o.require(lines(gd) == std::vector<std::string>{"1 -> 1 6 9", "2 -> 2 3 4 5 6 7 8 9", "3 -> 2 3 4 5 6 7 8 9",
                                                    "4 -> 2 3 4 5 6 7 8 9", "5 -> 2 3 4 5 6 7 8 9", "6 -> 6 9",
                                                    "7 -> 7 8", "8 -> 7 8"},
              "implications differ");
    return o;
  });

  criterion(3, "stems and direct base from meet-irreducibles", small_case_seconds, [] {
    Outcome o;
    auto m = fixtures::family("eq25.fam");
    o.require(fixtures::rendered(stems_from_meetirr(m, 3)) ==
                  std::vector<std::string>{"1 3", "1 5", "1 6", "2 3", "2 6"},
              "stems of 4 differ");
    o.require(same_implications(canonical_direct(m), fixtures::sigma("eq27.imp")), "direct base differs");
    return o;
  });

  criterion(4, "consensus yields the ten prime clauses", small_case_seconds, [] {
    Outcome o;
    auto s = fixtures::sigma("eq38.imp");
    auto primes = consensus_closure(clauses_of(s));
    auto expect = fixtures::implications(s.universe_ptr(), {"3 -> 5", "1 5 -> 4", "6 -> 3", "2 3 -> 1", "1 3 -> 4",
                                                            "6 -> 5", "2 6 -> 1", "2 3 -> 4", "1 6 -> 4", "2 6 -> 4"});
    std::vector<Implication> got;
    for (const auto& c : primes) got.push_back(to_implication(c));
    o.require(got.size() == 10, "expected 10 clauses");
    o.require(same_implications(s.with(got), expect), "clauses differ");
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (i != j) o.require(!primes[i].subsumes(primes[j]), "a clause subsumes another");
    return o;
  });

  criterion(5, "full-conclusion minimization of the direct base", small_case_seconds, [] {
    Outcome o;
    auto s = fixtures::sigma("eq27.imp");
    auto expect = fixtures::implications(s.universe_ptr(), {"2 3 -> 2 3 1 4 5", "1 5 -> 1 5 4", "6 -> 6 3 5", "3 -> 3 5"});
    o.require(same_implications(shock_minimize(s), expect), "result differs");
    return o;
  });

  criterion(6, "row enumeration count and maximal noncovers", small_case_seconds, [] {
    Outcome o;
    auto s = fixtures::sigma("eq38.imp");
    auto rs = enumerate_compact(s);
    auto flags = oracle::models(oracle::to_masks(s), 6);
    std::size_t brute = 0;
    for (char f : flags) brute += f != 0;
    o.require(count(rs) == 22, "row count is not 22");
    o.require(brute == 22, "brute-force model count is not 22");
    o.require(fixtures::rendered(max_noncovers(to_012(rs), 3)) == std::vector<std::string>{"1 2", "2 5", "3 5 6"},
              "maximal noncovers of 4 differ");
    return o;
  });

  criterion(7, "acyclic base and single ordered pass", small_case_seconds, [] {
    Outcome o;
    auto d = fixtures::sigma("dbasis.imp");
    auto u = d.universe_ptr();
    o.require(render_set(*u, ordered_close(d, fixtures::set(u, "2 5"))) == "1 2 3 4 5 6",
              "single pass on {2,5} differs");
    auto s = fixtures::sigma("acyclic.imp");
    auto expect = fixtures::implications(s.universe_ptr(), {"4 -> 5", "6 -> 1", "2 3 -> 4", "2 3 -> 1", "3 5 -> 6"});
    auto got = acyclic_base(s);
    std::string shown;
    for (const auto& l : lines(got)) shown += (shown.empty() ? "" : ", ") + l;
    o.require(same_implications(got, expect),
              "acyclic base is {" + shown + "}; the expected set keeps 2 3 -> 1, which follows from 2 3 -> 4, "
              "4 -> 5, 3 5 -> 6, 6 -> 1");
    return o;
  });

  std::vector<props::Instance> instances;
  criterion(8, "property suite on random implication sets", property_seconds, [&] {
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < property_instances && o.ok; ++i) {
      auto in = props::make_instance(rng);
      o.require(in.n <= property_max_elements, "instance too large");
      for (const auto& failure :
           {props::closure_axioms(in), props::oracle_agreement(in), props::intersection_closed(in),
            props::mtr_involution(rng, in.n), props::stem_round_trips(in), props::direct_base_is_direct(in),
            props::gd_is_smallest(in, rng), props::rows_exact(in)})
        o.require(failure.empty(), failure + " on instance " + std::to_string(i));
      instances.push_back(std::move(in));
    }
    return o;
  });

  criterion(9, "compression bounds on random systems with complications", compression_seconds, [] {
    Outcome o;
    std::mt19937_64 rng(99);
    for (int i = 0; i < compression_instances && o.ok; ++i) {
      auto r = props::compression_bounds(rng);
      o.require(r.failure.empty(), r.failure + " on instance " + std::to_string(i));
    }
    return o;
  });

  criterion(10, "closure layouts and meet-irreducible methods agree", 1e9, [&] {
    Outcome o;
    std::mt19937_64 rng(7);
    int queries = 0;
    while (queries < layout_queries && o.ok) {
      std::size_t n = std::uniform_int_distribution<std::size_t>(4, 70)(rng);
      std::size_t m = std::uniform_int_distribution<std::size_t>(n, 8 * n)(rng);
      auto u = Universe::numbered(n);
      std::vector<Implication> items;
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t i = 0; i < m; ++i) {
        AttrSet a(n), b(n);
        for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) a.insert(pick(rng));
        for (int k = std::uniform_int_distribution<int>(1, 3)(rng); k > 0; --k) b.insert(pick(rng));
        items.push_back({a, b});
      }
      ImplicationSet s(u, items);
      ImplicationClosure rows(s, Layout::row_wise), cols(s, Layout::vertical);
      for (int q = 0; q < 100; ++q, ++queries) {
        AttrSet x(n);
        for (int k = std::uniform_int_distribution<int>(0, 6)(rng); k > 0; --k) x.insert(pick(rng));
        o.require(rows.close(x) == cols.close(x), "layouts disagree");
      }
    }
    o.require(instances.size() == static_cast<std::size_t>(property_instances), "property instances missing");
    for (const auto& in : instances) {
      auto failure = props::meetirr_methods_agree(in);
      o.require(failure.empty(), failure);
    }
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
