#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "hornkit/hornkit.hpp"
#include "oracle.hpp"

using namespace hornkit;

TEST_CASE("Minimal transversals", "[dualize]") {
  auto u = Universe::numbered(3);
  CHECK(fixtures::rendered(minimal_transversals(fixtures::sets(u, {"1 2", "2 3"}))) ==
        std::vector<std::string>{"2", "1 3"});
  CHECK(fixtures::rendered(minimal_transversals(SetFamily(u))) == std::vector<std::string>{"{}"});
  CHECK(minimal_transversals(fixtures::sets(u, {"{}", "1"})).empty());
  CHECK(fixtures::rendered(minimal_transversals(fixtures::sets(u, {"1", "1 2"}))) == std::vector<std::string>{"1"});
}

TEST_CASE("Maximal noncovers of the six-element family", "[dualize]") {
  auto f = fixtures::family("eq25.fam");
  auto mx = [&](std::size_t e) { return fixtures::rendered(max_noncovers(f, e)); };
  CHECK(mx(0) == std::vector<std::string>{"2 4 5", "3 4 5 6"});
  CHECK(mx(1) == std::vector<std::string>{"1 3 4 5 6"});
  CHECK(mx(2) == std::vector<std::string>{"1 2 4 5"});
  CHECK(mx(3) == std::vector<std::string>{"1 2", "2 5", "3 5 6"});
  CHECK(mx(4) == std::vector<std::string>{"1 2 4"});
  CHECK(mx(5) == std::vector<std::string>{"1 2 3 4 5"});
  CHECK_THROWS_AS(max_noncovers(f, 6), Error);

  auto rows = to_012(enumerate_compact(fixtures::sigma("eq38.imp")));
  CHECK(fixtures::rendered(max_noncovers(rows, 3)) == std::vector<std::string>{"1 2", "2 5", "3 5 6"});
}

TEST_CASE("Meet-irreducibles from rows", "[dualize]") {
  auto s = fixtures::sigma("eq38.imp");
  auto m = meet_irreducibles(s);
  CHECK(same_sets(m, fixtures::family("eq25.fam")));
  CHECK(same_sets(m, meet_irreducibles(s, MeetIrrMethod::definitional)));

  auto u = Universe::numbered(3);
  CHECK(fixtures::rendered(meet_irreducibles(ImplicationSet(u))) ==
        std::vector<std::string>{"1 2", "1 3", "2 3"});
  CHECK(meet_irreducibles(fixtures::implications(u, {"-> 1 2 3"})).empty());
}

TEST_CASE("Stems and maximal noncovers determine each other", "[dualize]") {
  auto f = fixtures::family("eq25.fam");
  CHECK(fixtures::rendered(stems_from_meetirr(f, 3)) == std::vector<std::string>{"1 3", "1 5", "1 6", "2 3", "2 6"});
  CHECK(stems_from_meetirr(f, 1).empty());
  auto t = stem_table(f);
  for (std::size_t e = 0; e < 6; ++e) {
    CHECK(same_sets(stems_from_meetirr(f, e), f.with(t.stems(e))));
    CHECK(same_sets(cmax_from_stems(t, e), complemented_max_noncovers(f, e)));
  }
}

TEST_CASE("Minimal keys", "[dualize]") {
  CHECK(fixtures::rendered(minimal_keys(fixtures::family("eq25.fam"))) == std::vector<std::string>{"2 6"});
  CHECK(fixtures::rendered(minimal_keys(fixtures::sigma("eq38.imp"))) == std::vector<std::string>{"2 6"});
  auto u = Universe::numbered(3);
  CHECK(fixtures::rendered(minimal_keys(ImplicationSet(u))) == std::vector<std::string>{"1 2 3"});
  CHECK(fixtures::rendered(minimal_keys(fixtures::implications(u, {"-> 1 2 3"}))) ==
        std::vector<std::string>{"{}"});
}

TEST_CASE("Dualization against brute force", "[dualize][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto u = Universe::numbered(n);

    auto h = oracle::random_family(rng, n, trial % 6);
    auto fam = SetFamily(u, [&] {
      std::vector<AttrSet> v;
      for (auto m : h) v.push_back(oracle::set(n, m));
      return v;
    }());
    auto tr = minimal_transversals(fam);
    CHECK(oracle::to_masks(tr) == oracle::mtr(oracle::minimal_of(h), n));
    CHECK(same_sets(minimal_transversals(tr), minimal_members(fam)));

    auto ms = oracle::random_sigma(rng, n, trial % 8);
    auto s = oracle::from_masks(u, ms);
    auto flags = oracle::models(ms, n);
    auto c = oracle::closure_table(flags, n);
    auto expect_m = oracle::meet_irreducibles(flags, n);
    CHECK(oracle::to_masks(meet_irreducibles(s)) == expect_m);
    CHECK(oracle::to_masks(meet_irreducibles(s, MeetIrrMethod::definitional)) == expect_m);
    CHECK(oracle::to_masks(minimal_keys(s)) == oracle::keys(c, n));

    auto m = meet_irreducibles(s);
    auto t = stem_table(s);
    for (std::size_t e = 0; e < n; ++e) {
      CHECK(oracle::to_masks(stems_from_meetirr(m, e)) == oracle::stems(c, n, e));
      CHECK(same_sets(cmax_from_stems(t, e), complemented_max_noncovers(m, e)));
    }
  }
}
