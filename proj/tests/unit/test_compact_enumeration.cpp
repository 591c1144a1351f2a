#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "hornkit/hornkit.hpp"
#include "oracle.hpp"

using namespace hornkit;

namespace {

std::vector<std::string> rendered(const RowSystem& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs.rows) out.push_back(render_row(r));
  return out;
}

std::vector<oracle::Mask> denoted(const RowSystem& rs) {
  auto sets = denotation(rs);
  auto m = oracle::to_masks(sets);
  return m;
}

}  // namespace

TEST_CASE("Rows built implication by implication", "[rows]") {
  auto s = fixtures::sigma("table1.imp");
  RowSystem rs{s.universe_ptr(), {Row::universal(6)}};
  rs = impose_implication(rs, s[0]);
  CHECK(rendered(rs) == std::vector<std::string>{"a 2 2 2 a 2", "1 2 2 1 1 2"});
  rs = impose_implication(rs, s[1]);
  CHECK(rendered(rs) == std::vector<std::string>{"a b b 2 a 2", "1 1 1 2 0 2", "1 2 2 1 1 2"});
  rs = impose_implication(rs, s[2]);
  CHECK(rendered(rs) == std::vector<std::string>{"a 2 0 2 a 2", "0 0 1 2 1 2", "1 2 2 1 1 2"});
  rs = impose_implication(rs, s[3]);
  CHECK(rendered(rs) == std::vector<std::string>{"a 2 0 2 a 0", "0 0 1 2 1 2", "1 2 2 1 1 0", "1 2 1 1 1 1"});
  CHECK(rendered(enumerate_compact(s)) == rendered(rs));
  CHECK(count(rs) == 22);
}

TEST_CASE("Row counts", "[rows]") {
  auto s = fixtures::sigma("eq38.imp");
  auto rs = enumerate_compact(s);
  CHECK(count(rs) == 22);
  CHECK(denotation(rs).size() == 22);
  CHECK(count(enumerate_compact(ImplicationSet(Universe::numbered(3)))) == 8);
  CHECK(count(enumerate_compact(ImplicationSet(Universe::numbered(100)))) == BigCount(1) << 100);
}

TEST_CASE("Conversion to bubble-free rows", "[rows]") {
  auto u = Universe::numbered(3);
  Row bubble = Row::universal(3);
  bubble.bubbles.push_back(AttrSet::full(3));
  auto pieces = to_012(RowSystem{u, {bubble}});
  CHECK(rendered(pieces) == std::vector<std::string>{"0 2 2", "1 0 2", "1 1 0"});

  // A two-position bubble gives two first-zero pieces; the denotation is the
  // three fully fixed combinations.
  auto s = fixtures::sigma("table1.imp");
  RowSystem r1{s.universe_ptr(), {enumerate_compact(s.with({s[0]})).rows[0]}};
  REQUIRE(render_row(r1.rows[0]) == "a 2 2 2 a 2");
  auto u6 = s.universe_ptr();
  RowSystem three{u6, {}};
  for (const char* text : {"0 2 2 2 0 2", "0 2 2 2 1 2", "1 2 2 2 0 2"}) {
    Row r = Row::universal(6);
    std::istringstream in(text);
    for (std::size_t p = 0; p < 6; ++p) {
      char ch;
      in >> ch;
      if (ch == '1') r.ones.insert(p);
      if (ch == '0') r.zeros.insert(p);
    }
    three.rows.push_back(r);
  }
  auto converted = to_012(r1);
  for (const auto& r : converted.rows) CHECK(r.is_012());
  CHECK(denoted(converted) == denoted(three));
  CHECK(denoted(to_012(enumerate_compact(fixtures::sigma("eq38.imp")))) ==
        denoted(enumerate_compact(fixtures::sigma("eq38.imp"))));
}

TEST_CASE("Satisfiability of systems with complications", "[rows]") {
  auto u = Universe::numbered(3);
  HornSystem unsat(fixtures::implications(u, {"-> 1", "1 -> 2"}), fixtures::sets(u, {"1 2"}));
  auto r = horn_satisfiable(unsat);
  CHECK_FALSE(r.satisfiable);
  CHECK(render_set(*u, r.bottom) == "1 2");
  CHECK(count(enumerate_horn(unsat)) == 0);

  HornSystem sat(fixtures::implications(u, {"-> 1"}), fixtures::sets(u, {"1 2"}));
  CHECK(horn_satisfiable(sat).satisfiable);
  CHECK(count(enumerate_horn(sat)) == 2);

  HornSystem none(fixtures::implications(u, {"1 -> 2"}), fixtures::sets(u, {"{}"}));
  CHECK_FALSE(horn_satisfiable(none).satisfiable);
  CHECK(count(enumerate_horn(none)) == 0);
}

TEST_CASE("Compression to one complication", "[rows]") {
  auto s = fixtures::sigma("eq38.imp");
  HornSystem h(s, fixtures::family("gamma38.fam"));
  auto out = theorem6_compress(h);
  REQUIRE(out.gamma().size() == 1);
  CHECK(out.gamma()[0].is_full());
  CHECK(same_sets(SetFamily(s.universe_ptr(), denotation(enumerate_horn(out))),
                  SetFamily(s.universe_ptr(), denotation(enumerate_horn(h)))));

  HornSystem pure(s);
  auto p = theorem6_compress(pure);
  CHECK(p.gamma().empty());
  CHECK(p.sigma().size() == gd_base(s).size());

  auto u = Universe::numbered(2);
  HornSystem dead(fixtures::implications(u, {"-> 1 2"}), fixtures::sets(u, {"1"}));
  auto d = theorem6_compress(dead);
  CHECK(count(enumerate_horn(d)) == 0);
  CHECK(d.size() == 2);
}

TEST_CASE("Rows denote exactly the models, disjointly", "[rows][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto u = Universe::numbered(n);
    auto ms = oracle::random_sigma(rng, n, trial % 9);
    auto s = oracle::from_masks(u, ms);
    std::vector<AttrSet> gamma;
    for (auto m : oracle::random_family(rng, n, trial % 3)) gamma.push_back(oracle::set(n, m));
    HornSystem h(s, SetFamily(u, gamma));
    auto flags = oracle::models(ms, n);
    std::vector<oracle::Mask> expect;
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x)
      if (flags[x] && h.is_model(oracle::set(n, x))) expect.push_back(x);

    auto rs = enumerate_horn(h);
    auto d = denoted(rs);  // sorted with repeats; equals expect only if rows are disjoint
    CHECK(d == expect);
    CHECK(count(rs) == expect.size());
    CHECK(denoted(to_012(rs)) == expect);
    for (const auto& r : rs.rows)
      for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x)
        if (r.contains(oracle::set(n, x))) CHECK(std::binary_search(expect.begin(), expect.end(), x));
    CHECK(horn_satisfiable(h).satisfiable == !expect.empty());
  }
}
