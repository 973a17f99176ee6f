#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "fgybe/solutions.hpp"
#include "test_util.hpp"

using namespace fgybe;

namespace {

SolutionPair pair_of(const char* w, const char* v) {
  return SolutionPair(parse_word(w, 2, 2), parse_word(v, 2, 2));
}

const SolutionPair kArtin = pair_of("y", "y^-1 x y");

// The catalog-side census oracle: all family instances (plain and dual)
// whose total length fits the bound.  Parameters are exponents, so the
// sweep range [-bound, bound] is exhaustive.
std::set<SolutionPair, PairLess> family_prediction(std::int64_t bound) {
  std::set<SolutionPair, PairLess> out;
  auto add = [&](const FamilyId& f) {
    SolutionPair p = family_instantiate(f);
    if (p.W.length() + p.V.length() <= bound) out.insert(p);
  };
  for (int dual_flag = 0; dual_flag < 2; ++dual_flag) {
    bool d = dual_flag == 1;
    for (int id : {2, 3, 5, 6, 8, 9, 10, 11, 12})
      add(FamilyId{id, std::nullopt, std::nullopt, d});
    for (int id : {1, 4, 7})
      for (std::int64_t m = -bound; m <= bound; ++m)
        add(FamilyId{id, std::nullopt, m, d});
    for (std::int64_t s = -bound; s <= bound; ++s)
      for (std::int64_t m = -bound; m <= bound; ++m)
        add(FamilyId{13, s, m, d});
  }
  return out;
}

// The census exceeds the catalog prediction by exactly two sporadic
// solutions, (1, y x) and its dual (x y, 1); both pass all three
// equations (verified directly and via the braid relation) but match no
// catalog family.  They are frozen here as known catalog gaps.
std::set<SolutionPair, PairLess> census_expectation(std::int64_t bound) {
  auto out = family_prediction(bound);
  if (bound >= 2) {
    out.insert(pair_of("1", "y x"));
    out.insert(pair_of("x y", "1"));
  }
  return out;
}

}  // namespace

TEST_CASE("first equation verdicts", "[solutions]") {
  CHECK(check_T(kArtin).holds);
  CHECK(check_T(pair_of("x", "y")).holds);

  auto t = check_T(pair_of("x y", "y"));
  CHECK_FALSE(t.holds);
  CHECK(format_word(t.lhs) == "x y^2 z");
  CHECK(format_word(t.rhs) == "x y z");
}

TEST_CASE("second equation verdicts", "[solutions]") {
  CHECK(check_M(kArtin).holds);
  CHECK(check_M(pair_of("x", "y")).holds);

  // (x, x y) passes the first equation but fails the other two.
  CHECK(check_T(pair_of("x", "x y")).holds);
  auto m = check_M(pair_of("x", "x y"));
  CHECK_FALSE(m.holds);
  CHECK(format_word(m.lhs) == "x^2 y");
  CHECK(format_word(m.rhs) == "x y");
}

TEST_CASE("third equation verdicts", "[solutions]") {
  CHECK(check_B(pair_of("x y^-1 x^-1", "x y^2")).holds);
  CHECK(check_B(pair_of("x", "y")).holds);

  auto b = check_B(pair_of("x y^-1 x^-1", "x y^3"));
  CHECK_FALSE(b.holds);
  CHECK(format_word(b.lhs) == "x y^3 z^3");
  CHECK(format_word(b.rhs) == "x y^2 z^3 y z^3");

  auto b2 = check_B(pair_of("x", "x y"));
  CHECK_FALSE(b2.holds);
  CHECK(format_word(b2.lhs) == "x y z");
  CHECK(format_word(b2.rhs) == "x y^2 z");
}

TEST_CASE("power pairs satisfy all three equations", "[solutions]") {
  // (y^s, x^m) is always a solution; in particular (y^2, x).
  for (auto p : {pair_of("y^2", "x"), pair_of("y^3", "x^-2"),
                 pair_of("y^-1", "x^4")}) {
    CAPTURE(format_pair(p));
    CHECK(check_T(p).holds);
    CHECK(check_M(p).holds);
    CHECK(check_B(p).holds);
  }
}

TEST_CASE("full reports", "[solutions]") {
  CHECK(is_solution(pair_of("1", "x y")).is_solution());
  CHECK(is_solution(pair_of("y^3", "x^-2")).is_solution());

  CheckReport r = is_solution(pair_of("x y", "y"));
  CHECK_FALSE(r.t_holds);
  CHECK_FALSE(r.is_solution());
  REQUIRE(r.t_witness.has_value());
  CHECK(format_word(r.t_witness->lhs) == "x y^2 z");
}

TEST_CASE("dual is the strand-reversal involution", "[solutions]") {
  CHECK(dual(pair_of("y", "x^-1")) == pair_of("y^-1", "x"));
  CHECK(dual(pair_of("y^-1", "x^-1")) == pair_of("y^-1", "x^-1"));
  CHECK(dual(pair_of("x", "y")) == pair_of("x", "y"));
  CHECK(dual(kArtin) == pair_of("x^-1 y x", "x"));

  std::mt19937_64 rng(testutil::suite_seed() + 30);
  for (int iter = 0; iter < 500; ++iter) {
    SolutionPair p(testutil::random_reduced_word(rng, 2, 8),
                   testutil::random_reduced_word(rng, 2, 8));
    CHECK(dual(dual(p)) == p);
  }
}

TEST_CASE("boundary-fixing test", "[solutions]") {
  CHECK(is_boundary_fixing(pair_of("x y^-1 x^-1", "x y^2")));
  CHECK(is_boundary_fixing(pair_of("x", "y")));
  CHECK(is_boundary_fixing(kArtin));
  CHECK(is_boundary_fixing(pair_of("y^-1", "y x y")));
  CHECK_FALSE(is_boundary_fixing(pair_of("y", "x^-1")));
  CHECK_FALSE(is_boundary_fixing(pair_of("y", "y x^-1 y")));
}

TEST_CASE("catalog instantiation", "[solutions]") {
  CHECK(family_instantiate({7, std::nullopt, 2, false}) ==
        pair_of("y", "y^-2 x y^2"));
  CHECK(family_instantiate({12, std::nullopt, std::nullopt, false}) ==
        pair_of("x^-1 y^-1 x", "y^2 x"));
  CHECK(family_instantiate({1, std::nullopt, 0, false}) == pair_of("1", "1"));
  CHECK(family_instantiate({13, -1, 1, false}) == pair_of("y^-1", "x"));
  CHECK(family_instantiate({7, std::nullopt, 1, true}) ==
        pair_of("x^-1 y x", "x"));

  CHECK_THROWS_AS(family_instantiate({7, std::nullopt, std::nullopt, false}),
                  Error);
  CHECK_THROWS_AS(family_instantiate({5, std::nullopt, 1, false}), Error);
  CHECK_THROWS_AS(family_instantiate({13, std::nullopt, 1, false}), Error);
  CHECK_THROWS_AS(family_instantiate({0, std::nullopt, std::nullopt, false}),
                  Error);
  CHECK_THROWS_AS(family_instantiate({14, std::nullopt, std::nullopt, false}),
                  Error);
}

TEST_CASE("classification reports every match", "[solutions]") {
  auto fs = classify(pair_of("y", "x"));
  REQUIRE(fs.size() == 2);
  CHECK(format_family(fs[0]) == "F7[m=0]");
  CHECK(format_family(fs[1]) == "F13[s=1,m=1]");
  CHECK(format_family_set(fs) == "F7[m=0],F13[s=1,m=1]");

  CHECK(format_family_set(classify(pair_of("y", "x^-1"))) ==
        "F6,F13[s=1,m=-1]");

  // dual of the conjugation family, m = 1: (x^-1 y x, x).
  CHECK(format_family_set(classify(pair_of("x^-1 y x", "x"))) == "F7*[m=1]");

  CHECK(format_family_set(classify(pair_of("1", "1"))) ==
        "F1[m=0],F13[s=0,m=0]");
  CHECK(format_family_set(classify(pair_of("1", "x"))) ==
        "F1[m=1],F13[s=0,m=1]");
  CHECK(format_family_set(classify(pair_of("y", "1"))) ==
        "F1*[m=1],F13[s=1,m=0]");
  CHECK(format_family_set(classify(pair_of("1", "y"))) == "F2,F4*[m=0]");
  CHECK(format_family_set(classify(pair_of("1", "x y"))) == "F3");
  CHECK(format_family_set(classify(pair_of("x y^-1 x^-1", "x y^2"))) == "F11");
  CHECK(format_family_set(classify(pair_of("x^2 y", "y^-1 x^-1 y"))) ==
        "F12*");
  CHECK(classify(pair_of("x y", "y")).empty());
  // the two sporadic solutions outside the catalog
  CHECK(classify(pair_of("1", "y x")).empty());
  CHECK(classify(pair_of("x y", "1")).empty());
}

TEST_CASE("census at tiny bounds", "[solutions]") {
  auto zero = enumerate_solutions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].pair == pair_of("1", "1"));
  CHECK(format_family_set(zero[0].families) == "F1[m=0],F13[s=0,m=0]");

  auto two = enumerate_solutions(2);
  CHECK(two.size() == 24);
  std::set<SolutionPair, PairLess> found;
  for (const auto& rec : two) found.insert(rec.pair);
  CHECK(found == census_expectation(2));
  for (const auto& rec : two) {
    CHECK(rec.report.is_solution());
    if (rec.pair != pair_of("1", "y x") && rec.pair != pair_of("x y", "1"))
      CHECK_FALSE(rec.families.empty());
  }
}

TEST_CASE("census matches the catalog prediction at bound 4", "[solutions]") {
  auto records = enumerate_solutions(4);
  std::set<SolutionPair, PairLess> found;
  for (const auto& rec : records) found.insert(rec.pair);
  CHECK(found == census_expectation(4));

  // The only census members outside the catalog are the two sporadics.
  for (const auto& rec : records)
    if (rec.families.empty())
      CHECK((rec.pair == pair_of("1", "y x") ||
             rec.pair == pair_of("x y", "1")));

  // Census order is deterministic and duplicate-free.
  for (std::size_t i = 1; i < records.size(); ++i) {
    CHECK((word_less(records[i - 1].pair.W, records[i].pair.W) ||
           (records[i - 1].pair.W == records[i].pair.W &&
            word_less(records[i - 1].pair.V, records[i].pair.V))));
  }
}

TEST_CASE("parallel census equals sequential census", "[solutions]") {
  auto seq = enumerate_solutions(4, 1);
  auto par = enumerate_solutions(4, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].pair == par[i].pair);
    CHECK(format_family_set(seq[i].families) ==
          format_family_set(par[i].families));
  }
}

TEST_CASE("solutions are closed under dual and inverse", "[solutions]") {
  for (const auto& rec : enumerate_solutions(4)) {
    CAPTURE(format_pair(rec.pair));
    CHECK(is_solution(dual(rec.pair)).is_solution());
    if (is_automorphism(rec.pair))
      CHECK(is_solution(invert_pair(rec.pair)).is_solution());
  }
}

TEST_CASE("mixed-letter solutions generate rank two", "[solutions]") {
  for (const auto& rec : enumerate_solutions(5)) {
    if (letter_count(rec.pair.W, Generator{2}) > 0 &&
        letter_count(rec.pair.V, Generator{1}) > 0) {
      CAPTURE(format_pair(rec.pair));
      CHECK(generated_rank(rec.pair.W, rec.pair.V) == 2);
    }
  }
}

TEST_CASE("orbit closure under dual and inverse", "[solutions]") {
  Orbit o = solution_orbit(pair_of("x y^-1 x^-1", "x y^2"));
  REQUIRE(o.members.size() == 4);
  CHECK(o.representative == pair_of("x^2 y", "y^-1 x^-1 y"));
  std::set<SolutionPair, PairLess> members(o.members.begin(), o.members.end());
  CHECK(members.count(pair_of("x y^-1 x^-1", "x y^2")) == 1);
  CHECK(members.count(pair_of("x^-1 y^-1 x", "y^2 x")) == 1);

  Orbit fixed = solution_orbit(pair_of("y", "x"));
  CHECK(fixed.members.size() == 1);

  Orbit six = solution_orbit(pair_of("y", "x^-1"));
  CHECK(six.members.size() == 2);
  CHECK(six.representative == pair_of("y", "x^-1"));
}

TEST_CASE("orbit grouping covers the census", "[solutions]") {
  auto records = enumerate_solutions(3);
  auto orbits = group_orbits(records);
  std::set<SolutionPair, PairLess> covered;
  for (const Orbit& o : orbits)
    for (const SolutionPair& m : o.members) covered.insert(m);
  for (const auto& rec : records) CHECK(covered.count(rec.pair) == 1);
}
