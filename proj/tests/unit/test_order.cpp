#include <doctest.h>

#include <vector>

#include "symlex/domain.hpp"
#include "symlex/error.hpp"
#include "symlex/order.hpp"
#include "symlex/value.hpp"

using namespace symlex;

TEST_CASE("atoms order by value, position, or index") {
  CHECK(cmp(intV(1), intV(2)) == Cmp::LT);
  CHECK(cmp(intV(2), intV(2)) == Cmp::EQ);
  CHECK(cmp(intV(3), intV(2)) == Cmp::GT);
  CHECK(cmp(boolV(false), boolV(true)) == Cmp::LT);
  CHECK(cmp(boolV(true), boolV(false)) == Cmp::GT);
  CHECK(cmp(enumV("C", "red", 1), enumV("C", "blue", 2)) == Cmp::LT);
  CHECK(cmp(unnamedV("T", 1), unnamedV("T", 3)) == Cmp::LT);
  CHECK(cmp(unnamedV("T", 2), unnamedV("T", 2)) == Cmp::EQ);
}

TEST_CASE("values of different kinds are incomparable") {
  CHECK_THROWS_AS(cmp(intV(1), boolV(true)), Error);
  CHECK_THROWS_AS(cmp(unnamedV("T", 1), unnamedV("U", 1)), Error);
  CHECK_THROWS_AS(cmp(enumV("C", "red", 1), enumV("D", "red", 1)), Error);
  CHECK_THROWS_AS(cmp(intV(1), tupleV({intV(1), intV(2)})), Error);
}

TEST_CASE("tuples compare lexicographically") {
  Value a = tupleV({intV(1), intV(9)});
  Value b = tupleV({intV(2), intV(0)});
  CHECK(cmp(a, b) == Cmp::LT);
  CHECK(cmp(b, a) == Cmp::GT);
  CHECK(cmp(a, a) == Cmp::EQ);
  CHECK_THROWS_AS(cmp(a, tupleV({intV(1)})), Error);
}

TEST_CASE("matrices compare lexicographically in row-major order") {
  std::vector<std::vector<Value>> ix = {{intV(1), intV(2)}, {intV(1), intV(2)}};
  Value a = matrixV(ix, {intV(0), intV(0), intV(1), intV(0)});
  Value b = matrixV(ix, {intV(0), intV(0), intV(0), intV(1)});
  // row-major flattening: a = 0,0,1,0 and b = 0,0,0,1
  CHECK(cmp(b, a) == Cmp::LT);
  CHECK(cmp(a, b) == Cmp::GT);
}

TEST_CASE("the empty multiset is the greatest multiset") {
  Value empty = msetV({});
  Value one = msetV({intV(1)});
  CHECK(cmp(one, empty) == Cmp::LT);
  CHECK(cmp(empty, one) == Cmp::GT);
  CHECK(cmp(empty, empty) == Cmp::EQ);
}

TEST_CASE("multisets order by repeated minimum removal") {
  // equal minima cancel; the side that runs out first is greater
  CHECK(cmp(msetV({intV(1), intV(1)}), msetV({intV(1)})) == Cmp::LT);
  CHECK(cmp(msetV({intV(1)}), msetV({intV(1), intV(1)})) == Cmp::GT);
  // distinct minima decide immediately
  CHECK(cmp(msetV({intV(1), intV(5)}), msetV({intV(2)})) == Cmp::LT);
  CHECK(cmp(msetV({intV(2), intV(2)}), msetV({intV(1), intV(9)})) == Cmp::GT);
  CHECK(cmp(msetV({intV(1), intV(2)}), msetV({intV(1), intV(3)})) == Cmp::LT);
}

TEST_CASE("multiset order coincides with negated-occurrence lex order") {
  // every multiset over {1,2,3} with multiplicities <= 2, all pairs
  Domain dom = msetDom(intDom(1, 3), 2);
  std::vector<Value> all = enumerate_values(dom);
  REQUIRE(all.size() == 27);
  std::vector<Value> universe = domain_atoms(intDom(1, 3));
  for (const Value &x : all) {
    for (const Value &y : all) {
      OccurrenceVector ox = occurrence_vector(x, universe);
      OccurrenceVector oy = occurrence_vector(y, universe);
      CHECK(cmp(x, y) == lex_cmp_ints(ox.entries, oy.entries));
    }
  }
}

TEST_CASE("occurrence vectors hold negated multiplicities") {
  Value m = msetV({intV(1), intV(1), intV(3)});
  OccurrenceVector ov = occurrence_vector(m, domain_atoms(intDom(1, 3)));
  CHECK(ov.entries == std::vector<std::int64_t>{-2, 0, -1});
  CHECK_THROWS_AS(occurrence_vector(msetV({intV(9)}), domain_atoms(intDom(1, 3))),
                  Error);
}

TEST_CASE("order laws hold exhaustively on mixed small domains") {
  std::vector<Domain> doms = {
      boolDom(),
      intDom(-2, 2),
      unnamedDom("T", 4),
      tupleDom({boolDom(), unnamedDom("T", 2)}),
      matrixDom({unnamedDom("T", 2)}, intDom(0, 2)),
      msetDom(boolDom(), 2),
      msetDom(tupleDom({boolDom(), boolDom()}), 1),
  };
  for (const Domain &d : doms) {
    std::vector<Value> vals = enumerate_values(d);
    REQUIRE(vals.size() <= 200);
    for (const Value &a : vals) {
      CHECK(cmp(a, a) == Cmp::EQ);
      for (const Value &b : vals) {
        Cmp ab = cmp(a, b);
        Cmp ba = cmp(b, a);
        // antisymmetry and totality
        if (ab == Cmp::EQ) {
          CHECK(ba == Cmp::EQ);
          CHECK(a == b);
        } else {
          CHECK(ab != ba);
        }
        // transitivity
        for (const Value &c : vals) {
          if (ab != Cmp::GT && cmp(b, c) != Cmp::GT)
            CHECK(cmp(a, c) != Cmp::GT);
        }
      }
    }
  }
}

TEST_CASE("lex_cmp compares flat value lists positionwise") {
  std::vector<Value> a = {intV(1), intV(2)};
  std::vector<Value> b = {intV(1), intV(3)};
  CHECK(lex_cmp(a, b) == Cmp::LT);
  CHECK(lex_cmp(a, a) == Cmp::EQ);
  CHECK(lex_cmp(b, a) == Cmp::GT);
  CHECK_THROWS_AS(lex_cmp(a, std::vector<Value>{intV(1)}), Error);
}
