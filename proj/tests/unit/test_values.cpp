#include <doctest.h>

#include "symlex/error.hpp"
#include "symlex/value.hpp"

using namespace symlex;

TEST_CASE("atom factories and structural equality") {
  CHECK(boolV(true) == boolV(true));
  CHECK(boolV(true) != boolV(false));
  CHECK(intV(3) == intV(3));
  CHECK(intV(3) != intV(4));
  CHECK(unnamedV("T", 2) == unnamedV("T", 2));
  CHECK(unnamedV("T", 2) != unnamedV("U", 2));
  CHECK(unnamedV("T", 2) != unnamedV("T", 3));
  CHECK(enumV("C", "red", 1) == enumV("C", "red", 1));
  CHECK(intV(1) != boolV(true));
}

TEST_CASE("tuples and matrices compare componentwise") {
  Value t1 = tupleV({intV(1), boolV(false)});
  Value t2 = tupleV({intV(1), boolV(false)});
  Value t3 = tupleV({intV(1), boolV(true)});
  CHECK(t1 == t2);
  CHECK(t1 != t3);

  std::vector<std::vector<Value>> ix = {{unnamedV("T", 1), unnamedV("T", 2)}};
  Value m1 = matrixV(ix, {intV(5), intV(6)});
  Value m2 = matrixV(ix, {intV(5), intV(6)});
  Value m3 = matrixV(ix, {intV(6), intV(5)});
  CHECK(m1 == m2);
  CHECK(m1 != m3);
}

TEST_CASE("matrix literals must be total") {
  std::vector<std::vector<Value>> ix = {{unnamedV("T", 1), unnamedV("T", 2)}};
  CHECK_THROWS_AS(matrixV(ix, {intV(5)}), Error);
}

TEST_CASE("mset factory canonicalises order") {
  Value a = msetV({intV(2), intV(1), intV(1)});
  Value b = msetV({intV(1), intV(2), intV(1)});
  CHECK(a == b);
  const auto &items = std::get<MSetV>(a.node).items;
  REQUIRE(items.size() == 3);
  CHECK(items[0] == intV(1));
  CHECK(items[1] == intV(1));
  CHECK(items[2] == intV(2));
}

TEST_CASE("set factory deduplicates") {
  Value s = setV({intV(2), intV(1), intV(2)});
  const auto &items = std::get<MSetV>(s.node).items;
  REQUIRE(items.size() == 2);
  CHECK(items[0] == intV(1));
  CHECK(items[1] == intV(2));
}

TEST_CASE("flavor does not affect equality") {
  Value a = msetV({intV(1)}, MSetFlavor::MSet);
  Value b = msetV({intV(1)}, MSetFlavor::Set);
  CHECK(a == b);
}

TEST_CASE("assignments expose variables by name and as a tuple") {
  Assignment asg;
  asg.byVar.push_back({"x", intV(7)});
  asg.byVar.push_back({"y", boolV(true)});
  CHECK(asg.at("x") == intV(7));
  CHECK(asg.at("y") == boolV(true));
  CHECK_THROWS_AS(asg.at("z"), Error);
  CHECK(asg.tuple() == tupleV({intV(7), boolV(true)}));
}
