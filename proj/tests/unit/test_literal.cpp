#include <doctest.h>

#include "symlex/error.hpp"
#include "symlex/literal.hpp"
#include "symlex/value.hpp"

using namespace symlex;

namespace {

Value parse(const std::string &s) {
  TypeContext ctx;
  return parse_value(s, ctx);
}

std::string roundtrip(const std::string &s) { return print_value(parse(s)); }

} // namespace

TEST_CASE("atoms round-trip through canonical syntax") {
  CHECK(roundtrip("true") == "true");
  CHECK(roundtrip("false") == "false");
  CHECK(roundtrip("42") == "42");
  CHECK(roundtrip("-7") == "-7");
  CHECK(roundtrip("3_T") == "3_T");
}

TEST_CASE("unnamed atoms grow the inferred type size") {
  TypeContext ctx;
  parse_value("(1_T, 4_T, 2_U)", ctx);
  CHECK(ctx.tagSizes.at("T") == 4);
  CHECK(ctx.tagSizes.at("U") == 2);
}

TEST_CASE("frozen contexts reject unknown and oversized atoms") {
  TypeContext ctx;
  ctx.tagSizes["T"] = 3;
  ctx.frozen = true;
  CHECK(parse_value("3_T", ctx) == unnamedV("T", 3));
  CHECK_THROWS_AS(parse_value("4_T", ctx), ParseError);
  CHECK_THROWS_AS(parse_value("1_U", ctx), ParseError);
}

TEST_CASE("enum labels resolve through the context") {
  TypeContext ctx;
  ctx.enums["Colour"] = {"red", "green"};
  CHECK(parse_value("green", ctx) == enumV("Colour", "green", 2));
  CHECK_THROWS_AS(parse_value("blue", ctx), ParseError);
  CHECK(print_value(enumV("Colour", "green", 2)) == "green");
}

TEST_CASE("tuples need at least two components") {
  CHECK(roundtrip("(1, 2)") == "(1, 2)");
  CHECK(roundtrip("((1, 2), true)") == "((1, 2), true)");
  CHECK_THROWS_AS(parse("(1)"), ParseError);
}

TEST_CASE("one-dimensional matrix literals carry their index") {
  Value v = parse("[true, false; index:T]");
  const auto &m = std::get<MatrixV>(v.node);
  REQUIRE(m.indexLists.size() == 1);
  CHECK(m.indexLists[0] ==
        std::vector<Value>{unnamedV("T", 1), unnamedV("T", 2)});
  CHECK(print_value(v) == "[true, false; index:T]");
  CHECK(roundtrip("[5, 6, 7; index:int(0..2)]") == "[5, 6, 7; index:int(0..2)]");
  CHECK(roundtrip("[1, 2; index:bool]") == "[1, 2; index:bool]");
}

TEST_CASE("matrix index extents must match the literal") {
  CHECK_THROWS_AS(parse("[1, 2, 3; index:int(0..1)]"), ParseError);
  TypeContext ctx;
  ctx.tagSizes["T"] = 3;
  ctx.frozen = true;
  CHECK_THROWS_AS(parse_value("[1, 2; index:T]", ctx), ParseError);
}

TEST_CASE("nested rows give multi-dimensional matrices") {
  Value v = parse("[[1, 2, 3], [4, 5, 6]; index:T,int(1..3)]");
  const auto &m = std::get<MatrixV>(v.node);
  REQUIRE(m.indexLists.size() == 2);
  CHECK(m.indexLists[0].size() == 2);
  CHECK(m.indexLists[1].size() == 3);
  CHECK(m.entries == std::vector<Value>{intV(1), intV(2), intV(3), intV(4),
                                        intV(5), intV(6)});
  CHECK(print_value(v) == "[[1, 2, 3], [4, 5, 6]; index:T,int(1..3)]");
}

TEST_CASE("ragged and misnested matrix literals are rejected") {
  CHECK_THROWS_AS(parse("[[1, 2], [3]; index:T,int(1..2)]"), ParseError);
  CHECK_THROWS_AS(parse("[[1, 2], [3, 4]; index:T]"), ParseError);
  CHECK_THROWS_AS(parse("[1, 2; index:T,U]"), ParseError);
  CHECK_THROWS_AS(parse("[1, 2]"), ParseError);
}

TEST_CASE("matrix entries may themselves be matrices") {
  std::string s = "[[1; index:U], [2; index:U]; index:T]";
  CHECK(roundtrip(s) == "[[1; index:U], [2; index:U]; index:T]");
}

TEST_CASE("multisets print sorted with multiplicity") {
  CHECK(roundtrip("mset{2, 1, 1}") == "mset{1, 1, 2}");
  CHECK(roundtrip("mset{}") == "mset{}");
}

TEST_CASE("sets deduplicate on parse") {
  Value v = parse("set{1, 2, 2}");
  CHECK(std::get<MSetV>(v.node).items.size() == 2);
  CHECK(print_value(v) == "set{1, 2}");
}

TEST_CASE("functions parse arrow pairs and sort by key") {
  std::string canonical = "function{1_T-->5, 2_T-->4, 3_T-->4}";
  Value v = parse("function{2_T --> 4, 1_T-->5, 3_T-->4}");
  CHECK(print_value(v) == canonical);
  const auto &items = std::get<MSetV>(v.node).items;
  REQUIRE(items.size() == 3);
  CHECK(items[0] == tupleV({unnamedV("T", 1), intV(5)}));
  CHECK_THROWS_AS(parse("function{1_T-->2, 1_T-->3}"), ParseError);
  CHECK(roundtrip("function{}") == "function{}");
}

TEST_CASE("functions may map tuple keys") {
  std::string s = "function{(1_T, 1_T)-->2_T, (1_T, 2_T)-->1_T}";
  CHECK(roundtrip(s) == s);
}

TEST_CASE("relations hold tuples and deduplicate") {
  Value v = parse("relation{(2, 1), (1, 2), (2, 1)}");
  CHECK(print_value(v) == "relation{(1, 2), (2, 1)}");
  CHECK_THROWS_AS(parse("relation{1, 2}"), ParseError);
}

TEST_CASE("parse errors carry positions and reject trailing input") {
  try {
    TypeContext ctx;
    parse_value("mset{1,\n  ]}", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("1 2"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("0_T"), ParseError);
}
