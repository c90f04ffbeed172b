#include <string>

#include "doctest.h"
#include "symlex/model.hpp"

using namespace symlex;

namespace {

std::string diagsJoined(const Model &m) {
  std::string out;
  for (const std::string &d : typecheck(m))
    out += d + "\n";
  return out;
}

} // namespace

TEST_CASE("unnamed type and matrix variable declarations parse") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T,T] of T\n");
  REQUIRE(m.unnamed.size() == 1);
  CHECK(m.unnamed[0].tag == "T");
  CHECK(m.unnamed[0].size == 3);
  CHECK(m.tagSize("T") == 3);
  CHECK(m.tagSize("U") == -1);
  const VarDecl *v = m.findVar("M");
  REQUIRE(v != nullptr);
  CHECK(v->dom == matrixDom({unnamedDom("T", 3), unnamedDom("T", 3)},
                            unnamedDom("T", 3)));
}

TEST_CASE("function variable declarations parse, partial by default") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find f : function (T,T) --> T\n"
                        "find g : function (total) T --> T\n");
  const auto &fd = std::get<FunctionDom>(m.findVar("f")->dom.node);
  CHECK(*fd.from == tupleDom({unnamedDom("T", 3), unnamedDom("T", 3)}));
  CHECK(*fd.to == unnamedDom("T", 3));
  CHECK_FALSE(fd.total);
  CHECK(std::get<FunctionDom>(m.findVar("g")->dom.node).total);
}

TEST_CASE("enum declarations, int lettings, and constant folding") {
  Model m = parse_model("letting C be new type enum {r, g, b}\n"
                        "letting n be 2 + 3\n"
                        "find x : int(1..n)\n"
                        "find c : C\n");
  REQUIRE(m.enums.size() == 1);
  CHECK(m.enums[0].atoms == std::vector<std::string>{"r", "g", "b"});
  REQUIRE(m.lettings.size() == 1);
  CHECK(m.lettings[0].value == 5);
  CHECK(m.findVar("x")->dom == intDom(1, 5));
  CHECK(m.findVar("c")->dom == enumDom("C", {"r", "g", "b"}));
}

TEST_CASE("collection domains parse") {
  Model m = parse_model(
      "letting T be new type of size 2\n"
      "find s : set of T\n"
      "find b : mset (maxOccur 2) of int(1..3)\n"
      "find r : relation of (T * T * bool)\n"
      "find t : (int(0..1), bool)\n");
  CHECK(m.findVar("s")->dom == setDom(unnamedDom("T", 2)));
  CHECK(m.findVar("b")->dom == msetDom(intDom(1, 3), 2));
  CHECK(m.findVar("r")->dom ==
        relationDom({unnamedDom("T", 2), unnamedDom("T", 2), boolDom()}));
  CHECK(m.findVar("t")->dom == tupleDom({intDom(0, 1), boolDom()}));
}

TEST_CASE("mset domains require a maxOccur bound") {
  CHECK_THROWS_WITH_AS(parse_model("find b : mset of bool\n"),
                       doctest::Contains("maxOccur"), ParseError);
}

TEST_CASE("multiple finds per statement and multiple constraints") {
  Model m = parse_model("find x, y : bool\n"
                        "such that x, y, x = y\n");
  CHECK(m.vars.size() == 2);
  CHECK(m.findVar("y")->dom == boolDom());
  CHECK(m.constraints.size() == 3);
}

TEST_CASE("duplicate names are rejected") {
  CHECK_THROWS_AS(parse_model("letting T be new type of size 2\n"
                              "find T : bool\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_model("letting C be new type enum {a, b}\n"
                              "find a : bool\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_model("find x : bool\nfind x : bool\n"), ParseError);
}

TEST_CASE("unnamed literals in expressions are range checked at parse") {
  CHECK_THROWS_AS(parse_model("letting T be new type of size 2\n"
                              "find x : T\n"
                              "such that x = 5_T\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_model("find x : bool\nsuch that x = 1_T\n"),
                  ParseError);
}

TEST_CASE("comment lines and blank lines are skipped") {
  Model m = parse_model("$ a header comment\n"
                        "\n"
                        "letting T be new type of size 2 $ trailing\n"
                        "# another comment style\n"
                        "find x : T\n");
  CHECK(m.unnamed.size() == 1);
  CHECK(m.vars.size() == 1);
}

TEST_CASE("operator precedence shapes the tree") {
  Model m = parse_model("find a, b, c : bool\nfind i, j : int(1..9)\n"
                        "such that a /\\ b \\/ c\n"
                        "such that i + j * 2 = i * 2 + j\n"
                        "such that a -> b -> c\n");
  CHECK(print_expr(*m.constraints[0]) == "a /\\ b \\/ c");
  const auto &orE = std::get<EBinOp>(m.constraints[0]->node);
  CHECK(orE.op == "\\/");
  CHECK(print_expr(*m.constraints[1]) == "i + j * 2 = i * 2 + j");
  const auto &imp = std::get<EBinOp>(m.constraints[2]->node);
  CHECK(imp.op == "->");
  CHECK(std::holds_alternative<EVar>(imp.lhs->node)); // right associative
}

TEST_CASE("parenthesised subexpressions keep their parens when needed") {
  Model m = parse_model("find a, b, c : bool\n"
                        "such that (a \\/ b) /\\ c\n"
                        "such that !(a /\\ b)\n");
  CHECK(print_expr(*m.constraints[0]) == "(a \\/ b) /\\ c");
  CHECK(print_expr(*m.constraints[1]) == "!(a /\\ b)");
}

TEST_CASE("quantifiers, indexing, application, cardinality round trip") {
  std::string text = "letting T be new type of size 3\n"
                     "find M : matrix indexed by [T,T] of T\n"
                     "find f : function (T,T) --> T\n"
                     "find s : set of T\n"
                     "such that forAll i, j : T . M[i, j] = f(i, j)\n"
                     "such that exists i : T . i in s\n"
                     "such that |s| <= 2\n"
                     "such that sum i : int(1..3) . i * i = 14\n";
  Model m = parse_model(text);
  CHECK(m.constraints.size() == 4);
  std::string once = print_model(m);
  std::string twice = print_model(parse_model(once));
  CHECK(once == twice);
}

TEST_CASE("printing a model reproduces every declaration form") {
  std::string text = "letting T be new type of size 2\n"
                     "letting C be new type enum {r, g}\n"
                     "letting n be 4\n"
                     "find M : matrix indexed by [T,bool] of int(0..n)\n"
                     "find f : function (total) C --> T\n"
                     "find rel : relation of (T * C)\n"
                     "find b : mset (maxOccur 3) of bool\n"
                     "such that M[1_T, true] = 0\n";
  std::string once = print_model(parse_model(text));
  CHECK(once == print_model(parse_model(once)));
  CHECK(once.find("letting T be new type of size 2") != std::string::npos);
  CHECK(once.find("letting C be new type enum {r, g}") != std::string::npos);
  CHECK(once.find("letting n be 4") != std::string::npos);
  CHECK(once.find("mset (maxOccur 3) of bool") != std::string::npos);
  CHECK(once.find("function (total) C --> T") != std::string::npos);
}

TEST_CASE("unsupported domain kinds parse as out-of-scope placeholders") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find p : partition from T\n");
  const auto *u = std::get_if<UnsupportedDom>(&m.findVar("p")->dom.node);
  REQUIRE(u != nullptr);
  CHECK(u->kind == "partition");
}

TEST_CASE("typecheck accepts the well-typed corpus shapes") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T,T] of T\n"
                        "such that forAll i, j : T . M[M[i, j], j] = i\n");
  CHECK(typecheck(m).empty());
}

TEST_CASE("ordered comparison of unnamed atoms is rejected") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find x, y : T\n"
                        "such that x < y\n");
  auto diags = typecheck(m);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].find("unnamed atoms admit only = and !=") !=
        std::string::npos);
  CHECK(diags[0].find("line 3") != std::string::npos);
}

TEST_CASE("matrix indexing is checked for arity and index type") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T,T] of T\n"
                        "such that M[1, 2] = 1_T\n"
                        "such that M[1_T] = 1_T\n");
  std::string all = diagsJoined(m);
  CHECK(all.find("index 1 expects T, got int") != std::string::npos);
  CHECK(all.find("2 dimensions, got 1 indices") != std::string::npos);
}

TEST_CASE("mismatched comparisons and non-bool constraints are reported") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find x : T\nfind n : int(1..3)\n"
                        "such that x = n\n"
                        "such that n + 1\n");
  std::string all = diagsJoined(m);
  CHECK(all.find("cannot compare T with int") != std::string::npos);
  CHECK(all.find("constraint must be bool") != std::string::npos);
}

TEST_CASE("unknown names and application arity are reported") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find f : function (T,T) --> T\n"
                        "such that f(1_T) = 1_T\n"
                        "such that missing = 1\n");
  std::string all = diagsJoined(m);
  CHECK(all.find("argument expects (T, T), got T") != std::string::npos);
  CHECK(all.find("unknown name missing") != std::string::npos);
}

TEST_CASE("quantifier bodies must match the quantifier kind") {
  Model m = parse_model("find x : bool\n"
                        "such that forAll i : int(1..2) . i + 1\n"
                        "such that sum i : int(1..2) . x = 0\n");
  std::string all = diagsJoined(m);
  CHECK(all.find("forAll body must be bool") != std::string::npos);
  CHECK(all.find("sum body must be int") != std::string::npos);
}

TEST_CASE("collection literal elements must agree") {
  Model m = parse_model("find x : bool\n"
                        "such that x = (1 in mset{1, true})\n");
  CHECK(diagsJoined(m).find("mixed types") != std::string::npos);
}

TEST_CASE("empty collection literals unify with any element type") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find s : set of T\n"
                        "such that s = set{}\n"
                        "such that |mset{}| = 0\n");
  CHECK(typecheck(m).empty());
}

TEST_CASE("tuple projection needs a literal index in range") {
  Model m = parse_model("find t : (int(1..2), bool)\n"
                        "find i : int(1..2)\n"
                        "such that t[i] = 1\n"
                        "such that t[3] = 1\n"
                        "such that t[2]\n");
  std::string all = diagsJoined(m);
  CHECK(all.find("integer literal") != std::string::npos);
  CHECK(all.find("out of range") != std::string::npos);
  CHECK(typecheck(parse_model("find t : (int(1..2), bool)\nsuch that t[2]\n"))
            .empty());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_model("letting T be new type of size 2\nfind x : unknownD\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
}
