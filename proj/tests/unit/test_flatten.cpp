#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "symlex/flatten.hpp"
#include "symlex/literal.hpp"
#include "symlex/order.hpp"

using namespace symlex;

namespace {

// Every flat vector in cell order, cells counting lo..hi, last cell fastest.
std::vector<std::vector<std::int64_t>> allFlats(const FlatSpace &fs) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  cur.reserve(fs.cells.size());
  for (const FlatCell &c : fs.cells)
    cur.push_back(c.lo);
  for (;;) {
    out.push_back(cur);
    std::size_t i = cur.size();
    while (i-- > 0) {
      if (++cur[i] <= fs.cells[i].hi)
        break;
      cur[i] = fs.cells[i].lo;
      if (i == 0)
        return out;
    }
    if (cur.empty())
      return out;
  }
}

} // namespace

TEST_CASE("a matrix of bools flattens to one cell per entry") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find M : matrix indexed by [T] of bool\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 2);
  CHECK(fs.cells[0].lo == 0);
  CHECK(fs.cells[0].hi == 1);
  CHECK(fs.cells[0].path == "M[1_T]");
  CHECK(fs.cells[1].path == "M[2_T]");
  CHECK(fs.assignment_count() == 4);
}

TEST_CASE("a set of atoms flattens to boolean occurrence cells") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find s : set of T\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(fs.cells[static_cast<std::size_t>(i)].lo == 0);
    CHECK(fs.cells[static_cast<std::size_t>(i)].hi == 1);
  }
  CHECK(fs.cells[0].path == "has(s, 1_T)");
  CHECK(fs.cells[2].path == "has(s, 3_T)");
}

TEST_CASE("a total function flattens to one tagged cell per key") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "letting U be new type of size 3\n"
                        "find f : function (total) T --> U\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 2);
  for (const FlatCell &c : fs.cells) {
    CHECK(c.lo == 1);
    CHECK(c.hi == 3);
    CHECK(std::get<UnnamedDom>(c.dom.node).tag == "U");
  }
  CHECK(fs.cells[0].path == "f(1_T)");
  CHECK(fs.cells[1].path == "f(2_T)");
}

TEST_CASE("a partial function adds definedness guards") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find f : function T --> bool\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 4);
  CHECK(fs.cells[0].path == "def(f(1_T))");
  CHECK(fs.cells[1].path == "f(1_T)");
  CHECK(fs.cells[2].path == "def(f(2_T))");
  CHECK(fs.cells[3].path == "f(2_T)");
}

TEST_CASE("multi-argument function keys spread into the path") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find f : function (total) (T,T) --> T\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 4);
  CHECK(fs.cells[0].path == "f(1_T, 1_T)");
  CHECK(fs.cells[3].path == "f(2_T, 2_T)");
}

TEST_CASE("an mset keeps counting cells up to its bound") {
  Model m = parse_model("find b : mset (maxOccur 2) of bool\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 2);
  CHECK(fs.cells[0].path == "freq(b, false)");
  CHECK(fs.cells[0].hi == 2);
  CHECK(fs.assignment_count() == 9);
}

TEST_CASE("tuples and nested matrices concatenate their parts") {
  Model m = parse_model(
      "letting T be new type of size 2\n"
      "find t : (bool, int(3..5))\n"
      "find M : matrix indexed by [T,bool] of int(0..1)\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 2 + 4);
  CHECK(fs.cells[0].path == "t.1");
  CHECK(fs.cells[1].path == "t.2");
  CHECK(fs.cells[1].lo == 3);
  CHECK(fs.cells[1].hi == 5);
  CHECK(fs.cells[2].path == "M[1_T, false]");
  CHECK(fs.cells[5].path == "M[2_T, true]");
}

TEST_CASE("decode is a bijection between valid flats and domain values") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find x : bool\n"
                        "find s : set of T\n"
                        "find f : function T --> bool\n"
                        "find g : function (total) T --> T\n");
  FlatSpace fs = flatten(m);
  std::uint64_t expected = 2 * 4 * 9 * 4; // bool * set * partial f * total g
  std::set<std::string> seen;
  std::uint64_t valid = 0;
  for (const auto &flat : allFlats(fs)) {
    if (!fs.decode_valid(flat))
      continue;
    ++valid;
    Assignment a = fs.decode(flat);
    for (const auto &[name, v] : a.byVar)
      CHECK(check_value(m.findVar(name)->dom, v));
    CHECK(fs.encode(a) == flat);
    std::string key;
    for (const auto &[name, v] : a.byVar)
      key += print_value(v) + ";";
    seen.insert(key);
  }
  CHECK(valid == expected);
  CHECK(seen.size() == expected);
}

TEST_CASE("invalid padding of an undefined key is rejected") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find f : function T --> T\n");
  FlatSpace fs = flatten(m);
  // cells: def(f(1_T)), f(1_T), def(f(2_T)), f(2_T)
  CHECK(fs.decode_valid({0, 1, 0, 1}));
  CHECK_FALSE(fs.decode_valid({0, 2, 0, 1}));
  CHECK(fs.decode_valid({1, 2, 0, 1}));
  Assignment a = fs.decode({1, 2, 1, 1});
  CHECK(print_value(a.at("f")) == "function{1_T-->2_T, 2_T-->1_T}");
}

TEST_CASE("encode round-trips values built from literals") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T,T] of T\n"
                        "find r : relation of (T * bool)\n");
  FlatSpace fs = flatten(m);
  TypeContext cx = m.typeContext();
  Assignment a;
  a.byVar.emplace_back(
      "M", parse_value("[[2_T, 1_T, 3_T], [1_T, 1_T, 2_T], [3_T, 3_T, 1_T]; "
                       "index:T,T]",
                       cx));
  a.byVar.emplace_back("r", parse_value("relation{(1_T, true), (3_T, false)}", cx));
  std::vector<std::int64_t> flat = fs.encode(a);
  CHECK(fs.decode_valid(flat));
  Assignment back = fs.decode(flat);
  CHECK(back == a);
}

TEST_CASE("oversized universes stop at the cell budget") {
  Model m = parse_model("find s : set of (mset (maxOccur 9) of int(1..40))\n");
  CHECK_THROWS_AS(flatten(m), BudgetError);
  Model m2 = parse_model("letting T be new type of size 4\n"
                         "find s : set of (set of (T, T, T))\n");
  CHECK_THROWS_WITH_AS(flatten(m2), doctest::Contains("cell budget"),
                       BudgetError);
}

TEST_CASE("a cell budget small enough rejects even matrices") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T,T] of bool\n");
  CHECK_THROWS_AS(flatten(m, 4), BudgetError);
  CHECK(flatten(m, 9).cells.size() == 9);
}

TEST_CASE("function values may be compound") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find f : function (total) bool --> set of T\n");
  FlatSpace fs = flatten(m);
  REQUIRE(fs.cells.size() == 4);
  CHECK(fs.cells[0].path == "has(f(false), 1_T)");
  CHECK(fs.cells[3].path == "has(f(true), 2_T)");
  std::uint64_t valid = 0;
  for (const auto &flat : allFlats(fs))
    if (fs.decode_valid(flat))
      ++valid;
  CHECK(valid == 16);
  Assignment a = fs.decode({1, 0, 0, 1});
  CHECK(print_value(a.at("f")) ==
        "function{false-->set{1_T}, true-->set{2_T}}");
}
