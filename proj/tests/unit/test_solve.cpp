#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "symlex/order.hpp"
#include "symlex/solve.hpp"

using namespace symlex;

namespace {

const BreakConfig kConfigs[7] = {
    {BreakMode::Independently, GeneratorFlag::Consecutive},
    {BreakMode::Independently, GeneratorFlag::AllPairs},
    {BreakMode::Independently, GeneratorFlag::AllPermutations},
    {BreakMode::Altogether, GeneratorFlag::Consecutive},
    {BreakMode::Altogether, GeneratorFlag::AllPairs},
    {BreakMode::Altogether, GeneratorFlag::AllPermutations},
    {BreakMode::NoBreaking, GeneratorFlag::AllPermutations},
};

SolveOptions withCfg(BreakMode mode, GeneratorFlag gens) {
  SolveOptions o;
  o.cfg = {mode, gens};
  return o;
}

std::vector<std::string> keyList(const SolveResult &r) {
  std::vector<std::string> out;
  for (const Assignment &a : r.solutions)
    out.push_back(print_value(a.tuple()));
  return out;
}

std::set<std::string> keySet(const SolveResult &r) {
  auto v = keyList(r);
  return {v.begin(), v.end()};
}

void checkAscending(const SolveResult &r) {
  for (std::size_t i = 0; i + 1 < r.solutions.size(); ++i)
    CHECK(cmp(r.solutions[i].tuple(), r.solutions[i + 1].tuple()) == Cmp::LT);
}

std::vector<Permutation> tagSwaps(const Model &m) {
  std::vector<Permutation> swaps;
  for (const auto &[tag, size] : model_tags(m))
    for (int a = 1; a < size; ++a)
      for (int b = a + 1; b <= size; ++b)
        swaps.push_back(parse_cycles(
            "(" + std::to_string(a) + " " + std::to_string(b) + ")", tag, size));
  return swaps;
}

std::set<std::string> orbitOf(const Value &start, const std::vector<Permutation> &swaps) {
  std::set<std::string> seen{print_value(start)};
  std::vector<Value> frontier{start};
  while (!frontier.empty()) {
    Value v = frontier.back();
    frontier.pop_back();
    for (const Permutation &p : swaps) {
      Value w = transform(p, v);
      if (seen.insert(print_value(w)).second)
        frontier.push_back(w);
    }
  }
  return seen;
}

/// For a model whose constraints are symmetric in the unnamed atoms:
/// the complete break keeps exactly the oracle's minimal representatives,
/// every config keeps at least one member of every orbit, configs nest
/// between the complete break and no breaking, and the compiled filter
/// agrees with the semantic predicate everywhere.
void checkBreakingProperties(const std::string &text) {
  Model m = parse_model(text);
  REQUIRE(typecheck(m).empty());
  OrbitInfo oracle = orbit_oracle(m);
  SolveResult none =
      enumerate_solutions(m, withCfg(BreakMode::NoBreaking, GeneratorFlag::AllPermutations));
  REQUIRE(none.solutions.size() == oracle.solutionCount);

  auto swaps = tagSwaps(m);
  std::vector<std::set<std::string>> orbits;
  std::size_t memberTotal = 0;
  for (const Assignment &rep : oracle.orbitReps) {
    orbits.push_back(orbitOf(rep.tuple(), swaps));
    memberTotal += orbits.back().size();
  }
  CHECK(orbits.size() == oracle.orbitCount);
  CHECK(memberTotal == none.solutions.size());

  SolveResult full =
      enumerate_solutions(m, withCfg(BreakMode::Altogether, GeneratorFlag::AllPermutations));
  CHECK(full.solutions.size() == oracle.orbitCount);
  std::set<std::string> repKeys;
  for (const Assignment &rep : oracle.orbitReps)
    repKeys.insert(print_value(rep.tuple()));
  CHECK(keySet(full) == repKeys);

  std::set<std::string> noneKeys = keySet(none);
  std::set<std::string> fullKeys = keySet(full);
  for (const BreakConfig &cfg : kConfigs) {
    SolveOptions o;
    o.cfg = cfg;
    SolveResult r = enumerate_solutions(m, o);
    checkAscending(r);
    std::set<std::string> keys = keySet(r);
    for (const auto &orbit : orbits) {
      bool hit = false;
      for (const std::string &k : keys)
        if (orbit.count(k)) {
          hit = true;
          break;
        }
      CHECK_MESSAGE(hit, "an orbit lost all its solutions");
    }
    CHECK(std::includes(keys.begin(), keys.end(), fullKeys.begin(), fullKeys.end()));
    CHECK(std::includes(noneKeys.begin(), noneKeys.end(), keys.begin(), keys.end()));
    SolveOptions s = o;
    s.semanticFilter = true;
    CHECK(keyList(enumerate_solutions(m, s)) == keyList(r));
  }
}

} // namespace

TEST_CASE("column of three booleans under each config") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T] of bool\n");
  SolveResult none =
      enumerate_solutions(m, withCfg(BreakMode::NoBreaking, GeneratorFlag::AllPermutations));
  CHECK(none.solutions.size() == 8);
  CHECK(none.checked == 8);
  CHECK(none.constraintCount == 0);

  SolveResult full =
      enumerate_solutions(m, withCfg(BreakMode::Altogether, GeneratorFlag::AllPermutations));
  CHECK(full.solutions.size() == 4);

  SolveResult adj =
      enumerate_solutions(m, withCfg(BreakMode::Independently, GeneratorFlag::Consecutive));
  CHECK(adj.constraintCount == 2);
  CHECK(keyList(adj) == keyList(full));

  std::vector<Value> idx{unnamedV("T", 1), unnamedV("T", 2), unnamedV("T", 3)};
  CHECK(full.solutions[0].at("M") ==
        matrixV({idx}, {boolV(false), boolV(false), boolV(false)}));
  CHECK(full.solutions[1].at("M") ==
        matrixV({idx}, {boolV(false), boolV(false), boolV(true)}));
  CHECK(full.solutions[3].at("M") ==
        matrixV({idx}, {boolV(true), boolV(true), boolV(true)}));

  OrbitInfo oracle = orbit_oracle(m);
  CHECK(oracle.solutionCount == 8);
  CHECK(oracle.orbitCount == 4);
}

TEST_CASE("pair of booleans has three orbits") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find M : matrix indexed by [T] of bool\n");
  OrbitInfo oracle = orbit_oracle(m);
  CHECK(oracle.solutionCount == 4);
  REQUIRE(oracle.orbitCount == 3);
  std::vector<Value> idx{unnamedV("T", 1), unnamedV("T", 2)};
  CHECK(oracle.orbitReps[0].at("M") == matrixV({idx}, {boolV(false), boolV(false)}));
  CHECK(oracle.orbitReps[1].at("M") == matrixV({idx}, {boolV(false), boolV(true)}));
  CHECK(oracle.orbitReps[2].at("M") == matrixV({idx}, {boolV(true), boolV(true)}));
}

TEST_CASE("square boolean matrix on one type counts relations up to renaming") {
  // 2 atoms: 16 relations in 10 classes; 3 atoms: 512 in 104.
  Model m2 = parse_model("letting T be new type of size 2\n"
                         "find M : matrix indexed by [T,T] of bool\n");
  OrbitInfo o2 = orbit_oracle(m2);
  CHECK(o2.solutionCount == 16);
  CHECK(o2.orbitCount == 10);

  Model m3 = parse_model("letting T be new type of size 3\n"
                         "find M : matrix indexed by [T,T] of bool\n");
  OrbitInfo o3 = orbit_oracle(m3);
  CHECK(o3.solutionCount == 512);
  CHECK(o3.orbitCount == 104);
  SolveResult full =
      enumerate_solutions(m3, withCfg(BreakMode::Altogether, GeneratorFlag::AllPermutations));
  CHECK(full.solutions.size() == 104);
  CHECK(full.constraintCount <= 35); // 3!^... one tag twice: at most |S3|-1 elements
}

TEST_CASE("two-sided matrix symmetry gives seven classes of 2x2 boolean matrices") {
  Model m = parse_model("letting T1 be new type of size 2\n"
                        "letting T2 be new type of size 2\n"
                        "find M : matrix indexed by [T1,T2] of bool\n");
  OrbitInfo oracle = orbit_oracle(m);
  CHECK(oracle.solutionCount == 16);
  CHECK(oracle.orbitCount == 7);
}

TEST_CASE("order-2 semigroups: eight tables, five up to renaming") {
  Model m = parse_model(
      "letting T be new type of size 2\n"
      "find f : function (total) (T,T) --> T\n"
      "such that forAll i, j, k : T . f(f(i, j), k) = f(i, f(j, k))\n");
  REQUIRE(typecheck(m).empty());
  OrbitInfo oracle = orbit_oracle(m);
  CHECK(oracle.solutionCount == 8);
  CHECK(oracle.orbitCount == 5);
  SolveResult full =
      enumerate_solutions(m, withCfg(BreakMode::Altogether, GeneratorFlag::AllPermutations));
  CHECK(full.solutions.size() == 5);
}

TEST_CASE("partial maps between two-atom types form four classes") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "letting U be new type of size 2\n"
                        "find f : function T --> U\n");
  OrbitInfo oracle = orbit_oracle(m);
  CHECK(oracle.solutionCount == 9);
  CHECK(oracle.orbitCount == 4);
}

TEST_CASE("soundness, monotonicity, and filter agreement across configs") {
  checkBreakingProperties("letting T be new type of size 3\n"
                          "find M : matrix indexed by [T] of bool\n");
  checkBreakingProperties("letting T be new type of size 2\n"
                          "find M : matrix indexed by [T,T] of bool\n");
  checkBreakingProperties("letting T be new type of size 3\n"
                          "find M : matrix indexed by [T] of bool\n"
                          "such that (sum i : T . toInt(M[i])) = 1\n");
  checkBreakingProperties(
      "letting T be new type of size 2\n"
      "find f : function (total) (T,T) --> T\n"
      "such that forAll i, j, k : T . f(f(i, j), k) = f(i, f(j, k))\n");
  checkBreakingProperties("letting T be new type of size 2\n"
                          "letting U be new type of size 2\n"
                          "find f : function T --> U\n");
  checkBreakingProperties("letting T be new type of size 2\n"
                          "find s : set of (T, T)\n");
  checkBreakingProperties("letting T be new type of size 3\n"
                          "find M : matrix indexed by [T,T] of bool\n");
}

TEST_CASE("thread count does not change results") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T,T] of bool\n");
  SolveOptions one = withCfg(BreakMode::Altogether, GeneratorFlag::AllPermutations);
  SolveOptions three = one;
  three.threads = 3;
  SolveOptions eight = one;
  eight.threads = 8;
  auto base = keyList(enumerate_solutions(m, one));
  CHECK(keyList(enumerate_solutions(m, three)) == base);
  CHECK(keyList(enumerate_solutions(m, eight)) == base);
}

TEST_CASE("assignment budget is enforced") {
  Model m = parse_model("letting T be new type of size 3\n"
                        "find M : matrix indexed by [T] of bool\n");
  SolveOptions o;
  o.assignmentBudget = 5;
  CHECK_THROWS_WITH_AS(enumerate_solutions(m, o), doctest::Contains("assignments"),
                       BudgetError);
  CHECK_THROWS_AS(orbit_oracle(m, o), BudgetError);
}

TEST_CASE("oracle rejects constraints that pin individual atoms") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find x : T\n"
                        "such that x = 1_T\n");
  REQUIRE(typecheck(m).empty());
  CHECK_THROWS_WITH_AS(orbit_oracle(m), doctest::Contains("not symmetric"), Error);
}

TEST_CASE("model without variables has one empty solution") {
  Model m = parse_model("letting n be 3\n"
                        "such that n = 3\n");
  SolveResult r = enumerate_solutions(m);
  CHECK(r.solutions.size() == 1);
  CHECK(r.checked == 1);
  Model bad = parse_model("letting n be 3\n"
                          "such that n = 4\n");
  CHECK(enumerate_solutions(bad).solutions.empty());
}

TEST_CASE("unsatisfiable model yields no solutions under any config") {
  Model m = parse_model("letting T be new type of size 2\n"
                        "find M : matrix indexed by [T] of bool\n"
                        "such that M[1_T] != M[1_T]\n");
  for (const BreakConfig &cfg : kConfigs) {
    SolveOptions o;
    o.cfg = cfg;
    CHECK(enumerate_solutions(m, o).solutions.empty());
  }
  OrbitInfo oracle = orbit_oracle(m);
  CHECK(oracle.orbitCount == 0);
  CHECK(oracle.orbitReps.empty());
}
