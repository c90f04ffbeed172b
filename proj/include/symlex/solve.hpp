#ifndef SYMLEX_SOLVE_HPP
#define SYMLEX_SOLVE_HPP

#include <cstdint>
#include <vector>

#include "symlex/eval.hpp"
#include "symlex/symbreak.hpp"

namespace symlex {

struct SolveOptions {
  BreakConfig cfg;
  bool semanticFilter = false; // filter by the predicate, not compiled lex
  int threads = 1;
  std::uint64_t cellBudget = 10000000;
  std::uint64_t assignmentBudget = 10000000;
};

struct SolveResult {
  std::vector<Assignment> solutions; // ascending under cmp of tupled values
  std::uint64_t checked = 0;         // full assignments visited
  std::size_t constraintCount = 0;   // lex constraints after simplification
  double seconds = 0.0;
};

/// Enumerates every valid flat assignment, keeps those satisfying the
/// model's constraints and the config's symmetry filter, and returns them
/// sorted. Identical results for any thread count.
SolveResult enumerate_solutions(const Model &m, const SolveOptions &opts = {});

struct OrbitInfo {
  std::uint64_t orbitCount = 0;
  std::vector<Assignment> orbitReps; // the minimal member of each orbit
  std::uint64_t solutionCount = 0;
};

/// Partitions the unconstrained-by-symmetry (NoBreaking) solution set into
/// orbits by closing over per-tag transpositions, independently of the
/// lex-leader machinery. Requires the model's constraints to be symmetric
/// in the unnamed atoms; throws Error when a solution's image is not a
/// solution.
OrbitInfo orbit_oracle(const Model &m, const SolveOptions &opts = {});

} // namespace symlex

#endif
