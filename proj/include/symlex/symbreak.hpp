#ifndef SYMLEX_SYMBREAK_HPP
#define SYMLEX_SYMBREAK_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symlex/action.hpp"
#include "symlex/flatten.hpp"
#include "symlex/perm.hpp"

namespace symlex {

enum class BreakMode { Independently, Altogether, NoBreaking };

struct BreakConfig {
  BreakMode mode = BreakMode::Altogether;
  GeneratorFlag gens = GeneratorFlag::AllPermutations;
};

/// One lex position read from the flat space: a cell value, optionally
/// pushed through a permutation (entry transform of an unnamed atom),
/// optionally negated (occurrence counts and definedness guards compare
/// reversed), optionally zeroed while a guard cell is 0 (both sides of an
/// undefined partial-function key must tie), or a plain constant.
struct AtomicTerm {
  enum class Kind { Var, Const, Image };
  Kind kind = Kind::Var;
  int cell = -1;                           // Var, Image
  std::int64_t k = 0;                      // Const
  bool negated = false;
  int guardCell = -1;                      // -1: unguarded
  std::shared_ptr<const Permutation> perm; // Image
};

bool operator==(const AtomicTerm &a, const AtomicTerm &b);
inline bool operator!=(const AtomicTerm &a, const AtomicTerm &b) {
  return !(a == b);
}

/// Encodes lhs <=lex rhs over equal-length term vectors; strict stays
/// false. An empty constraint is the trivially-true marker.
struct LexConstraint {
  std::vector<AtomicTerm> lhs;
  std::vector<AtomicTerm> rhs;
  bool strict = false;
  std::string origin; // group element this constraint came from
};

/// Tags of the model in declaration order, with sizes.
std::vector<std::pair<std::string, int>> model_tags(const Model &m);

/// The direct-product elements a config breaks against, in deterministic
/// dp_elements order. NoBreaking gives the empty list.
std::vector<DirectProductElem>
break_elements(const std::vector<std::pair<std::string, int>> &tags,
               const BreakConfig &cfg);

/// True iff x is not moved below itself by any element: for every e,
/// cmp(x, transform_dp(e, x)) != GT.
bool semantic_lex_leader(const BreakConfig &cfg,
                         const std::vector<std::pair<std::string, int>> &tags,
                         const Value &x);

/// Compiles X <=lex transform(e, X) for every break element e, pushing the
/// transform through the flat layout: matrix entries pull from permuted
/// preimage indices, unnamed entries read through the component
/// permutation, occurrence blocks remap their universe, function blocks
/// remap their keys. Constraints are simplified; trivially-true ones are
/// dropped.
std::vector<LexConstraint> compile_lex_leader(const Model &m,
                                              const FlatSpace &fs,
                                              const BreakConfig &cfg);

/// Drops every position whose two terms are syntactically identical.
LexConstraint simplify_lex(LexConstraint c);

std::int64_t eval_term(const AtomicTerm &t,
                       const std::vector<std::int64_t> &flat);

/// lhs <=lex rhs under eval_term.
bool lex_satisfied(const LexConstraint &c,
                   const std::vector<std::int64_t> &flat);

/// Textual low-level dump: the flat variable table, then one line per
/// constraint.
std::string dump_constraints(const FlatSpace &fs,
                             const std::vector<LexConstraint> &cs);

} // namespace symlex

#endif
