#ifndef SYMLEX_FLATTEN_HPP
#define SYMLEX_FLATTEN_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "symlex/model.hpp"

namespace symlex {

struct Layout;

/// One atomic cell of the flat search space. Cell values are int64
/// encodings: bool 0/1, ints as themselves, enum atoms by declaration
/// position, unnamed atoms by index, occurrence counts as counts,
/// definedness guards 0/1.
struct FlatCell {
  std::int64_t lo = 0;
  std::int64_t hi = 0; // inclusive
  Domain dom;          // what the encoding means; freq cells use int(0..cap)
  std::string path;    // position label, e.g. "M[2_T1, 1_T2]"
};

struct LAtom {
  int cell = -1;
};

struct LTuple {
  std::vector<Layout> comps;
};

/// Entry layouts row-major, last dimension fastest.
struct LMatrix {
  std::vector<std::vector<Value>> indexLists;
  std::vector<Layout> entries;
};

/// Occurrence block: freqCells[i] holds the multiplicity of universe[i].
struct LMSet {
  std::vector<Value> universe; // ascending under cmp
  std::vector<int> freqCells;
  int maxOccur = 1;
  MSetFlavor role = MSetFlavor::MSet;
};

/// Key-distinct block (a lowered function): one value layout per key of
/// the key universe, keys ascending. guardCells is empty iff the function
/// is total; guard 0 marks a key undefined and forces its value block to
/// the all-minimum padding, keeping decode a bijection.
struct LFun {
  std::vector<Value> keys; // ascending under cmp
  std::vector<Layout> valueLayouts;
  std::vector<int> guardCells;
  Domain valueDom; // lowered
};

struct Layout {
  std::variant<LAtom, LTuple, LMatrix, LMSet, LFun> node;
  Domain dom; // the lowered domain this layout realises
};

struct FlatVar {
  std::string name;
  Domain lowered;
  Layout layout;
};

struct FlatSpace {
  std::vector<FlatCell> cells;
  std::vector<FlatVar> vars;

  /// Product of all cell ranges, saturating at 2^63-1.
  std::uint64_t assignment_count() const;

  /// True iff the structural side-conditions hold: every undefined key of
  /// a partial function carries its canonical all-minimum padding.
  bool decode_valid(const std::vector<std::int64_t> &flat) const;

  /// Rebuilds the Assignment. Bijective on valid flat vectors.
  /// pre: decode_valid(flat).
  Assignment decode(const std::vector<std::int64_t> &flat) const;

  /// Inverse of decode. pre: a holds a value of each variable's domain.
  std::vector<std::int64_t> encode(const Assignment &a) const;

  /// The cell ids under a layout subtree, in emission order.
  static void collect_cells(const Layout &l, std::vector<int> &out);
};

/// Decomposes every decision variable of a typechecked model into atomic
/// cells: atoms stay single cells, tuples and matrices concatenate their
/// parts, multisets become occurrence blocks over their ascending element
/// universe, functions become per-key value blocks (guarded when partial).
/// Throws BudgetError past cellBudget, OutOfScopeError on unsupported
/// domain kinds.
FlatSpace flatten(const Model &m, std::uint64_t cellBudget = 10000000);

std::int64_t atom_to_int(const Value &atom);
Value int_to_atom(const Domain &atomDom, std::int64_t enc);

} // namespace symlex

#endif
