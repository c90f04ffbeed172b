#ifndef SYMLEX_VALUE_HPP
#define SYMLEX_VALUE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symlex {

struct Value;

struct BoolV {
  bool v = false;
};

struct IntV {
  std::int64_t v = 0;
};

/// An atom of an enumerated type, identified by its 1-based declaration
/// position. The label is carried along for printing.
struct EnumV {
  std::string enumName;
  std::string label;
  int pos = 1;
};

/// An atom of an unnamed type, written i_T. Atoms of distinct tags are
/// never comparable or interchangeable.
struct UnnamedV {
  std::string tag;
  int index = 1; // 1-based
};

struct TupleV {
  std::vector<Value> items;
};

/// Dense total matrix. indexLists holds the ordered atom list of each
/// dimension; entries are stored row-major (last dimension fastest).
struct MatrixV {
  std::vector<std::vector<Value>> indexLists;
  std::vector<Value> entries;
};

/// How a multiset value prints. Sets, functions and relations all lower
/// to multisets; the flavour remembers the surface form and nothing else.
/// It is ignored by comparison and equality.
enum class MSetFlavor { MSet, Set, Function, Relation };

/// Canonical multiset: items kept sorted ascending under cmp, duplicates
/// stored explicitly. Use msetV()/setV() to build one.
struct MSetV {
  std::vector<Value> items;
  MSetFlavor flavor = MSetFlavor::MSet;
};

struct Value {
  std::variant<BoolV, IntV, EnumV, UnnamedV, TupleV, MatrixV, MSetV> node;
};

Value boolV(bool b);
Value intV(std::int64_t n);
Value enumV(std::string enumName, std::string label, int pos);
Value unnamedV(std::string tag, int index);
Value tupleV(std::vector<Value> items);
Value matrixV(std::vector<std::vector<Value>> indexLists,
              std::vector<Value> entries);

/// Builds a canonical multiset: sorts the items ascending.
Value msetV(std::vector<Value> items, MSetFlavor flavor = MSetFlavor::MSet);

/// Builds a set value: sorts and drops duplicate items.
Value setV(std::vector<Value> items, MSetFlavor flavor = MSetFlavor::Set);

/// Trusts the caller that items are already sorted ascending.
Value msetVSorted(std::vector<Value> items,
                  MSetFlavor flavor = MSetFlavor::MSet);

bool isAtom(const Value &v);

/// Structural equality. Multisets are canonical so this coincides with
/// semantic equality; flavours are ignored.
bool operator==(const Value &a, const Value &b);
inline bool operator!=(const Value &a, const Value &b) { return !(a == b); }

/// One value per decision variable, in declaration order.
struct Assignment {
  std::vector<std::pair<std::string, Value>> byVar;

  /// The induced single decision value (V1, ..., Vd).
  Value tuple() const;
  const Value &at(const std::string &name) const;
};

bool operator==(const Assignment &a, const Assignment &b);

} // namespace symlex

#endif
