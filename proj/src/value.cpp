#include "symlex/value.hpp"

#include <algorithm>

#include "symlex/error.hpp"
#include "symlex/order.hpp"

namespace symlex {

Value boolV(bool b) { return Value{BoolV{b}}; }
Value intV(std::int64_t n) { return Value{IntV{n}}; }

Value enumV(std::string enumName, std::string label, int pos) {
  return Value{EnumV{std::move(enumName), std::move(label), pos}};
}

Value unnamedV(std::string tag, int index) {
  return Value{UnnamedV{std::move(tag), index}};
}

Value tupleV(std::vector<Value> items) { return Value{TupleV{std::move(items)}}; }

Value matrixV(std::vector<std::vector<Value>> indexLists,
              std::vector<Value> entries) {
  std::size_t expect = 1;
  for (const auto &dim : indexLists)
    expect *= dim.size();
  if (entries.size() != expect)
    throw Error("matrix literal is not total: expected " +
                std::to_string(expect) + " entries, got " +
                std::to_string(entries.size()));
  return Value{MatrixV{std::move(indexLists), std::move(entries)}};
}

Value msetV(std::vector<Value> items, MSetFlavor flavor) {
  std::stable_sort(items.begin(), items.end(),
                   [](const Value &a, const Value &b) { return cmp(a, b) == Cmp::LT; });
  return Value{MSetV{std::move(items), flavor}};
}

Value setV(std::vector<Value> items, MSetFlavor flavor) {
  std::stable_sort(items.begin(), items.end(),
                   [](const Value &a, const Value &b) { return cmp(a, b) == Cmp::LT; });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const Value &a, const Value &b) { return a == b; }),
              items.end());
  return Value{MSetV{std::move(items), flavor}};
}

Value msetVSorted(std::vector<Value> items, MSetFlavor flavor) {
  return Value{MSetV{std::move(items), flavor}};
}

bool isAtom(const Value &v) {
  return std::holds_alternative<BoolV>(v.node) ||
         std::holds_alternative<IntV>(v.node) ||
         std::holds_alternative<EnumV>(v.node) ||
         std::holds_alternative<UnnamedV>(v.node);
}

namespace {

bool listEq(const std::vector<Value> &a, const std::vector<Value> &b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i]))
      return false;
  return true;
}

} // namespace

bool operator==(const Value &a, const Value &b) {
  if (a.node.index() != b.node.index())
    return false;
  if (const auto *x = std::get_if<BoolV>(&a.node))
    return x->v == std::get<BoolV>(b.node).v;
  if (const auto *x = std::get_if<IntV>(&a.node))
    return x->v == std::get<IntV>(b.node).v;
  if (const auto *x = std::get_if<EnumV>(&a.node)) {
    const auto &y = std::get<EnumV>(b.node);
    return x->enumName == y.enumName && x->pos == y.pos;
  }
  if (const auto *x = std::get_if<UnnamedV>(&a.node)) {
    const auto &y = std::get<UnnamedV>(b.node);
    return x->tag == y.tag && x->index == y.index;
  }
  if (const auto *x = std::get_if<TupleV>(&a.node))
    return listEq(x->items, std::get<TupleV>(b.node).items);
  if (const auto *x = std::get_if<MatrixV>(&a.node)) {
    const auto &y = std::get<MatrixV>(b.node);
    if (x->indexLists.size() != y.indexLists.size())
      return false;
    for (std::size_t d = 0; d < x->indexLists.size(); ++d)
      if (!listEq(x->indexLists[d], y.indexLists[d]))
        return false;
    return listEq(x->entries, y.entries);
  }
  const auto *x = std::get_if<MSetV>(&a.node);
  return listEq(x->items, std::get<MSetV>(b.node).items);
}

Value Assignment::tuple() const {
  std::vector<Value> items;
  items.reserve(byVar.size());
  for (const auto &kv : byVar)
    items.push_back(kv.second);
  return tupleV(std::move(items));
}

const Value &Assignment::at(const std::string &name) const {
  for (const auto &kv : byVar)
    if (kv.first == name)
      return kv.second;
  throw Error("no value for variable " + name);
}

bool operator==(const Assignment &a, const Assignment &b) {
  if (a.byVar.size() != b.byVar.size())
    return false;
  for (std::size_t i = 0; i < a.byVar.size(); ++i)
    if (a.byVar[i].first != b.byVar[i].first ||
        !(a.byVar[i].second == b.byVar[i].second))
      return false;
  return true;
}

} // namespace symlex
