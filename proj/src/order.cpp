#include "symlex/order.hpp"

#include "symlex/error.hpp"

namespace symlex {

namespace {

Cmp cmpInt(std::int64_t a, std::int64_t b) {
  if (a < b)
    return Cmp::LT;
  if (a > b)
    return Cmp::GT;
  return Cmp::EQ;
}

Cmp cmpList(const std::vector<Value> &xs, const std::vector<Value> &ys) {
  if (xs.size() != ys.size())
    throw Error("incomparable values: component counts differ");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Cmp c = cmp(xs[i], ys[i]);
    if (c != Cmp::EQ)
      return c;
  }
  return Cmp::EQ;
}

// Min-removal rule on canonically sorted item lists. The empty multiset
// is greater than every non-empty one.
Cmp cmpMSet(const std::vector<Value> &a, const std::vector<Value> &b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size()) {
    Cmp c = cmp(a[i], b[i]);
    if (c != Cmp::EQ)
      return c;
    ++i;
  }
  if (i == a.size() && i == b.size())
    return Cmp::EQ;
  return i == a.size() ? Cmp::GT : Cmp::LT;
}

} // namespace

Cmp cmp(const Value &a, const Value &b) {
  if (a.node.index() != b.node.index())
    throw Error("incomparable values: different kinds");
  if (const auto *x = std::get_if<BoolV>(&a.node))
    return cmpInt(x->v ? 1 : 0, std::get<BoolV>(b.node).v ? 1 : 0);
  if (const auto *x = std::get_if<IntV>(&a.node))
    return cmpInt(x->v, std::get<IntV>(b.node).v);
  if (const auto *x = std::get_if<EnumV>(&a.node)) {
    const auto &y = std::get<EnumV>(b.node);
    if (x->enumName != y.enumName)
      throw Error("incomparable values: enum " + x->enumName + " vs " +
                  y.enumName);
    return cmpInt(x->pos, y.pos);
  }
  if (const auto *x = std::get_if<UnnamedV>(&a.node)) {
    const auto &y = std::get<UnnamedV>(b.node);
    if (x->tag != y.tag)
      throw Error("incomparable values: tag " + x->tag + " vs " + y.tag);
    return cmpInt(x->index, y.index);
  }
  if (const auto *x = std::get_if<TupleV>(&a.node))
    return cmpList(x->items, std::get<TupleV>(b.node).items);
  if (const auto *x = std::get_if<MatrixV>(&a.node)) {
    const auto &y = std::get<MatrixV>(b.node);
    if (x->indexLists.size() != y.indexLists.size())
      throw Error("incomparable values: matrix dimensions differ");
    for (std::size_t d = 0; d < x->indexLists.size(); ++d)
      if (x->indexLists[d].size() != y.indexLists[d].size())
        throw Error("incomparable values: matrix index sets differ");
    return cmpList(x->entries, y.entries);
  }
  const auto &x = std::get<MSetV>(a.node);
  return cmpMSet(x.items, std::get<MSetV>(b.node).items);
}

bool leq(const Value &a, const Value &b) { return cmp(a, b) != Cmp::GT; }

Cmp lex_cmp(const std::vector<Value> &xs, const std::vector<Value> &ys) {
  if (xs.size() != ys.size())
    throw Error("lex_cmp: length mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Cmp c = cmp(xs[i], ys[i]);
    if (c != Cmp::EQ)
      return c;
  }
  return Cmp::EQ;
}

Cmp lex_cmp_ints(const std::vector<std::int64_t> &xs,
                 const std::vector<std::int64_t> &ys) {
  if (xs.size() != ys.size())
    throw Error("lex_cmp: length mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < ys[i])
      return Cmp::LT;
    if (xs[i] > ys[i])
      return Cmp::GT;
  }
  return Cmp::EQ;
}

OccurrenceVector occurrence_vector(const Value &mset,
                                   const std::vector<Value> &universe) {
  const auto *m = std::get_if<MSetV>(&mset.node);
  if (!m)
    throw Error("occurrence_vector: not a multiset value");
  OccurrenceVector out;
  out.universe = universe;
  out.entries.assign(universe.size(), 0);
  for (const Value &item : m->items) {
    bool found = false;
    for (std::size_t k = 0; k < universe.size(); ++k) {
      if (item == universe[k]) {
        --out.entries[k];
        found = true;
        break;
      }
    }
    if (!found)
      throw Error("occurrence_vector: element outside the universe");
  }
  return out;
}

} // namespace symlex
