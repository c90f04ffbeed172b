#include "symlex/action.hpp"

#include <variant>

namespace symlex {

namespace {

Value transformMatrix(const Permutation &p, const MatrixV &m) {
  std::size_t dims = m.indexLists.size();
  if (dims == 0)
    return matrixV(m.indexLists, {transform(p, m.entries.front())});
  std::vector<std::size_t> extent(dims);
  std::vector<bool> permuted(dims, false);
  for (std::size_t d = 0; d < dims; ++d) {
    extent[d] = m.indexLists[d].size();
    const auto *u = std::get_if<UnnamedV>(&m.indexLists[d].front().node);
    permuted[d] = u && u->tag == p.tag();
  }
  std::vector<std::size_t> stride(dims, 1);
  for (std::size_t d = dims - 1; d-- > 0;)
    stride[d] = stride[d + 1] * extent[d + 1];

  std::vector<Value> entries;
  entries.reserve(m.entries.size());
  std::vector<std::size_t> idx(dims, 0); // 0-based multi-index of the result
  for (std::size_t flat = 0; flat < m.entries.size(); ++flat) {
    std::size_t src = 0;
    for (std::size_t d = 0; d < dims; ++d) {
      std::size_t k = idx[d];
      if (permuted[d])
        k = static_cast<std::size_t>(
                p.preimage(static_cast<int>(idx[d]) + 1)) -
            1;
      src += k * stride[d];
    }
    entries.push_back(transform(p, m.entries[src]));
    for (std::size_t d = dims; d-- > 0;) {
      if (++idx[d] < extent[d])
        break;
      idx[d] = 0;
    }
  }
  return matrixV(m.indexLists, std::move(entries));
}

} // namespace

Value transform(const Permutation &p, const Value &v) {
  if (const auto *u = std::get_if<UnnamedV>(&v.node)) {
    if (u->tag == p.tag())
      return unnamedV(u->tag, p.image(u->index));
    return v;
  }
  if (const auto *t = std::get_if<TupleV>(&v.node)) {
    std::vector<Value> items;
    items.reserve(t->items.size());
    for (const Value &item : t->items)
      items.push_back(transform(p, item));
    return tupleV(std::move(items));
  }
  if (const auto *m = std::get_if<MatrixV>(&v.node))
    return transformMatrix(p, *m);
  if (const auto *ms = std::get_if<MSetV>(&v.node)) {
    std::vector<Value> items;
    items.reserve(ms->items.size());
    for (const Value &item : ms->items)
      items.push_back(transform(p, item));
    return msetV(std::move(items), ms->flavor);
  }
  return v; // bool, int, and enum atoms are fixed
}

Value transform_dp(const DirectProductElem &e, const Value &v) {
  Value out = v;
  for (const Permutation &p : e.comps)
    out = transform(p, out);
  return out;
}

} // namespace symlex
