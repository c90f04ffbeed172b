#include <algorithm>

#include "symlex/flatten.hpp"
#include "symlex/literal.hpp"
#include "symlex/order.hpp"

namespace symlex {

std::int64_t atom_to_int(const Value &atom) {
  if (const auto *b = std::get_if<BoolV>(&atom.node))
    return b->v ? 1 : 0;
  if (const auto *i = std::get_if<IntV>(&atom.node))
    return i->v;
  if (const auto *e = std::get_if<EnumV>(&atom.node))
    return e->pos;
  if (const auto *u = std::get_if<UnnamedV>(&atom.node))
    return u->index;
  throw Error("not an atom");
}

Value int_to_atom(const Domain &atomDom, std::int64_t enc) {
  if (std::holds_alternative<BoolDom>(atomDom.node))
    return boolV(enc != 0);
  if (std::holds_alternative<IntDom>(atomDom.node))
    return intV(enc);
  if (const auto *e = std::get_if<EnumDom>(&atomDom.node))
    return enumV(e->name, e->atoms.at(static_cast<std::size_t>(enc - 1)),
                 static_cast<int>(enc));
  if (const auto *u = std::get_if<UnnamedDom>(&atomDom.node))
    return unnamedV(u->tag, static_cast<int>(enc));
  throw Error("not an atomic domain");
}

namespace {

std::pair<std::int64_t, std::int64_t> atomRange(const Domain &d) {
  if (std::holds_alternative<BoolDom>(d.node))
    return {0, 1};
  if (const auto *i = std::get_if<IntDom>(&d.node))
    return {i->lo, i->hi};
  if (const auto *e = std::get_if<EnumDom>(&d.node))
    return {1, static_cast<std::int64_t>(e->atoms.size())};
  const auto &u = std::get<UnnamedDom>(d.node);
  return {1, u.size};
}

// Function application syntax for value-block paths: tuple keys spread
// into an argument list.
std::string applyPath(const std::string &base, const Value &key) {
  if (const auto *t = std::get_if<TupleV>(&key.node)) {
    std::string out = base + "(";
    for (std::size_t i = 0; i < t->items.size(); ++i)
      out += (i ? ", " : "") + print_value(t->items[i]);
    return out + ")";
  }
  return base + "(" + print_value(key) + ")";
}

struct Builder {
  FlatSpace &fs;
  std::uint64_t budget;

  int addCell(const Domain &dom, std::int64_t lo, std::int64_t hi,
              std::string path) {
    if (fs.cells.size() >= budget)
      throw BudgetError("flattening needs more than " +
                        std::to_string(budget) + " cells (at " + path + ")");
    fs.cells.push_back(FlatCell{lo, hi, dom, std::move(path)});
    return static_cast<int>(fs.cells.size()) - 1;
  }

  std::vector<Value> universeOf(const Domain &elem, const std::string &path) {
    std::uint64_t room = budget - fs.cells.size();
    if (value_count(elem) > room)
      throw BudgetError("the element universe at " + path + " holds " +
                        std::to_string(value_count(elem)) +
                        " values, over the cell budget");
    return enumerate_values(elem, room);
  }

  Layout build(const Domain &d, const std::string &path) {
    if (isAtomDomain(d)) {
      auto [lo, hi] = atomRange(d);
      return Layout{LAtom{addCell(d, lo, hi, path)}, d};
    }
    if (const auto *t = std::get_if<TupleDom>(&d.node)) {
      LTuple lt;
      for (std::size_t i = 0; i < t->components.size(); ++i)
        lt.comps.push_back(
            build(t->components[i], path + "." + std::to_string(i + 1)));
      return Layout{std::move(lt), d};
    }
    if (const auto *mx = std::get_if<MatrixDom>(&d.node)) {
      LMatrix lm;
      for (const Domain &ix : mx->indices)
        lm.indexLists.push_back(domain_atoms(ix));
      std::vector<std::size_t> at(lm.indexLists.size(), 0);
      bool done = lm.indexLists.empty();
      while (!done) {
        std::string entryPath = path + "[";
        for (std::size_t dIx = 0; dIx < at.size(); ++dIx)
          entryPath += (dIx ? ", " : "") +
                       print_value(lm.indexLists[dIx][at[dIx]]);
        entryPath += "]";
        lm.entries.push_back(build(*mx->element, entryPath));
        std::size_t dIx = at.size();
        while (dIx-- > 0) {
          if (++at[dIx] < lm.indexLists[dIx].size())
            break;
          at[dIx] = 0;
          if (dIx == 0)
            done = true;
        }
      }
      return Layout{std::move(lm), d};
    }
    const auto &ms = std::get<MSetDom>(d.node);
    if (ms.keyDistinct) {
      const auto &pair = std::get<TupleDom>(ms.element->node);
      LFun lf;
      lf.valueDom = pair.components[1];
      lf.keys = universeOf(pair.components[0], path);
      for (const Value &key : lf.keys) {
        std::string valPath = applyPath(path, key);
        if (!ms.keyTotal)
          lf.guardCells.push_back(
              addCell(boolDom(), 0, 1, "def(" + valPath + ")"));
        lf.valueLayouts.push_back(build(lf.valueDom, valPath));
      }
      return Layout{std::move(lf), d};
    }
    LMSet lm;
    lm.maxOccur = ms.maxOccur;
    lm.role = ms.role;
    lm.universe = universeOf(*ms.element, path);
    bool setLike = ms.role == MSetFlavor::Set || ms.role == MSetFlavor::Relation;
    for (const Value &u : lm.universe) {
      std::string cellPath = (setLike ? "has(" : "freq(") + path + ", " +
                             print_value(u) + ")";
      if (setLike)
        lm.freqCells.push_back(addCell(boolDom(), 0, 1, cellPath));
      else
        lm.freqCells.push_back(
            addCell(intDom(0, ms.maxOccur), 0, ms.maxOccur, cellPath));
    }
    return Layout{std::move(lm), d};
  }
};

std::size_t indexIn(const std::vector<Value> &sorted, const Value &v) {
  std::size_t lo = 0, hi = sorted.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cmp(sorted[mid], v) == Cmp::LT)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == sorted.size() || !(sorted[lo] == v))
    throw Error("value not in its enumerated universe");
  return lo;
}

bool paddedAtMin(const Layout &l, const std::vector<std::int64_t> &flat,
                 const FlatSpace &fs) {
  std::vector<int> cells;
  FlatSpace::collect_cells(l, cells);
  for (int c : cells)
    if (flat[static_cast<std::size_t>(c)] != fs.cells[static_cast<std::size_t>(c)].lo)
      return false;
  return true;
}

bool validLayout(const Layout &l, const std::vector<std::int64_t> &flat,
                 const FlatSpace &fs) {
  if (const auto *t = std::get_if<LTuple>(&l.node)) {
    for (const Layout &c : t->comps)
      if (!validLayout(c, flat, fs))
        return false;
    return true;
  }
  if (const auto *m = std::get_if<LMatrix>(&l.node)) {
    for (const Layout &e : m->entries)
      if (!validLayout(e, flat, fs))
        return false;
    return true;
  }
  if (const auto *f = std::get_if<LFun>(&l.node)) {
    for (std::size_t i = 0; i < f->keys.size(); ++i) {
      bool defined = f->guardCells.empty() ||
                     flat[static_cast<std::size_t>(f->guardCells[i])] != 0;
      if (!defined) {
        if (!paddedAtMin(f->valueLayouts[i], flat, fs))
          return false;
      } else if (!validLayout(f->valueLayouts[i], flat, fs)) {
        return false;
      }
    }
    return true;
  }
  return true;
}

Value decodeLayout(const Layout &l, const std::vector<std::int64_t> &flat,
                   const FlatSpace &fs) {
  if (const auto *a = std::get_if<LAtom>(&l.node))
    return int_to_atom(l.dom, flat[static_cast<std::size_t>(a->cell)]);
  if (const auto *t = std::get_if<LTuple>(&l.node)) {
    std::vector<Value> items;
    items.reserve(t->comps.size());
    for (const Layout &c : t->comps)
      items.push_back(decodeLayout(c, flat, fs));
    return tupleV(std::move(items));
  }
  if (const auto *m = std::get_if<LMatrix>(&l.node)) {
    std::vector<Value> entries;
    entries.reserve(m->entries.size());
    for (const Layout &e : m->entries)
      entries.push_back(decodeLayout(e, flat, fs));
    return matrixV(m->indexLists, std::move(entries));
  }
  if (const auto *ms = std::get_if<LMSet>(&l.node)) {
    std::vector<Value> items;
    for (std::size_t i = 0; i < ms->universe.size(); ++i) {
      std::int64_t n = flat[static_cast<std::size_t>(ms->freqCells[i])];
      for (std::int64_t k = 0; k < n; ++k)
        items.push_back(ms->universe[i]);
    }
    return msetVSorted(std::move(items), ms->role);
  }
  const auto &f = std::get<LFun>(l.node);
  std::vector<Value> pairs;
  for (std::size_t i = 0; i < f.keys.size(); ++i) {
    bool defined = f.guardCells.empty() ||
                   flat[static_cast<std::size_t>(f.guardCells[i])] != 0;
    if (defined)
      pairs.push_back(
          tupleV({f.keys[i], decodeLayout(f.valueLayouts[i], flat, fs)}));
  }
  return msetVSorted(std::move(pairs), MSetFlavor::Function);
}

void encodeLayout(const Layout &l, const Value &v,
                  std::vector<std::int64_t> &flat, const FlatSpace &fs) {
  if (const auto *a = std::get_if<LAtom>(&l.node)) {
    flat[static_cast<std::size_t>(a->cell)] = atom_to_int(v);
    return;
  }
  if (const auto *t = std::get_if<LTuple>(&l.node)) {
    const auto &tv = std::get<TupleV>(v.node);
    for (std::size_t i = 0; i < t->comps.size(); ++i)
      encodeLayout(t->comps[i], tv.items[i], flat, fs);
    return;
  }
  if (const auto *m = std::get_if<LMatrix>(&l.node)) {
    const auto &mv = std::get<MatrixV>(v.node);
    for (std::size_t i = 0; i < m->entries.size(); ++i)
      encodeLayout(m->entries[i], mv.entries[i], flat, fs);
    return;
  }
  if (const auto *ms = std::get_if<LMSet>(&l.node)) {
    const auto &items = std::get<MSetV>(v.node).items;
    for (int c : ms->freqCells)
      flat[static_cast<std::size_t>(c)] = 0;
    for (const Value &item : items)
      ++flat[static_cast<std::size_t>(ms->freqCells[indexIn(ms->universe, item)])];
    return;
  }
  const auto &f = std::get<LFun>(l.node);
  const auto &items = std::get<MSetV>(v.node).items;
  std::vector<int> sub;
  for (std::size_t i = 0; i < f.keys.size(); ++i) {
    sub.clear();
    FlatSpace::collect_cells(f.valueLayouts[i], sub);
    for (int c : sub)
      flat[static_cast<std::size_t>(c)] = fs.cells[static_cast<std::size_t>(c)].lo;
    if (!f.guardCells.empty())
      flat[static_cast<std::size_t>(f.guardCells[i])] = 0;
  }
  for (const Value &pair : items) {
    const auto &pv = std::get<TupleV>(pair.node);
    std::size_t i = indexIn(f.keys, pv.items[0]);
    if (!f.guardCells.empty())
      flat[static_cast<std::size_t>(f.guardCells[i])] = 1;
    encodeLayout(f.valueLayouts[i], pv.items[1], flat, fs);
  }
}

} // namespace

void FlatSpace::collect_cells(const Layout &l, std::vector<int> &out) {
  if (const auto *a = std::get_if<LAtom>(&l.node)) {
    out.push_back(a->cell);
    return;
  }
  if (const auto *t = std::get_if<LTuple>(&l.node)) {
    for (const Layout &c : t->comps)
      collect_cells(c, out);
    return;
  }
  if (const auto *m = std::get_if<LMatrix>(&l.node)) {
    for (const Layout &e : m->entries)
      collect_cells(e, out);
    return;
  }
  if (const auto *ms = std::get_if<LMSet>(&l.node)) {
    out.insert(out.end(), ms->freqCells.begin(), ms->freqCells.end());
    return;
  }
  const auto &f = std::get<LFun>(l.node);
  for (std::size_t i = 0; i < f.keys.size(); ++i) {
    if (!f.guardCells.empty())
      out.push_back(f.guardCells[i]);
    collect_cells(f.valueLayouts[i], out);
  }
}

std::uint64_t FlatSpace::assignment_count() const {
  const std::uint64_t cap = UINT64_C(0x7fffffffffffffff);
  std::uint64_t n = 1;
  for (const FlatCell &c : cells) {
    std::uint64_t w = static_cast<std::uint64_t>(c.hi - c.lo + 1);
    if (w != 0 && n > cap / w)
      return cap;
    n *= w;
  }
  return n;
}

bool FlatSpace::decode_valid(const std::vector<std::int64_t> &flat) const {
  for (const FlatVar &v : vars)
    if (!validLayout(v.layout, flat, *this))
      return false;
  return true;
}

Assignment FlatSpace::decode(const std::vector<std::int64_t> &flat) const {
  Assignment a;
  for (const FlatVar &v : vars)
    a.byVar.emplace_back(v.name, decodeLayout(v.layout, flat, *this));
  return a;
}

std::vector<std::int64_t> FlatSpace::encode(const Assignment &a) const {
  std::vector<std::int64_t> flat(cells.size(), 0);
  for (const FlatVar &v : vars)
    encodeLayout(v.layout, a.at(v.name), flat, *this);
  return flat;
}

FlatSpace flatten(const Model &m, std::uint64_t cellBudget) {
  FlatSpace fs;
  Builder b{fs, cellBudget};
  for (const VarDecl &v : m.vars) {
    Domain low = lower_domain(v.dom);
    Layout l = b.build(low, v.name);
    fs.vars.push_back(FlatVar{v.name, std::move(low), std::move(l)});
  }
  return fs;
}

} // namespace symlex
