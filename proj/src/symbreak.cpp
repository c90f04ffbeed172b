#include <sstream>

#include "symlex/symbreak.hpp"

#include "symlex/order.hpp"

namespace symlex {

bool operator==(const AtomicTerm &a, const AtomicTerm &b) {
  if (a.kind != b.kind || a.negated != b.negated || a.guardCell != b.guardCell)
    return false;
  if (a.kind == AtomicTerm::Kind::Const)
    return a.k == b.k;
  if (a.cell != b.cell)
    return false;
  if (a.kind == AtomicTerm::Kind::Image)
    return a.perm == b.perm || (a.perm && b.perm && *a.perm == *b.perm);
  return true;
}

std::vector<std::pair<std::string, int>> model_tags(const Model &m) {
  std::vector<std::pair<std::string, int>> tags;
  tags.reserve(m.unnamed.size());
  for (const UnnamedDecl &d : m.unnamed)
    tags.emplace_back(d.tag, d.size);
  return tags;
}

std::vector<DirectProductElem>
break_elements(const std::vector<std::pair<std::string, int>> &tags,
               const BreakConfig &cfg) {
  if (cfg.mode == BreakMode::NoBreaking)
    return {};
  std::vector<TagGens> tg;
  tg.reserve(tags.size());
  for (const auto &[tag, size] : tags)
    tg.push_back(TagGens{tag, size, generator_set(cfg.gens, tag, size)});
  DpMode mode = cfg.mode == BreakMode::Independently ? DpMode::Independently
                                                     : DpMode::Altogether;
  return dp_elements(mode, tg);
}

bool semantic_lex_leader(const BreakConfig &cfg,
                         const std::vector<std::pair<std::string, int>> &tags,
                         const Value &x) {
  for (const DirectProductElem &e : break_elements(tags, cfg))
    if (cmp(x, transform_dp(e, x)) == Cmp::GT)
      return false;
  return true;
}

namespace {

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
    throw Error("transformed value left its universe");
  return lo;
}

AtomicTerm varTerm(int cell, int guard, bool negated = false) {
  AtomicTerm t;
  t.cell = cell;
  t.guardCell = guard;
  t.negated = negated;
  return t;
}

// Emits the paired lex positions of value(tgt) on the left and
// transform(e, value(src)) on the right; tgt and src are nodes of the same
// variable's layout, diverging where the group element relocates entries.
struct Emitter {
  const DirectProductElem &e;
  DirectProductElem inv;
  std::vector<AtomicTerm> lhs, rhs;

  explicit Emitter(const DirectProductElem &elem) : e(elem), inv(elem.inverse()) {}

  void atom(const Layout &tgt, const Layout &src, int gT, int gS) {
    const auto &t = std::get<LAtom>(tgt.node);
    const auto &s = std::get<LAtom>(src.node);
    lhs.push_back(varTerm(t.cell, gT));
    const auto *u = std::get_if<UnnamedDom>(&src.dom.node);
    const Permutation *p = u ? e.component(u->tag) : nullptr;
    if (p) {
      AtomicTerm img;
      img.kind = AtomicTerm::Kind::Image;
      img.cell = s.cell;
      img.guardCell = gS;
      img.perm = std::make_shared<Permutation>(*p);
      rhs.push_back(std::move(img));
    } else {
      rhs.push_back(varTerm(s.cell, gS));
    }
  }

  void walk(const Layout &tgt, const Layout &src, int gT, int gS) {
    if (std::holds_alternative<LAtom>(tgt.node)) {
      atom(tgt, src, gT, gS);
      return;
    }
    if (const auto *t = std::get_if<LTuple>(&tgt.node)) {
      const auto &s = std::get<LTuple>(src.node);
      for (std::size_t i = 0; i < t->comps.size(); ++i)
        walk(t->comps[i], s.comps[i], gT, gS);
      return;
    }
    if (const auto *t = std::get_if<LMatrix>(&tgt.node)) {
      const auto &s = std::get<LMatrix>(src.node);
      std::size_t dims = t->indexLists.size();
      std::vector<std::size_t> at(dims, 0);
      bool done = dims == 0;
      while (!done) {
        std::size_t tOff = 0, sOff = 0;
        for (std::size_t d = 0; d < dims; ++d) {
          const Value &atIx = t->indexLists[d][at[d]];
          std::size_t srcPos = at[d];
          if (const auto *u = std::get_if<UnnamedV>(&atIx.node))
            if (const Permutation *p = e.component(u->tag))
              srcPos = static_cast<std::size_t>(p->preimage(u->index)) - 1;
          tOff = tOff * t->indexLists[d].size() + at[d];
          sOff = sOff * t->indexLists[d].size() + srcPos;
        }
        walk(t->entries[tOff], s.entries[sOff], gT, gS);
        std::size_t d = dims;
        while (d-- > 0) {
          if (++at[d] < t->indexLists[d].size())
            break;
          at[d] = 0;
          if (d == 0)
            done = true;
        }
      }
      return;
    }
    if (const auto *t = std::get_if<LMSet>(&tgt.node)) {
      const auto &s = std::get<LMSet>(src.node);
      for (std::size_t i = 0; i < t->universe.size(); ++i) {
        std::size_t srcIdx = indexIn(t->universe, transform_dp(inv, t->universe[i]));
        lhs.push_back(varTerm(t->freqCells[i], gT, true));
        rhs.push_back(varTerm(s.freqCells[srcIdx], gS, true));
      }
      return;
    }
    const auto &t = std::get<LFun>(tgt.node);
    const auto &s = std::get<LFun>(src.node);
    for (std::size_t i = 0; i < t.keys.size(); ++i) {
      std::size_t j = indexIn(t.keys, transform_dp(inv, t.keys[i]));
      int nextGT = gT, nextGS = gS;
      if (!t.guardCells.empty()) {
        lhs.push_back(varTerm(t.guardCells[i], gT, true));
        rhs.push_back(varTerm(s.guardCells[j], gS, true));
        nextGT = t.guardCells[i];
        nextGS = s.guardCells[j];
      }
      walk(t.valueLayouts[i], s.valueLayouts[j], nextGT, nextGS);
    }
  }
};

} // namespace

LexConstraint simplify_lex(LexConstraint c) {
  std::size_t keep = 0;
  for (std::size_t i = 0; i < c.lhs.size(); ++i) {
    if (c.lhs[i] == c.rhs[i])
      continue;
    c.lhs[keep] = c.lhs[i];
    c.rhs[keep] = c.rhs[i];
    ++keep;
  }
  c.lhs.resize(keep);
  c.rhs.resize(keep);
  return c;
}

std::vector<LexConstraint> compile_lex_leader(const Model &m,
                                              const FlatSpace &fs,
                                              const BreakConfig &cfg) {
  std::vector<LexConstraint> out;
  for (const DirectProductElem &e : break_elements(model_tags(m), cfg)) {
    Emitter em(e);
    for (const FlatVar &v : fs.vars)
      em.walk(v.layout, v.layout, -1, -1);
    LexConstraint c;
    c.lhs = std::move(em.lhs);
    c.rhs = std::move(em.rhs);
    c.origin = e.describe();
    c = simplify_lex(std::move(c));
    if (!c.lhs.empty())
      out.push_back(std::move(c));
  }
  return out;
}

std::int64_t eval_term(const AtomicTerm &t,
                       const std::vector<std::int64_t> &flat) {
  if (t.kind == AtomicTerm::Kind::Const)
    return t.k;
  if (t.guardCell >= 0 && flat[static_cast<std::size_t>(t.guardCell)] == 0)
    return 0;
  std::int64_t v = flat[static_cast<std::size_t>(t.cell)];
  if (t.kind == AtomicTerm::Kind::Image)
    v = t.perm->image(static_cast<int>(v));
  return t.negated ? -v : v;
}

bool lex_satisfied(const LexConstraint &c,
                   const std::vector<std::int64_t> &flat) {
  for (std::size_t i = 0; i < c.lhs.size(); ++i) {
    std::int64_t l = eval_term(c.lhs[i], flat);
    std::int64_t r = eval_term(c.rhs[i], flat);
    if (l < r)
      return true;
    if (l > r)
      return false;
  }
  return !c.strict;
}

namespace {

std::string cellDomText(const Domain &d) {
  if (std::holds_alternative<BoolDom>(d.node))
    return "bool";
  if (const auto *i = std::get_if<IntDom>(&d.node))
    return "int(" + std::to_string(i->lo) + ".." + std::to_string(i->hi) + ")";
  if (const auto *e = std::get_if<EnumDom>(&d.node))
    return e->name;
  return std::get<UnnamedDom>(d.node).tag;
}

std::string termText(const AtomicTerm &t) {
  if (t.kind == AtomicTerm::Kind::Const)
    return std::to_string(t.k);
  std::string s = "x" + std::to_string(t.cell);
  if (t.kind == AtomicTerm::Kind::Image)
    s += "^" + t.perm->cycles();
  if (t.negated)
    s = "-" + s;
  if (t.guardCell >= 0)
    s += "|x" + std::to_string(t.guardCell);
  return s;
}

} // namespace

std::string dump_constraints(const FlatSpace &fs,
                             const std::vector<LexConstraint> &cs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fs.cells.size(); ++i)
    os << "x" << i << " : " << cellDomText(fs.cells[i].dom) << "  # "
       << fs.cells[i].path << "\n";
  for (const LexConstraint &c : cs) {
    os << "[";
    for (std::size_t i = 0; i < c.lhs.size(); ++i)
      os << (i ? ", " : "") << termText(c.lhs[i]);
    os << "] <=lex [";
    for (std::size_t i = 0; i < c.rhs.size(); ++i)
      os << (i ? ", " : "") << termText(c.rhs[i]);
    os << "]  # " << c.origin << "\n";
  }
  return os.str();
}

} // namespace symlex
