#include "symlex/literal.hpp"

#include <algorithm>
#include <sstream>

#include "lexer.hpp"
#include "symlex/domain.hpp"
#include "symlex/error.hpp"
#include "symlex/order.hpp"

namespace symlex {

void TypeContext::noteTag(const std::string &tag, int minSize) {
  auto it = tagSizes.find(tag);
  if (frozen) {
    if (it == tagSizes.end())
      throw Error("unknown unnamed type " + tag);
    if (minSize > it->second)
      throw Error("atom " + std::to_string(minSize) + "_" + tag +
                  " exceeds type size " + std::to_string(it->second));
    return;
  }
  if (it == tagSizes.end())
    tagSizes[tag] = minSize;
  else
    it->second = std::max(it->second, minSize);
}

std::optional<std::pair<std::string, int>>
TypeContext::lookupLabel(const std::string &label) const {
  for (const auto &[name, atoms] : enums)
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == label)
        return std::make_pair(name, static_cast<int>(i) + 1);
  return std::nullopt;
}

namespace {

struct BrItem;
struct BrList {
  std::vector<BrItem> items;
};
struct BrItem {
  std::optional<Value> val;
  std::optional<BrList> row;
};

struct LitParser {
  const std::vector<lex::Token> &ts;
  TypeContext &ctx;
  std::size_t pos = 0;

  const lex::Token &peek() const { return ts[pos]; }
  void skip() {
    if (ts[pos].kind != lex::Kind::End)
      ++pos;
  }
  bool atSym(const std::string &s) const {
    return peek().kind == lex::Kind::Sym && peek().text == s;
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }
  void expectSym(const std::string &s) {
    if (!atSym(s))
      fail("expected '" + s + "'");
    skip();
  }

  std::int64_t signedInt() {
    bool neg = false;
    if (atSym("-")) {
      neg = true;
      skip();
    }
    if (peek().kind != lex::Kind::Int)
      fail("expected an integer");
    std::int64_t n = peek().num;
    skip();
    return neg ? -n : n;
  }

  Value unnamedAtom() {
    const lex::Token t = peek();
    skip();
    if (t.num < 1)
      throw ParseError("atom index must be at least 1", t.line, t.col);
    if (ctx.frozen) {
      auto it = ctx.tagSizes.find(t.text);
      if (it == ctx.tagSizes.end())
        throw ParseError("unknown unnamed type " + t.text, t.line, t.col);
      if (t.num > it->second)
        throw ParseError("atom " + std::to_string(t.num) + "_" + t.text +
                             " exceeds type size " + std::to_string(it->second),
                         t.line, t.col);
    } else {
      ctx.noteTag(t.text, static_cast<int>(t.num));
    }
    return unnamedV(t.text, static_cast<int>(t.num));
  }

  std::vector<Value> braceItems() {
    expectSym("{");
    std::vector<Value> items;
    if (!atSym("}")) {
      items.push_back(value());
      while (atSym(",")) {
        skip();
        items.push_back(value());
      }
    }
    expectSym("}");
    return items;
  }

  Value functionLiteral() {
    expectSym("{");
    std::vector<Value> pairs;
    if (!atSym("}")) {
      for (;;) {
        Value k = value();
        if (!atSym("-->"))
          fail("expected '-->' after a function key");
        skip();
        Value v = value();
        pairs.push_back(tupleV({std::move(k), std::move(v)}));
        if (!atSym(","))
          break;
        skip();
      }
    }
    expectSym("}");
    Value out = msetV(std::move(pairs), MSetFlavor::Function);
    const auto &sorted = std::get<MSetV>(out.node).items;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      const Value &a = std::get<TupleV>(sorted[i].node).items[0];
      const Value &b = std::get<TupleV>(sorted[i + 1].node).items[0];
      if (a == b)
        fail("function literal maps " + print_value(a) + " more than once");
    }
    return out;
  }

  Value relationLiteral() {
    std::vector<Value> items = braceItems();
    for (const Value &v : items)
      if (!std::holds_alternative<TupleV>(v.node))
        fail("relation literal entries must be tuples");
    return setV(std::move(items), MSetFlavor::Relation);
  }

  BrItem bracketNode() {
    // caller saw '['; a trailing "; index:..." marks a complete matrix
    expectSym("[");
    BrList lst;
    if (atSym("]") || atSym(";"))
      fail("matrix literal needs at least one entry");
    for (;;) {
      BrItem item;
      if (atSym("["))
        item = bracketNode();
      else
        item.val = value();
      lst.items.push_back(std::move(item));
      if (atSym(",")) {
        skip();
        continue;
      }
      break;
    }
    if (atSym(";")) {
      skip();
      if (peek().kind != lex::Kind::Ident || peek().text != "index")
        fail("expected 'index' after ';'");
      skip();
      expectSym(":");
      BrItem out;
      out.val = assembleMatrix(lst);
      expectSym("]");
      return out;
    }
    expectSym("]");
    BrItem out;
    out.row = std::move(lst);
    return out;
  }

  // Parses the comma-separated index domains and flattens the row nest.
  Value assembleMatrix(const BrList &top) {
    std::vector<std::size_t> extents;
    measure(top, 0, extents);
    std::vector<std::vector<Value>> indexLists;
    for (std::size_t dim = 0;; ++dim) {
      if (dim >= extents.size())
        fail("more index domains than nesting levels in the matrix literal");
      indexLists.push_back(indexAtoms(extents[dim]));
      if (!atSym(","))
        break;
      skip();
    }
    if (indexLists.size() != extents.size())
      fail("matrix literal nests " + std::to_string(extents.size()) +
           " levels but names " + std::to_string(indexLists.size()) +
           " index domains");
    std::vector<Value> entries;
    flattenRows(top, 0, extents.size(), entries);
    return matrixV(std::move(indexLists), std::move(entries));
  }

  void measure(const BrList &lst, std::size_t depth,
               std::vector<std::size_t> &extents) {
    if (depth == extents.size())
      extents.push_back(lst.items.size());
    else if (extents[depth] != lst.items.size())
      fail("ragged matrix literal");
    for (const BrItem &item : lst.items)
      if (item.row)
        measure(*item.row, depth + 1, extents);
  }

  void flattenRows(const BrList &lst, std::size_t depth, std::size_t dims,
                   std::vector<Value> &out) {
    for (const BrItem &item : lst.items) {
      if (depth + 1 == dims) {
        if (!item.val)
          fail("matrix literal nests deeper than its index count");
        out.push_back(*item.val);
      } else {
        if (!item.row)
          fail("matrix literal rows are shallower than its index count");
        flattenRows(*item.row, depth + 1, dims, out);
      }
    }
  }

  std::vector<Value> indexAtoms(std::size_t extent) {
    const lex::Token t = peek();
    if (t.kind != lex::Kind::Ident)
      fail("expected an index domain");
    if (t.text == "int") {
      skip();
      expectSym("(");
      std::int64_t lo = signedInt();
      expectSym("..");
      std::int64_t hi = signedInt();
      expectSym(")");
      if (lo > hi)
        throw ParseError("empty int index range", t.line, t.col);
      if (static_cast<std::uint64_t>(hi - lo + 1) != extent)
        throw ParseError("index int(" + std::to_string(lo) + ".." +
                             std::to_string(hi) + ") has " +
                             std::to_string(hi - lo + 1) + " atoms but the literal has " +
                             std::to_string(extent) + " entries",
                         t.line, t.col);
      return domain_atoms(intDom(lo, hi));
    }
    if (t.text == "bool") {
      skip();
      if (extent != 2)
        throw ParseError("bool index needs exactly 2 entries", t.line, t.col);
      return domain_atoms(boolDom());
    }
    skip();
    auto en = ctx.enums.find(t.text);
    if (en != ctx.enums.end()) {
      if (en->second.size() != extent)
        throw ParseError("enum " + t.text + " has " +
                             std::to_string(en->second.size()) +
                             " atoms but the literal has " +
                             std::to_string(extent) + " entries",
                         t.line, t.col);
      return domain_atoms(enumDom(t.text, en->second));
    }
    auto it = ctx.tagSizes.find(t.text);
    if (ctx.frozen) {
      if (it == ctx.tagSizes.end())
        throw ParseError("unknown index domain " + t.text, t.line, t.col);
      if (static_cast<std::size_t>(it->second) != extent)
        throw ParseError("type " + t.text + " has size " +
                             std::to_string(it->second) +
                             " but the literal has " + std::to_string(extent) +
                             " entries",
                         t.line, t.col);
    } else {
      if (it != ctx.tagSizes.end() &&
          static_cast<std::size_t>(it->second) > extent)
        throw ParseError("type " + t.text + " already has size " +
                             std::to_string(it->second) +
                             " but the literal has " + std::to_string(extent) +
                             " entries",
                         t.line, t.col);
      ctx.tagSizes[t.text] = static_cast<int>(extent);
    }
    return domain_atoms(unnamedDom(t.text, static_cast<int>(extent)));
  }

  Value value() {
    const lex::Token t = peek();
    switch (t.kind) {
    case lex::Kind::Int:
      skip();
      return intV(t.num);
    case lex::Kind::Unnamed:
      return unnamedAtom();
    case lex::Kind::Ident: {
      if (t.text == "true") {
        skip();
        return boolV(true);
      }
      if (t.text == "false") {
        skip();
        return boolV(false);
      }
      if (t.text == "mset") {
        skip();
        return msetV(braceItems(), MSetFlavor::MSet);
      }
      if (t.text == "set") {
        skip();
        return setV(braceItems(), MSetFlavor::Set);
      }
      if (t.text == "function") {
        skip();
        return functionLiteral();
      }
      if (t.text == "relation") {
        skip();
        return relationLiteral();
      }
      if (auto hit = ctx.lookupLabel(t.text)) {
        skip();
        return enumV(hit->first, t.text, hit->second);
      }
      fail("unknown name '" + t.text + "' in literal");
    }
    case lex::Kind::Sym: {
      if (t.text == "-") {
        skip();
        if (peek().kind != lex::Kind::Int)
          fail("expected digits after '-'");
        std::int64_t n = peek().num;
        skip();
        return intV(-n);
      }
      if (t.text == "(") {
        skip();
        std::vector<Value> items;
        items.push_back(value());
        if (!atSym(","))
          fail("tuple literal needs at least two components");
        while (atSym(",")) {
          skip();
          items.push_back(value());
        }
        expectSym(")");
        return tupleV(std::move(items));
      }
      if (t.text == "[") {
        BrItem item = bracketNode();
        if (!item.val)
          fail("matrix literal needs an '; index:...' annotation");
        return *item.val;
      }
      fail("expected a value");
    }
    case lex::Kind::End:
      fail("expected a value");
    }
    fail("expected a value");
  }
};

void printIndexDomain(std::ostream &os, const std::vector<Value> &atoms) {
  const Value &first = atoms.front();
  if (std::holds_alternative<BoolV>(first.node)) {
    os << "bool";
  } else if (const auto *iv = std::get_if<IntV>(&first.node)) {
    os << "int(" << iv->v << ".." << std::get<IntV>(atoms.back().node).v << ")";
  } else if (const auto *ev = std::get_if<EnumV>(&first.node)) {
    os << ev->enumName;
  } else {
    os << std::get<UnnamedV>(first.node).tag;
  }
}

void printInto(std::ostream &os, const Value &v);

void printRows(std::ostream &os, const MatrixV &m, std::size_t dim,
               std::size_t &cursor) {
  if (dim == m.indexLists.size()) {
    printInto(os, m.entries[cursor++]);
    return;
  }
  if (dim > 0)
    os << "[";
  for (std::size_t k = 0; k < m.indexLists[dim].size(); ++k) {
    if (k)
      os << ", ";
    printRows(os, m, dim + 1, cursor);
  }
  if (dim > 0)
    os << "]";
}

void printInto(std::ostream &os, const Value &v) {
  if (const auto *b = std::get_if<BoolV>(&v.node)) {
    os << (b->v ? "true" : "false");
  } else if (const auto *n = std::get_if<IntV>(&v.node)) {
    os << n->v;
  } else if (const auto *e = std::get_if<EnumV>(&v.node)) {
    os << e->label;
  } else if (const auto *u = std::get_if<UnnamedV>(&v.node)) {
    os << u->index << "_" << u->tag;
  } else if (const auto *t = std::get_if<TupleV>(&v.node)) {
    os << "(";
    for (std::size_t i = 0; i < t->items.size(); ++i) {
      if (i)
        os << ", ";
      printInto(os, t->items[i]);
    }
    os << ")";
  } else if (const auto *m = std::get_if<MatrixV>(&v.node)) {
    os << "[";
    std::size_t cursor = 0;
    printRows(os, *m, 0, cursor);
    os << "; index:";
    for (std::size_t d = 0; d < m->indexLists.size(); ++d) {
      if (d)
        os << ",";
      printIndexDomain(os, m->indexLists[d]);
    }
    os << "]";
  } else {
    const auto &ms = std::get<MSetV>(v.node);
    switch (ms.flavor) {
    case MSetFlavor::MSet:
      os << "mset{";
      break;
    case MSetFlavor::Set:
      os << "set{";
      break;
    case MSetFlavor::Function:
      os << "function{";
      break;
    case MSetFlavor::Relation:
      os << "relation{";
      break;
    }
    for (std::size_t i = 0; i < ms.items.size(); ++i) {
      if (i)
        os << ", ";
      if (ms.flavor == MSetFlavor::Function) {
        const auto &pair = std::get<TupleV>(ms.items[i].node);
        printInto(os, pair.items[0]);
        os << "-->";
        printInto(os, pair.items[1]);
      } else {
        printInto(os, ms.items[i]);
      }
    }
    os << "}";
  }
}

} // namespace

Value parse_value(const std::string &text, TypeContext &ctx) {
  std::vector<lex::Token> ts = lex::tokenize(text);
  LitParser p{ts, ctx};
  Value v = p.value();
  if (p.peek().kind != lex::Kind::End)
    p.fail("trailing input after the value");
  return v;
}

std::string print_value(const Value &v) {
  std::ostringstream os;
  printInto(os, v);
  return os.str();
}

} // namespace symlex
