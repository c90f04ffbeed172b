#include "symlex/model.hpp"

#include <map>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "symlex/error.hpp"

namespace symlex {

const VarDecl *Model::findVar(const std::string &name) const {
  for (const VarDecl &v : vars)
    if (v.name == name)
      return &v;
  return nullptr;
}

int Model::tagSize(const std::string &tag) const {
  for (const UnnamedDecl &u : unnamed)
    if (u.tag == tag)
      return u.size;
  return -1;
}

TypeContext Model::typeContext() const {
  TypeContext ctx;
  for (const UnnamedDecl &u : unnamed)
    ctx.tagSizes[u.tag] = u.size;
  for (const EnumDecl &e : enums)
    ctx.enums[e.name] = e.atoms;
  ctx.frozen = true;
  return ctx;
}

namespace {

ExprPtr mk(Expr e, int line, int col) {
  e.line = line;
  e.col = col;
  return std::make_shared<Expr>(std::move(e));
}

struct MParser {
  std::vector<lex::Token> ts;
  std::size_t pos = 0;
  Model m;
  std::map<std::string, std::int64_t> lettings;
  std::set<std::string> names;

  const lex::Token &peek() const { return ts[pos]; }
  void skip() {
    if (ts[pos].kind != lex::Kind::End)
      ++pos;
  }
  bool atSym(const std::string &s) const {
    return peek().kind == lex::Kind::Sym && peek().text == s;
  }
  bool atIdent(const std::string &s) const {
    return peek().kind == lex::Kind::Ident && peek().text == s;
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }
  void expectSym(const std::string &s) {
    if (!atSym(s))
      fail("expected '" + s + "'");
    skip();
  }
  void expectIdent(const std::string &s) {
    if (!atIdent(s))
      fail("expected '" + s + "'");
    skip();
  }
  std::string name() {
    if (peek().kind != lex::Kind::Ident)
      fail("expected a name");
    std::string n = peek().text;
    skip();
    return n;
  }
  void declare(const std::string &n, const lex::Token &at) {
    if (!names.insert(n).second)
      throw ParseError("duplicate name " + n, at.line, at.col);
  }

  void run() {
    while (peek().kind != lex::Kind::End) {
      if (atIdent("letting"))
        letting();
      else if (atIdent("find"))
        find();
      else if (atIdent("such"))
        suchThat();
      else
        fail("expected 'letting', 'find', or 'such that'");
    }
  }

  std::int64_t constInt(const ExprPtr &e) {
    if (const auto *lit = std::get_if<ELit>(&e->node)) {
      if (const auto *iv = std::get_if<IntV>(&lit->v.node))
        return iv->v;
    } else if (const auto *var = std::get_if<EVar>(&e->node)) {
      auto it = lettings.find(var->name);
      if (it != lettings.end())
        return it->second;
    } else if (const auto *neg = std::get_if<ENeg>(&e->node)) {
      return -constInt(neg->e);
    } else if (const auto *bin = std::get_if<EBinOp>(&e->node)) {
      std::int64_t a = constInt(bin->lhs);
      std::int64_t b = constInt(bin->rhs);
      if (bin->op == "+")
        return a + b;
      if (bin->op == "-")
        return a - b;
      if (bin->op == "*")
        return a * b;
      if (bin->op == "/") {
        if (b == 0)
          throw ParseError("division by zero in a constant", e->line, e->col);
        return a / b;
      }
      if (bin->op == "%") {
        if (b == 0)
          throw ParseError("division by zero in a constant", e->line, e->col);
        return a % b;
      }
    }
    throw ParseError("expected an integer constant", e->line, e->col);
  }

  std::int64_t constExpr() { return constInt(expr()); }

  void letting() {
    skip(); // letting
    lex::Token at = peek();
    std::string n = name();
    expectIdent("be");
    if (atIdent("new")) {
      skip();
      expectIdent("type");
      if (atIdent("enum")) {
        skip();
        expectSym("{");
        EnumDecl decl;
        decl.name = n;
        declare(n, at);
        for (;;) {
          lex::Token la = peek();
          std::string label = name();
          declare(label, la);
          decl.atoms.push_back(label);
          if (!atSym(","))
            break;
          skip();
        }
        expectSym("}");
        m.enums.push_back(std::move(decl));
        return;
      }
      expectIdent("of");
      expectIdent("size");
      std::int64_t size = constExpr();
      if (size < 1)
        throw ParseError("type " + n + " must have positive size", at.line,
                         at.col);
      declare(n, at);
      m.unnamed.push_back({n, static_cast<int>(size)});
      return;
    }
    std::int64_t v = constExpr();
    declare(n, at);
    m.lettings.push_back({n, v});
    lettings[n] = v;
  }

  void find() {
    skip(); // find
    std::vector<std::pair<std::string, lex::Token>> found;
    for (;;) {
      lex::Token at = peek();
      found.emplace_back(name(), at);
      if (!atSym(","))
        break;
      skip();
    }
    expectSym(":");
    lex::Token at = peek();
    Domain d = domain();
    for (auto &[n, tok] : found) {
      declare(n, tok);
      VarDecl vd;
      vd.name = n;
      vd.dom = d;
      vd.line = at.line;
      vd.col = at.col;
      m.vars.push_back(std::move(vd));
    }
  }

  void suchThat() {
    skip(); // such
    expectIdent("that");
    for (;;) {
      m.constraints.push_back(expr());
      if (!atSym(","))
        break;
      skip();
    }
  }

  Domain namedDomain(const lex::Token &at, const std::string &n) {
    int size = m.tagSize(n);
    if (size > 0)
      return unnamedDom(n, size);
    for (const EnumDecl &e : m.enums)
      if (e.name == n)
        return enumDom(n, e.atoms);
    throw ParseError("unknown domain name " + n, at.line, at.col);
  }

  Domain domain() {
    lex::Token at = peek();
    if (atSym("(")) {
      skip();
      std::vector<Domain> comps;
      comps.push_back(domain());
      while (atSym(",")) {
        skip();
        comps.push_back(domain());
      }
      expectSym(")");
      if (comps.size() == 1) // grouping, not a tuple
        return std::move(comps[0]);
      return tupleDom(std::move(comps));
    }
    if (peek().kind != lex::Kind::Ident)
      fail("expected a domain");
    if (atIdent("bool")) {
      skip();
      return boolDom();
    }
    if (atIdent("int")) {
      skip();
      expectSym("(");
      std::int64_t lo = constExpr();
      expectSym("..");
      std::int64_t hi = constExpr();
      expectSym(")");
      if (lo > hi)
        throw ParseError("empty int domain", at.line, at.col);
      return intDom(lo, hi);
    }
    if (atIdent("matrix")) {
      skip();
      expectIdent("indexed");
      expectIdent("by");
      expectSym("[");
      std::vector<Domain> ix;
      ix.push_back(domain());
      while (atSym(",")) {
        skip();
        ix.push_back(domain());
      }
      expectSym("]");
      expectIdent("of");
      Domain elem = domain();
      for (const Domain &d : ix)
        if (!isAtomDomain(d))
          throw ParseError("matrix index domains must be atomic", at.line,
                           at.col);
      return matrixDom(std::move(ix), std::move(elem));
    }
    if (atIdent("set")) {
      skip();
      expectIdent("of");
      return setDom(domain());
    }
    if (atIdent("mset")) {
      skip();
      if (!atSym("("))
        fail("mset domains need a (maxOccur n) bound");
      skip();
      expectIdent("maxOccur");
      std::int64_t b = constExpr();
      expectSym(")");
      expectIdent("of");
      if (b < 1)
        throw ParseError("maxOccur bound must be positive", at.line, at.col);
      return msetDom(domain(), static_cast<int>(b));
    }
    if (atIdent("function")) {
      skip();
      bool total = false;
      if (atSym("(") && ts[pos + 1].kind == lex::Kind::Ident &&
          ts[pos + 1].text == "total" && ts[pos + 2].kind == lex::Kind::Sym &&
          ts[pos + 2].text == ")") {
        total = true;
        pos += 3;
      }
      Domain from = domain();
      expectSym("-->");
      Domain to = domain();
      return functionDom(std::move(from), std::move(to), total);
    }
    if (atIdent("relation")) {
      skip();
      expectIdent("of");
      expectSym("(");
      std::vector<Domain> comps;
      comps.push_back(domain());
      while (atSym("*")) {
        skip();
        comps.push_back(domain());
      }
      expectSym(")");
      return relationDom(std::move(comps));
    }
    if (atIdent("partition")) {
      skip();
      expectIdent("from");
      domain();
      return Domain{UnsupportedDom{"partition"}};
    }
    if (atIdent("sequence")) {
      skip();
      if (atSym("(")) { // swallow attributes like (maxSize n)
        while (!atSym(")")) {
          if (peek().kind == lex::Kind::End)
            fail("unterminated attribute list");
          skip();
        }
        skip();
      }
      expectIdent("of");
      domain();
      return Domain{UnsupportedDom{"sequence"}};
    }
    if (atIdent("record") || atIdent("variant"))
      return Domain{UnsupportedDom{peek().text}};
    std::string n = name();
    return namedDomain(at, n);
  }

  // precedence climbing ------------------------------------------------

  ExprPtr expr() { return implies(); }

  ExprPtr implies() {
    ExprPtr lhs = orE();
    if (atSym("->")) {
      lex::Token at = peek();
      skip();
      ExprPtr rhs = implies();
      return mk(Expr{EBinOp{"->", lhs, rhs}}, at.line, at.col);
    }
    return lhs;
  }

  ExprPtr orE() {
    ExprPtr lhs = andE();
    while (atSym("\\/")) {
      lex::Token at = peek();
      skip();
      lhs = mk(Expr{EBinOp{"\\/", lhs, andE()}}, at.line, at.col);
    }
    return lhs;
  }

  ExprPtr andE() {
    ExprPtr lhs = cmpE();
    while (atSym("/\\")) {
      lex::Token at = peek();
      skip();
      lhs = mk(Expr{EBinOp{"/\\", lhs, cmpE()}}, at.line, at.col);
    }
    return lhs;
  }

  ExprPtr cmpE() {
    ExprPtr lhs = addE();
    for (const char *op : {"=", "!=", "<=", "<", ">=", ">"}) {
      if (atSym(op)) {
        lex::Token at = peek();
        skip();
        return mk(Expr{EBinOp{op, lhs, addE()}}, at.line, at.col);
      }
    }
    if (atIdent("in")) {
      lex::Token at = peek();
      skip();
      return mk(Expr{EBinOp{"in", lhs, addE()}}, at.line, at.col);
    }
    return lhs;
  }

  ExprPtr addE() {
    ExprPtr lhs = mulE();
    for (;;) {
      if (atSym("+") || atSym("-")) {
        lex::Token at = peek();
        std::string op = at.text;
        skip();
        lhs = mk(Expr{EBinOp{op, lhs, mulE()}}, at.line, at.col);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr mulE() {
    ExprPtr lhs = unary();
    for (;;) {
      if (atSym("*") || atSym("/") || atSym("%")) {
        lex::Token at = peek();
        std::string op = at.text;
        skip();
        lhs = mk(Expr{EBinOp{op, lhs, unary()}}, at.line, at.col);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    lex::Token at = peek();
    if (atSym("-")) {
      skip();
      return mk(Expr{ENeg{unary()}}, at.line, at.col);
    }
    if (atSym("!")) {
      skip();
      return mk(Expr{ENot{unary()}}, at.line, at.col);
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr base = primary();
    for (;;) {
      if (atSym("[")) {
        lex::Token at = peek();
        skip();
        std::vector<ExprPtr> subs;
        subs.push_back(expr());
        while (atSym(",")) {
          skip();
          subs.push_back(expr());
        }
        expectSym("]");
        base = mk(Expr{EIndex{base, std::move(subs)}}, at.line, at.col);
      } else if (atSym("(")) {
        lex::Token at = peek();
        skip();
        std::vector<ExprPtr> args;
        args.push_back(expr());
        while (atSym(",")) {
          skip();
          args.push_back(expr());
        }
        expectSym(")");
        base = mk(Expr{EApply{base, std::move(args)}}, at.line, at.col);
      } else {
        return base;
      }
    }
  }

  ExprPtr quant(const std::string &kind) {
    lex::Token at = peek();
    skip();
    std::vector<std::string> binders;
    for (;;) {
      binders.push_back(name());
      if (!atSym(","))
        break;
      skip();
    }
    expectSym(":");
    lex::Token dat = peek();
    Domain d = domain();
    if (!isAtomDomain(d))
      throw ParseError("quantifiers range over atomic domains", dat.line,
                       dat.col);
    expectSym(".");
    ExprPtr body = expr();
    return mk(Expr{EQuant{kind, std::move(binders), std::move(d), body}},
              at.line, at.col);
  }

  ExprPtr collect(MSetFlavor flavor) {
    lex::Token at = peek();
    skip(); // keyword
    expectSym("{");
    ECollect c;
    c.flavor = flavor;
    if (!atSym("}")) {
      if (flavor == MSetFlavor::Function) {
        for (;;) {
          ExprPtr k = expr();
          expectSym("-->");
          c.entries.emplace_back(k, expr());
          if (!atSym(","))
            break;
          skip();
        }
      } else {
        for (;;) {
          c.items.push_back(expr());
          if (!atSym(","))
            break;
          skip();
        }
      }
    }
    expectSym("}");
    return mk(Expr{std::move(c)}, at.line, at.col);
  }

  ExprPtr primary() {
    lex::Token at = peek();
    switch (at.kind) {
    case lex::Kind::Int:
      skip();
      return mk(Expr{ELit{intV(at.num)}}, at.line, at.col);
    case lex::Kind::Unnamed: {
      skip();
      if (at.num < 1)
        throw ParseError("atom index must be at least 1", at.line, at.col);
      int size = m.tagSize(at.text);
      if (size < 0)
        throw ParseError("unknown unnamed type " + at.text, at.line, at.col);
      if (at.num > size)
        throw ParseError("atom " + std::to_string(at.num) + "_" + at.text +
                             " exceeds type size " + std::to_string(size),
                         at.line, at.col);
      return mk(Expr{ELit{unnamedV(at.text, static_cast<int>(at.num))}},
                at.line, at.col);
    }
    case lex::Kind::Ident: {
      if (at.text == "true" || at.text == "false") {
        skip();
        return mk(Expr{ELit{boolV(at.text == "true")}}, at.line, at.col);
      }
      if (at.text == "forAll" || at.text == "exists" || at.text == "sum")
        return quant(at.text);
      if (at.text == "toInt") {
        skip();
        expectSym("(");
        ExprPtr e = expr();
        expectSym(")");
        return mk(Expr{EToInt{e}}, at.line, at.col);
      }
      if (at.text == "mset")
        return collect(MSetFlavor::MSet);
      if (at.text == "set")
        return collect(MSetFlavor::Set);
      if (at.text == "function")
        return collect(MSetFlavor::Function);
      if (at.text == "relation")
        return collect(MSetFlavor::Relation);
      skip();
      return mk(Expr{EVar{at.text}}, at.line, at.col);
    }
    case lex::Kind::Sym: {
      if (at.text == "(") {
        skip();
        ExprPtr first = expr();
        if (atSym(",")) {
          ETuple t;
          t.items.push_back(first);
          while (atSym(",")) {
            skip();
            t.items.push_back(expr());
          }
          expectSym(")");
          return mk(Expr{std::move(t)}, at.line, at.col);
        }
        expectSym(")");
        return first;
      }
      if (at.text == "|") {
        skip();
        ExprPtr e = expr();
        expectSym("|");
        return mk(Expr{ECard{e}}, at.line, at.col);
      }
      fail("expected an expression");
    }
    case lex::Kind::End:
      fail("expected an expression");
    }
    fail("expected an expression");
  }
};

// printing -------------------------------------------------------------

void printDomain(std::ostream &os, const Domain &d) {
  if (std::holds_alternative<BoolDom>(d.node)) {
    os << "bool";
  } else if (const auto *x = std::get_if<IntDom>(&d.node)) {
    os << "int(" << x->lo << ".." << x->hi << ")";
  } else if (const auto *x = std::get_if<EnumDom>(&d.node)) {
    os << x->name;
  } else if (const auto *x = std::get_if<UnnamedDom>(&d.node)) {
    os << x->tag;
  } else if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    os << "(";
    for (std::size_t i = 0; i < x->components.size(); ++i) {
      if (i)
        os << ", ";
      printDomain(os, x->components[i]);
    }
    os << ")";
  } else if (const auto *x = std::get_if<MatrixDom>(&d.node)) {
    os << "matrix indexed by [";
    for (std::size_t i = 0; i < x->indices.size(); ++i) {
      if (i)
        os << ", ";
      printDomain(os, x->indices[i]);
    }
    os << "] of ";
    printDomain(os, *x->element);
  } else if (const auto *x = std::get_if<MSetDom>(&d.node)) {
    os << "mset (maxOccur " << x->maxOccur << ") of ";
    printDomain(os, *x->element);
  } else if (const auto *x = std::get_if<SetDom>(&d.node)) {
    os << "set of ";
    printDomain(os, *x->element);
  } else if (const auto *x = std::get_if<FunctionDom>(&d.node)) {
    os << "function ";
    if (x->total)
      os << "(total) ";
    printDomain(os, *x->from);
    os << " --> ";
    printDomain(os, *x->to);
  } else if (const auto *x = std::get_if<RelationDom>(&d.node)) {
    os << "relation of (";
    for (std::size_t i = 0; i < x->components.size(); ++i) {
      if (i)
        os << " * ";
      printDomain(os, x->components[i]);
    }
    os << ")";
  } else {
    os << std::get<UnsupportedDom>(d.node).kind;
  }
}

// operator precedence levels; children needing a lower level get parens
int opLevel(const std::string &op) {
  if (op == "->")
    return 1;
  if (op == "\\/")
    return 2;
  if (op == "/\\")
    return 3;
  if (op == "=" || op == "!=" || op == "<" || op == "<=" || op == ">" ||
      op == ">=" || op == "in")
    return 4;
  if (op == "+" || op == "-")
    return 5;
  return 6; // * / %
}

void printExpr(std::ostream &os, const Expr &e, int minLevel);

void printExprList(std::ostream &os, const std::vector<ExprPtr> &items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i)
      os << ", ";
    printExpr(os, *items[i], 0);
  }
}

void printExpr(std::ostream &os, const Expr &e, int minLevel) {
  if (const auto *lit = std::get_if<ELit>(&e.node)) {
    os << print_value(lit->v);
  } else if (const auto *var = std::get_if<EVar>(&e.node)) {
    os << var->name;
  } else if (const auto *bin = std::get_if<EBinOp>(&e.node)) {
    int lvl = opLevel(bin->op);
    bool parens = lvl < minLevel;
    if (parens)
      os << "(";
    // left-assoc chains reuse lvl on the left, lvl+1 on the right;
    // -> is right-assoc, comparisons are non-associative
    int lhsMin = bin->op == "->" ? lvl + 1 : lvl;
    int rhsMin = bin->op == "->" ? lvl : lvl + 1;
    printExpr(os, *bin->lhs, lhsMin);
    os << " " << (bin->op == "in" ? "in" : bin->op) << " ";
    printExpr(os, *bin->rhs, rhsMin);
    if (parens)
      os << ")";
  } else if (const auto *n = std::get_if<ENot>(&e.node)) {
    bool parens = 7 < minLevel;
    if (parens)
      os << "(";
    os << "!";
    printExpr(os, *n->e, 7);
    if (parens)
      os << ")";
  } else if (const auto *n = std::get_if<ENeg>(&e.node)) {
    bool parens = 7 < minLevel;
    if (parens)
      os << "(";
    os << "-";
    printExpr(os, *n->e, 7);
    if (parens)
      os << ")";
  } else if (const auto *q = std::get_if<EQuant>(&e.node)) {
    bool parens = 1 < minLevel;
    if (parens)
      os << "(";
    os << q->kind << " ";
    for (std::size_t i = 0; i < q->binders.size(); ++i) {
      if (i)
        os << ", ";
      os << q->binders[i];
    }
    os << " : ";
    printDomain(os, q->dom);
    os << " . ";
    printExpr(os, *q->body, 0);
    if (parens)
      os << ")";
  } else if (const auto *ix = std::get_if<EIndex>(&e.node)) {
    printExpr(os, *ix->base, 8);
    os << "[";
    printExprList(os, ix->subs);
    os << "]";
  } else if (const auto *ap = std::get_if<EApply>(&e.node)) {
    printExpr(os, *ap->fn, 8);
    os << "(";
    printExprList(os, ap->args);
    os << ")";
  } else if (const auto *c = std::get_if<ECard>(&e.node)) {
    os << "|";
    printExpr(os, *c->e, 0);
    os << "|";
  } else if (const auto *t = std::get_if<EToInt>(&e.node)) {
    os << "toInt(";
    printExpr(os, *t->e, 0);
    os << ")";
  } else if (const auto *t = std::get_if<ETuple>(&e.node)) {
    os << "(";
    printExprList(os, t->items);
    os << ")";
  } else {
    const auto &c = std::get<ECollect>(e.node);
    switch (c.flavor) {
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
    if (c.flavor == MSetFlavor::Function) {
      for (std::size_t i = 0; i < c.entries.size(); ++i) {
        if (i)
          os << ", ";
        printExpr(os, *c.entries[i].first, 5);
        os << " --> ";
        printExpr(os, *c.entries[i].second, 5);
      }
    } else {
      printExprList(os, c.items);
    }
    os << "}";
  }
}

} // namespace

Model parse_model(const std::string &text) {
  MParser p;
  p.ts = lex::tokenize(text);
  p.run();
  return std::move(p.m);
}

std::string print_expr(const Expr &e) {
  std::ostringstream os;
  printExpr(os, e, 0);
  return os.str();
}

std::string print_model(const Model &m) {
  std::ostringstream os;
  for (const UnnamedDecl &u : m.unnamed)
    os << "letting " << u.tag << " be new type of size " << u.size << "\n";
  for (const EnumDecl &e : m.enums) {
    os << "letting " << e.name << " be new type enum {";
    for (std::size_t i = 0; i < e.atoms.size(); ++i) {
      if (i)
        os << ", ";
      os << e.atoms[i];
    }
    os << "}\n";
  }
  for (const IntLetting &l : m.lettings)
    os << "letting " << l.name << " be " << l.value << "\n";
  for (const VarDecl &v : m.vars) {
    os << "find " << v.name << " : ";
    printDomain(os, v.dom);
    os << "\n";
  }
  for (const ExprPtr &c : m.constraints) {
    os << "such that ";
    printExpr(os, *c, 0);
    os << "\n";
  }
  return os.str();
}

} // namespace symlex
