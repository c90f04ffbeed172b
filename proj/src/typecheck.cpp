#include <map>
#include <optional>
#include <sstream>

#include "symlex/model.hpp"

namespace symlex {

namespace {

const char *kUnknown = "_unknown";

Domain unknownDom() { return Domain{UnsupportedDom{kUnknown}}; }

bool isUnknown(const Domain &d) {
  const auto *u = std::get_if<UnsupportedDom>(&d.node);
  return u && u->kind == kUnknown;
}

// Kind-level compatibility: int bounds, mset bounds, and function totality
// do not separate types; the unknown domain unifies with anything.
bool typeEq(const Domain &a, const Domain &b) {
  if (isUnknown(a) || isUnknown(b))
    return true;
  if (a.node.index() != b.node.index())
    return false;
  if (std::holds_alternative<BoolDom>(a.node) ||
      std::holds_alternative<IntDom>(a.node))
    return true;
  if (const auto *x = std::get_if<EnumDom>(&a.node))
    return x->name == std::get<EnumDom>(b.node).name;
  if (const auto *x = std::get_if<UnnamedDom>(&a.node))
    return x->tag == std::get<UnnamedDom>(b.node).tag;
  if (const auto *x = std::get_if<TupleDom>(&a.node)) {
    const auto &y = std::get<TupleDom>(b.node);
    if (x->components.size() != y.components.size())
      return false;
    for (std::size_t i = 0; i < x->components.size(); ++i)
      if (!typeEq(x->components[i], y.components[i]))
        return false;
    return true;
  }
  if (const auto *x = std::get_if<MatrixDom>(&a.node)) {
    const auto &y = std::get<MatrixDom>(b.node);
    if (x->indices.size() != y.indices.size())
      return false;
    for (std::size_t i = 0; i < x->indices.size(); ++i)
      if (!typeEq(x->indices[i], y.indices[i]))
        return false;
    return typeEq(*x->element, *y.element);
  }
  if (const auto *x = std::get_if<MSetDom>(&a.node))
    return typeEq(*x->element, *std::get<MSetDom>(b.node).element);
  if (const auto *x = std::get_if<SetDom>(&a.node))
    return typeEq(*x->element, *std::get<SetDom>(b.node).element);
  if (const auto *x = std::get_if<FunctionDom>(&a.node)) {
    const auto &y = std::get<FunctionDom>(b.node);
    return typeEq(*x->from, *y.from) && typeEq(*x->to, *y.to);
  }
  if (const auto *x = std::get_if<RelationDom>(&a.node)) {
    const auto &y = std::get<RelationDom>(b.node);
    if (x->components.size() != y.components.size())
      return false;
    for (std::size_t i = 0; i < x->components.size(); ++i)
      if (!typeEq(x->components[i], y.components[i]))
        return false;
    return true;
  }
  return std::get<UnsupportedDom>(a.node).kind ==
         std::get<UnsupportedDom>(b.node).kind;
}

std::string show(const Domain &d) {
  if (isUnknown(d))
    return "?";
  std::ostringstream os;
  if (std::holds_alternative<BoolDom>(d.node))
    os << "bool";
  else if (std::holds_alternative<IntDom>(d.node))
    os << "int";
  else if (const auto *x = std::get_if<EnumDom>(&d.node))
    os << x->name;
  else if (const auto *x = std::get_if<UnnamedDom>(&d.node))
    os << x->tag;
  else if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    os << "(";
    for (std::size_t i = 0; i < x->components.size(); ++i)
      os << (i ? ", " : "") << show(x->components[i]);
    os << ")";
  } else if (const auto *x = std::get_if<MatrixDom>(&d.node)) {
    os << "matrix of " << show(*x->element);
  } else if (const auto *x = std::get_if<MSetDom>(&d.node)) {
    os << "mset of " << show(*x->element);
  } else if (const auto *x = std::get_if<SetDom>(&d.node)) {
    os << "set of " << show(*x->element);
  } else if (const auto *x = std::get_if<FunctionDom>(&d.node)) {
    os << "function " << show(*x->from) << " --> " << show(*x->to);
  } else if (const auto *x = std::get_if<RelationDom>(&d.node)) {
    os << "relation of (";
    for (std::size_t i = 0; i < x->components.size(); ++i)
      os << (i ? " * " : "") << show(x->components[i]);
    os << ")";
  } else {
    os << std::get<UnsupportedDom>(d.node).kind;
  }
  return os.str();
}

struct Checker {
  const Model &m;
  std::vector<std::string> diags;
  std::map<std::string, Domain> scope;

  void report(const Expr &at, const std::string &msg) {
    diags.push_back("line " + std::to_string(at.line) + ", column " +
                    std::to_string(at.col) + ": " + msg);
  }

  std::optional<Domain> domainOfValue(const Expr &at, const Value &v) {
    if (std::holds_alternative<BoolV>(v.node))
      return boolDom();
    if (std::holds_alternative<IntV>(v.node))
      return intDom(0, 0);
    if (const auto *e = std::get_if<EnumV>(&v.node)) {
      for (const EnumDecl &d : m.enums)
        if (d.name == e->enumName)
          return enumDom(d.name, d.atoms);
      report(at, "unknown enum " + e->enumName);
      return std::nullopt;
    }
    const auto *u = std::get_if<UnnamedV>(&v.node);
    if (u) {
      int size = m.tagSize(u->tag);
      if (size < 0) {
        report(at, "unknown unnamed type " + u->tag);
        return std::nullopt;
      }
      return unnamedDom(u->tag, size);
    }
    report(at, "unsupported literal kind in expressions");
    return std::nullopt;
  }

  std::optional<Domain> check(const Expr &e) {
    if (const auto *lit = std::get_if<ELit>(&e.node))
      return domainOfValue(e, lit->v);
    if (const auto *var = std::get_if<EVar>(&e.node)) {
      auto it = scope.find(var->name);
      if (it != scope.end())
        return it->second;
      if (const VarDecl *vd = m.findVar(var->name))
        return vd->dom;
      for (const IntLetting &l : m.lettings)
        if (l.name == var->name)
          return intDom(0, 0);
      for (const EnumDecl &d : m.enums)
        for (const std::string &atom : d.atoms)
          if (atom == var->name)
            return enumDom(d.name, d.atoms);
      report(e, "unknown name " + var->name);
      return std::nullopt;
    }
    if (const auto *bin = std::get_if<EBinOp>(&e.node))
      return checkBin(e, *bin);
    if (const auto *n = std::get_if<ENot>(&e.node)) {
      requireType(*n->e, boolDom(), "'!' needs a bool operand");
      return boolDom();
    }
    if (const auto *n = std::get_if<ENeg>(&e.node)) {
      requireType(*n->e, intDom(0, 0), "unary '-' needs an int operand");
      return intDom(0, 0);
    }
    if (const auto *q = std::get_if<EQuant>(&e.node)) {
      std::map<std::string, Domain> saved = scope;
      for (const std::string &b : q->binders)
        scope[b] = q->dom;
      std::optional<Domain> body = check(*q->body);
      scope = std::move(saved);
      if (q->kind == "sum") {
        if (body && !typeEq(*body, intDom(0, 0)))
          report(*q->body, "sum body must be int, got " + show(*body));
        return intDom(0, 0);
      }
      if (body && !typeEq(*body, boolDom()))
        report(*q->body, q->kind + " body must be bool, got " + show(*body));
      return boolDom();
    }
    if (const auto *ix = std::get_if<EIndex>(&e.node))
      return checkIndex(e, *ix);
    if (const auto *ap = std::get_if<EApply>(&e.node))
      return checkApply(e, *ap);
    if (const auto *c = std::get_if<ECard>(&e.node)) {
      std::optional<Domain> t = check(*c->e);
      if (t && !std::holds_alternative<MSetDom>(t->node) &&
          !std::holds_alternative<SetDom>(t->node) &&
          !std::holds_alternative<FunctionDom>(t->node) &&
          !std::holds_alternative<RelationDom>(t->node) && !isUnknown(*t))
        report(e, "|...| needs a collection, got " + show(*t));
      return intDom(0, 0);
    }
    if (const auto *t = std::get_if<EToInt>(&e.node)) {
      requireType(*t->e, boolDom(), "toInt needs a bool operand");
      return intDom(0, 0);
    }
    if (const auto *t = std::get_if<ETuple>(&e.node)) {
      std::vector<Domain> comps;
      bool ok = true;
      for (const ExprPtr &item : t->items) {
        std::optional<Domain> ct = check(*item);
        if (!ct)
          ok = false;
        else
          comps.push_back(*ct);
      }
      if (!ok)
        return std::nullopt;
      return tupleDom(std::move(comps));
    }
    return checkCollect(e, std::get<ECollect>(e.node));
  }

  void requireType(const Expr &e, const Domain &want, const std::string &msg) {
    std::optional<Domain> t = check(e);
    if (t && !typeEq(*t, want))
      report(e, msg + ", got " + show(*t));
  }

  std::optional<Domain> checkBin(const Expr &e, const EBinOp &bin) {
    if (bin.op == "/\\" || bin.op == "\\/" || bin.op == "->") {
      requireType(*bin.lhs, boolDom(), "'" + bin.op + "' needs bool operands");
      requireType(*bin.rhs, boolDom(), "'" + bin.op + "' needs bool operands");
      return boolDom();
    }
    if (bin.op == "+" || bin.op == "-" || bin.op == "*" || bin.op == "/" ||
        bin.op == "%") {
      requireType(*bin.lhs, intDom(0, 0), "'" + bin.op + "' needs int operands");
      requireType(*bin.rhs, intDom(0, 0), "'" + bin.op + "' needs int operands");
      return intDom(0, 0);
    }
    if (bin.op == "in") {
      std::optional<Domain> lt = check(*bin.lhs);
      std::optional<Domain> rt = check(*bin.rhs);
      if (lt && rt) {
        std::optional<Domain> elem;
        if (const auto *s = std::get_if<SetDom>(&rt->node))
          elem = *s->element;
        else if (const auto *ms = std::get_if<MSetDom>(&rt->node))
          elem = *ms->element;
        else if (const auto *r = std::get_if<RelationDom>(&rt->node))
          elem = tupleDom(r->components);
        else if (const auto *f = std::get_if<FunctionDom>(&rt->node))
          elem = tupleDom({*f->from, *f->to});
        else if (!isUnknown(*rt))
          report(e, "'in' needs a collection on the right, got " + show(*rt));
        if (elem && !typeEq(*lt, *elem))
          report(e, "'in' element type mismatch: " + show(*lt) + " vs " +
                        show(*elem));
      }
      return boolDom();
    }
    // comparisons
    std::optional<Domain> lt = check(*bin.lhs);
    std::optional<Domain> rt = check(*bin.rhs);
    if (lt && rt && !typeEq(*lt, *rt)) {
      report(e, "cannot compare " + show(*lt) + " with " + show(*rt));
      return boolDom();
    }
    if (bin.op == "=" || bin.op == "!=")
      return boolDom();
    const Domain &t = lt ? *lt : (rt ? *rt : unknownDom());
    if (std::holds_alternative<UnnamedDom>(t.node)) {
      report(e, "unnamed atoms admit only = and !=");
      return boolDom();
    }
    if (!isAtomDomain(t) && !isUnknown(t))
      report(e, "'" + bin.op + "' compares atoms only, got " + show(t));
    return boolDom();
  }

  std::optional<Domain> checkIndex(const Expr &e, const EIndex &ix) {
    std::optional<Domain> bt = check(*ix.base);
    if (!bt)
      return std::nullopt;
    if (const auto *mat = std::get_if<MatrixDom>(&bt->node)) {
      if (ix.subs.size() != mat->indices.size()) {
        report(e, "matrix has " + std::to_string(mat->indices.size()) +
                      " dimensions, got " + std::to_string(ix.subs.size()) +
                      " indices");
        return *mat->element;
      }
      for (std::size_t i = 0; i < ix.subs.size(); ++i) {
        std::optional<Domain> st = check(*ix.subs[i]);
        if (st && !typeEq(*st, mat->indices[i]))
          report(*ix.subs[i], "index " + std::to_string(i + 1) + " expects " +
                                  show(mat->indices[i]) + ", got " + show(*st));
      }
      return *mat->element;
    }
    if (const auto *tup = std::get_if<TupleDom>(&bt->node)) {
      if (ix.subs.size() != 1) {
        report(e, "tuple projection takes one index");
        return std::nullopt;
      }
      const auto *lit = std::get_if<ELit>(&ix.subs[0]->node);
      const IntV *iv = lit ? std::get_if<IntV>(&lit->v.node) : nullptr;
      if (!iv) {
        report(e, "tuple projection index must be an integer literal");
        return std::nullopt;
      }
      if (iv->v < 1 || iv->v > static_cast<std::int64_t>(tup->components.size())) {
        report(e, "tuple has " + std::to_string(tup->components.size()) +
                      " components, index " + std::to_string(iv->v) +
                      " is out of range");
        return std::nullopt;
      }
      return tup->components[static_cast<std::size_t>(iv->v) - 1];
    }
    if (!isUnknown(*bt))
      report(e, "only matrices and tuples can be indexed, got " + show(*bt));
    return std::nullopt;
  }

  std::optional<Domain> checkApply(const Expr &e, const EApply &ap) {
    std::optional<Domain> ft = check(*ap.fn);
    if (!ft)
      return std::nullopt;
    const auto *fun = std::get_if<FunctionDom>(&ft->node);
    if (!fun) {
      if (!isUnknown(*ft))
        report(e, "only functions can be applied, got " + show(*ft));
      return std::nullopt;
    }
    std::optional<Domain> argTy;
    if (ap.args.size() == 1) {
      argTy = check(*ap.args[0]);
    } else {
      std::vector<Domain> comps;
      bool ok = true;
      for (const ExprPtr &a : ap.args) {
        std::optional<Domain> at = check(*a);
        if (!at)
          ok = false;
        else
          comps.push_back(*at);
      }
      if (ok)
        argTy = tupleDom(std::move(comps));
    }
    if (argTy && !typeEq(*argTy, *fun->from))
      report(e, "argument expects " + show(*fun->from) + ", got " + show(*argTy));
    return *fun->to;
  }

  std::optional<Domain> checkCollect(const Expr &e, const ECollect &c) {
    if (c.flavor == MSetFlavor::Function) {
      Domain keyTy = unknownDom(), valTy = unknownDom();
      for (const auto &[k, v] : c.entries) {
        std::optional<Domain> kt = check(*k);
        std::optional<Domain> vt = check(*v);
        if (kt) {
          if (!typeEq(keyTy, *kt))
            report(*k, "function literal keys have mixed types");
          else if (isUnknown(keyTy))
            keyTy = *kt;
        }
        if (vt) {
          if (!typeEq(valTy, *vt))
            report(*v, "function literal values have mixed types");
          else if (isUnknown(valTy))
            valTy = *vt;
        }
      }
      return functionDom(keyTy, valTy, false);
    }
    Domain elemTy = unknownDom();
    for (const ExprPtr &item : c.items) {
      std::optional<Domain> it = check(*item);
      if (!it)
        continue;
      if (!typeEq(elemTy, *it))
        report(*item, "collection elements have mixed types");
      else if (isUnknown(elemTy))
        elemTy = *it;
    }
    if (c.flavor == MSetFlavor::Set)
      return setDom(std::move(elemTy));
    if (c.flavor == MSetFlavor::Relation) {
      if (const auto *t = std::get_if<TupleDom>(&elemTy.node))
        return relationDom(t->components);
      if (!isUnknown(elemTy)) {
        report(e, "relation literal entries must be tuples");
        return std::nullopt;
      }
      return relationDom({unknownDom()});
    }
    return msetDom(std::move(elemTy), 1);
  }
};

} // namespace

std::vector<std::string> typecheck(const Model &m) {
  Checker c{m, {}, {}};
  for (const ExprPtr &cons : m.constraints) {
    std::optional<Domain> t = c.check(*cons);
    if (t && !typeEq(*t, boolDom()))
      c.report(*cons, "constraint must be bool, got " + show(*t));
  }
  return std::move(c.diags);
}

} // namespace symlex
