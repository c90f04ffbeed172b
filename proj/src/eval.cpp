#include <algorithm>

#include "symlex/eval.hpp"
#include "symlex/literal.hpp"
#include "symlex/order.hpp"

namespace symlex {

namespace {

bool asBool(const Value &v) {
  const auto *b = std::get_if<BoolV>(&v.node);
  if (!b)
    throw EvalError("expected a bool value");
  return b->v;
}

std::int64_t asInt(const Value &v) {
  const auto *i = std::get_if<IntV>(&v.node);
  if (!i)
    throw EvalError("expected an int value");
  return i->v;
}

Value evalQuant(const EQuant &q, std::size_t binder, EvalEnv &env,
                const std::vector<Value> &atoms);

Value evalExpr(const Expr &e, EvalEnv &env);

Value lookupName(const Expr &e, const std::string &name, EvalEnv &env) {
  auto it = env.locals.find(name);
  if (it != env.locals.end())
    return it->second;
  if (env.asg)
    for (const auto &kv : env.asg->byVar)
      if (kv.first == name)
        return kv.second;
  if (env.model) {
    for (const IntLetting &l : env.model->lettings)
      if (l.name == name)
        return intV(l.value);
    for (const EnumDecl &d : env.model->enums)
      for (std::size_t k = 0; k < d.atoms.size(); ++k)
        if (d.atoms[k] == name)
          return enumV(d.name, d.atoms[k], static_cast<int>(k + 1));
  }
  throw EvalError("line " + std::to_string(e.line) + ": unknown name " + name);
}

Value evalBin(const Expr &e, const EBinOp &bin, EvalEnv &env) {
  if (bin.op == "/\\") {
    if (!asBool(evalExpr(*bin.lhs, env)))
      return boolV(false);
    return boolV(asBool(evalExpr(*bin.rhs, env)));
  }
  if (bin.op == "\\/") {
    if (asBool(evalExpr(*bin.lhs, env)))
      return boolV(true);
    return boolV(asBool(evalExpr(*bin.rhs, env)));
  }
  if (bin.op == "->") {
    if (!asBool(evalExpr(*bin.lhs, env)))
      return boolV(true);
    return boolV(asBool(evalExpr(*bin.rhs, env)));
  }
  Value l = evalExpr(*bin.lhs, env);
  if (bin.op == "=")
    return boolV(l == evalExpr(*bin.rhs, env));
  if (bin.op == "!=")
    return boolV(!(l == evalExpr(*bin.rhs, env)));
  if (bin.op == "in") {
    Value r = evalExpr(*bin.rhs, env);
    const auto *ms = std::get_if<MSetV>(&r.node);
    if (!ms)
      throw EvalError("'in' needs a collection on the right");
    for (const Value &item : ms->items)
      if (item == l)
        return boolV(true);
    return boolV(false);
  }
  if (bin.op == "<" || bin.op == "<=" || bin.op == ">" || bin.op == ">=") {
    Cmp o = cmp(l, evalExpr(*bin.rhs, env));
    if (bin.op == "<")
      return boolV(o == Cmp::LT);
    if (bin.op == "<=")
      return boolV(o != Cmp::GT);
    if (bin.op == ">")
      return boolV(o == Cmp::GT);
    return boolV(o != Cmp::LT);
  }
  std::int64_t a = asInt(l);
  std::int64_t b = asInt(evalExpr(*bin.rhs, env));
  if (bin.op == "+")
    return intV(a + b);
  if (bin.op == "-")
    return intV(a - b);
  if (bin.op == "*")
    return intV(a * b);
  if (b == 0)
    throw EvalError("line " + std::to_string(e.line) + ": division by zero");
  return intV(bin.op == "/" ? a / b : a % b);
}

Value evalIndex(const Expr &e, const EIndex &ix, EvalEnv &env) {
  Value base = evalExpr(*ix.base, env);
  if (const auto *tup = std::get_if<TupleV>(&base.node)) {
    if (ix.subs.size() != 1)
      throw EvalError("tuple projection takes one index");
    std::int64_t k = asInt(evalExpr(*ix.subs[0], env));
    if (k < 1 || k > static_cast<std::int64_t>(tup->items.size()))
      throw EvalError("line " + std::to_string(e.line) +
                      ": tuple index out of range");
    return tup->items[static_cast<std::size_t>(k) - 1];
  }
  const auto *mat = std::get_if<MatrixV>(&base.node);
  if (!mat || ix.subs.size() != mat->indexLists.size())
    throw EvalError("line " + std::to_string(e.line) + ": bad indexing");
  std::size_t offset = 0;
  for (std::size_t d = 0; d < ix.subs.size(); ++d) {
    Value sub = evalExpr(*ix.subs[d], env);
    const std::vector<Value> &axis = mat->indexLists[d];
    auto hit = std::find(axis.begin(), axis.end(), sub);
    if (hit == axis.end())
      throw EvalError("line " + std::to_string(e.line) +
                      ": index out of range: " + print_value(sub));
    offset = offset * axis.size() +
             static_cast<std::size_t>(hit - axis.begin());
  }
  return mat->entries[offset];
}

Value evalApply(const Expr &e, const EApply &ap, EvalEnv &env) {
  Value fn = evalExpr(*ap.fn, env);
  const auto *graph = std::get_if<MSetV>(&fn.node);
  if (!graph)
    throw EvalError("line " + std::to_string(e.line) +
                    ": only functions can be applied");
  Value key;
  if (ap.args.size() == 1) {
    key = evalExpr(*ap.args[0], env);
  } else {
    std::vector<Value> parts;
    parts.reserve(ap.args.size());
    for (const ExprPtr &a : ap.args)
      parts.push_back(evalExpr(*a, env));
    key = tupleV(std::move(parts));
  }
  for (const Value &pair : graph->items) {
    const auto *t = std::get_if<TupleV>(&pair.node);
    if (t && t->items.size() == 2 && t->items[0] == key)
      return t->items[1];
  }
  throw EvalError("line " + std::to_string(e.line) +
                  ": function is not defined at " + print_value(key));
}

Value evalCollect(const Expr &e, const ECollect &c, EvalEnv &env) {
  if (c.flavor == MSetFlavor::Function) {
    std::vector<Value> pairs;
    pairs.reserve(c.entries.size());
    for (const auto &[k, v] : c.entries)
      pairs.push_back(tupleV({evalExpr(*k, env), evalExpr(*v, env)}));
    Value out = msetV(std::move(pairs), MSetFlavor::Function);
    const auto &items = std::get<MSetV>(out.node).items;
    for (std::size_t i = 1; i < items.size(); ++i) {
      const auto &prev = std::get<TupleV>(items[i - 1].node).items[0];
      const auto &cur = std::get<TupleV>(items[i].node).items[0];
      if (prev == cur)
        throw EvalError("line " + std::to_string(e.line) +
                        ": duplicate key in function literal: " +
                        print_value(cur));
    }
    return out;
  }
  std::vector<Value> items;
  items.reserve(c.items.size());
  for (const ExprPtr &item : c.items)
    items.push_back(evalExpr(*item, env));
  if (c.flavor == MSetFlavor::MSet)
    return msetV(std::move(items), MSetFlavor::MSet);
  return setV(std::move(items), c.flavor);
}

Value evalQuant(const EQuant &q, std::size_t binder, EvalEnv &env,
                const std::vector<Value> &atoms) {
  if (binder == q.binders.size()) {
    if (q.kind == "sum")
      return intV(asInt(evalExpr(*q.body, env)));
    return boolV(asBool(evalExpr(*q.body, env)));
  }
  const std::string &name = q.binders[binder];
  auto prev = env.locals.find(name);
  bool hadPrev = prev != env.locals.end();
  Value saved = hadPrev ? prev->second : Value{};
  std::int64_t total = 0;
  bool result = q.kind == "forAll";
  for (const Value &atom : atoms) {
    env.locals[name] = atom;
    Value inner = evalQuant(q, binder + 1, env, atoms);
    if (q.kind == "sum") {
      total += asInt(inner);
    } else if (q.kind == "forAll") {
      if (!asBool(inner)) {
        result = false;
        break;
      }
    } else {
      if (asBool(inner)) {
        result = true;
        break;
      }
    }
  }
  if (hadPrev)
    env.locals[name] = saved;
  else
    env.locals.erase(name);
  if (q.kind == "sum")
    return intV(total);
  return boolV(result);
}

Value evalExpr(const Expr &e, EvalEnv &env) {
  if (const auto *lit = std::get_if<ELit>(&e.node))
    return lit->v;
  if (const auto *var = std::get_if<EVar>(&e.node))
    return lookupName(e, var->name, env);
  if (const auto *bin = std::get_if<EBinOp>(&e.node))
    return evalBin(e, *bin, env);
  if (const auto *n = std::get_if<ENot>(&e.node))
    return boolV(!asBool(evalExpr(*n->e, env)));
  if (const auto *n = std::get_if<ENeg>(&e.node))
    return intV(-asInt(evalExpr(*n->e, env)));
  if (const auto *q = std::get_if<EQuant>(&e.node))
    return evalQuant(*q, 0, env, domain_atoms(q->dom));
  if (const auto *ix = std::get_if<EIndex>(&e.node))
    return evalIndex(e, *ix, env);
  if (const auto *ap = std::get_if<EApply>(&e.node))
    return evalApply(e, *ap, env);
  if (const auto *c = std::get_if<ECard>(&e.node)) {
    Value v = evalExpr(*c->e, env);
    const auto *ms = std::get_if<MSetV>(&v.node);
    if (!ms)
      throw EvalError("|...| needs a collection");
    return intV(static_cast<std::int64_t>(ms->items.size()));
  }
  if (const auto *t = std::get_if<EToInt>(&e.node))
    return intV(asBool(evalExpr(*t->e, env)) ? 1 : 0);
  if (const auto *t = std::get_if<ETuple>(&e.node)) {
    std::vector<Value> items;
    items.reserve(t->items.size());
    for (const ExprPtr &item : t->items)
      items.push_back(evalExpr(*item, env));
    return tupleV(std::move(items));
  }
  return evalCollect(e, std::get<ECollect>(e.node), env);
}

} // namespace

Value eval_expr(const Expr &e, EvalEnv &env) { return evalExpr(e, env); }

bool eval_constraints(const Model &m, const Assignment &asg) {
  EvalEnv env{&m, &asg, {}};
  for (const ExprPtr &cons : m.constraints)
    if (!asBool(evalExpr(*cons, env)))
      return false;
  return true;
}

} // namespace symlex
