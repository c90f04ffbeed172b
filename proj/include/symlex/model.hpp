#ifndef SYMLEX_MODEL_HPP
#define SYMLEX_MODEL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "symlex/domain.hpp"
#include "symlex/error.hpp"
#include "symlex/literal.hpp"
#include "symlex/value.hpp"

namespace symlex {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ELit {
  Value v;
};
struct EVar {
  std::string name;
};
/// op is one of /\ \/ -> = != < <= > >= + - * / % in
struct EBinOp {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct ENot {
  ExprPtr e;
};
struct ENeg {
  ExprPtr e;
};
///// kind: forAll, exists, or sum; binders range over an atomic domain
struct EQuant {
  std::string kind;
  std::vector<std::string> binders;
  Domain dom;
  ExprPtr body;
};
/// matrix indexing M[e1,...,ek] and tuple projection t[k]
struct EIndex {
  ExprPtr base;
  std::vector<ExprPtr> subs;
};
struct EApply {
  ExprPtr fn;
  std::vector<ExprPtr> args;
};
struct ECard {
  ExprPtr e;
};
struct EToInt {
  ExprPtr e;
};
struct ETuple {
  std::vector<ExprPtr> items;
};
/// mset/set/relation literals hold items; function literals hold entries
struct ECollect {
  MSetFlavor flavor;
  std::vector<ExprPtr> items;
  std::vector<std::pair<ExprPtr, ExprPtr>> entries;
};

struct Expr {
  std::variant<ELit, EVar, EBinOp, ENot, ENeg, EQuant, EIndex, EApply, ECard,
               EToInt, ETuple, ECollect>
      node;
  int line = 0;
  int col = 0;
};

struct UnnamedDecl {
  std::string tag;
  int size;
};
struct EnumDecl {
  std::string name;
  std::vector<std::string> atoms;
};
struct IntLetting {
  std::string name;
  std::int64_t value;
};
struct VarDecl {
  std::string name;
  Domain dom;
  int line = 0;
  int col = 0;
};

struct Model {
  std::vector<UnnamedDecl> unnamed;
  std::vector<EnumDecl> enums;
  std::vector<IntLetting> lettings;
  std::vector<VarDecl> vars;
  std::vector<ExprPtr> constraints;

  const VarDecl *findVar(const std::string &name) const;
  int tagSize(const std::string &tag) const; // -1 when undeclared
  /// Frozen context carrying the model's tags and enums.
  TypeContext typeContext() const;
};

Model parse_model(const std::string &text);
std::string print_model(const Model &m);
std::string print_expr(const Expr &e);

/// Empty iff well-typed; entries carry "line L, column C: message".
std::vector<std::string> typecheck(const Model &m);

} // namespace symlex

#endif
