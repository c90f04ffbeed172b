#ifndef SYMLEX_EVAL_HPP
#define SYMLEX_EVAL_HPP

#include <map>
#include <string>

#include "symlex/error.hpp"
#include "symlex/model.hpp"

namespace symlex {

/// Raised for runtime failures on well-typed expressions: division by zero,
/// matrix indices outside the index domain, application of a partial
/// function at a missing key.
struct EvalError : Error {
  using Error::Error;
};

/// Name resolution for eval_expr, innermost first: quantifier locals, then
/// the assignment's decision variables, then integer lettings and enum atoms
/// from the model.
struct EvalEnv {
  const Model *model = nullptr;
  const Assignment *asg = nullptr;
  std::map<std::string, Value> locals;
};

Value eval_expr(const Expr &e, EvalEnv &env);

/// True iff every "such that" constraint of m holds under asg.
bool eval_constraints(const Model &m, const Assignment &asg);

} // namespace symlex

#endif
