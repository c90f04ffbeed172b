#ifndef SYMLEX_ORDER_HPP
#define SYMLEX_ORDER_HPP

#include <cstdint>
#include <vector>

#include "symlex/value.hpp"

namespace symlex {

enum class Cmp { LT, EQ, GT };

/// The universal total order on values of one (lowered) domain.
///
/// Integers by <=, false before true, enum atoms by declaration position,
/// unnamed atoms by index, tuples and matrices lexicographically over their
/// components (matrices flattened row-major), multisets by the recursive
/// min-removal rule, which makes the empty multiset the maximum.
///
/// Throws Error when the two values are structurally incomparable.
Cmp cmp(const Value &a, const Value &b);

/// Convenience: cmp(a, b) != GT.
bool leq(const Value &a, const Value &b);

/// Standard lexicographic comparison of two equal-length vectors under cmp.
Cmp lex_cmp(const std::vector<Value> &xs, const std::vector<Value> &ys);

/// A multiset encoded as negated multiplicities over an ordered universe.
/// Lex order of these vectors agrees with the multiset order.
struct OccurrenceVector {
  std::vector<Value> universe;        // strictly ascending under cmp
  std::vector<std::int64_t> entries;  // -freq, aligned with universe
};

OccurrenceVector occurrence_vector(const Value &mset,
                                   const std::vector<Value> &universe);

Cmp lex_cmp_ints(const std::vector<std::int64_t> &xs,
                 const std::vector<std::int64_t> &ys);

} // namespace symlex

#endif
