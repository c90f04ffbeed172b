#ifndef SYMLEX_ACTION_HPP
#define SYMLEX_ACTION_HPP

#include "symlex/perm.hpp"
#include "symlex/value.hpp"

namespace symlex {

/// The induced action of a permutation of one unnamed type's atoms.
/// Atoms of other types stay fixed; tuples and multisets map elementwise
/// (multisets re-canonicalise); a matrix entry at index i comes from the
/// entry at the preimage of i, transformed.
Value transform(const Permutation &p, const Value &v);

/// Sequential application of each component; components have disjoint
/// supports, so the order does not matter.
Value transform_dp(const DirectProductElem &e, const Value &v);

} // namespace symlex

#endif
