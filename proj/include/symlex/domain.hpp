#ifndef SYMLEX_DOMAIN_HPP
#define SYMLEX_DOMAIN_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symlex/value.hpp"

namespace symlex {

struct Domain;
using DomainPtr = std::shared_ptr<const Domain>;

struct BoolDom {};

struct IntDom {
  std::int64_t lo = 0;
  std::int64_t hi = 0; // inclusive; lo <= hi
};

struct EnumDom {
  std::string name;
  std::vector<std::string> atoms; // declaration order
};

struct UnnamedDom {
  std::string tag;
  int size = 1;
};

struct TupleDom {
  std::vector<Domain> components;
};

/// Index domains must have finitely enumerable atoms
/// (bool, int, enum or unnamed).
struct MatrixDom {
  std::vector<Domain> indices;
  DomainPtr element;
};

/// Multiset with a per-element multiplicity bound, so the value space is
/// finite. Sets, functions and relations lower to this form; the role
/// records which, and functions carry their side-conditions:
/// keyDistinct = no two elements share a first component,
/// keyTotal    = every value of the first component's domain occurs.
struct MSetDom {
  DomainPtr element;
  int maxOccur = 1;
  MSetFlavor role = MSetFlavor::MSet;
  bool keyDistinct = false;
  bool keyTotal = false;
};

struct SetDom {
  DomainPtr element;
};

struct FunctionDom {
  DomainPtr from;
  DomainPtr to;
  bool total = false;
};

struct RelationDom {
  std::vector<Domain> components;
};

/// Recognised but unsupported surface kinds (partition, sequence, record,
/// variant). Lowering reports them as out of scope.
struct UnsupportedDom {
  std::string kind;
};

struct Domain {
  std::variant<BoolDom, IntDom, EnumDom, UnnamedDom, TupleDom, MatrixDom,
               MSetDom, SetDom, FunctionDom, RelationDom, UnsupportedDom>
      node;
};

Domain boolDom();
Domain intDom(std::int64_t lo, std::int64_t hi);
Domain enumDom(std::string name, std::vector<std::string> atoms);
Domain unnamedDom(std::string tag, int size);
Domain tupleDom(std::vector<Domain> components);
Domain matrixDom(std::vector<Domain> indices, Domain element);
Domain msetDom(Domain element, int maxOccur,
               MSetFlavor role = MSetFlavor::MSet, bool keyDistinct = false,
               bool keyTotal = false);
Domain setDom(Domain element);
Domain functionDom(Domain from, Domain to, bool total);
Domain relationDom(std::vector<Domain> components);

bool operator==(const Domain &a, const Domain &b);
inline bool operator!=(const Domain &a, const Domain &b) { return !(a == b); }

bool isAtomDomain(const Domain &d);

/// The ordered atom list of an atomic domain (bool, int, enum, unnamed).
std::vector<Value> domain_atoms(const Domain &d);

/// Rewrites sets, functions and relations into bounded multisets of
/// tuples, recursively. Atoms, tuples and matrices pass through with
/// their components lowered. Idempotent. Throws OutOfScopeError for
/// unsupported kinds.
Domain lower_domain(const Domain &d);

/// True iff d contains only atoms, tuples, matrices and multisets.
bool is_lowered(const Domain &d);

/// Number of values of a lowered domain, saturating at 2^63-1.
std::uint64_t value_count(const Domain &lowered);

/// Restartable stream over every value of a lowered finite domain, in
/// strictly ascending order under cmp.
class ValueStream {
public:
  explicit ValueStream(const Domain &lowered);
  ValueStream(ValueStream &&) noexcept;
  ValueStream &operator=(ValueStream &&) noexcept;
  ~ValueStream();

  std::optional<Value> next();
  void reset();

  struct Impl;

private:
  std::unique_ptr<Impl> impl_;
};

/// Materialises the stream. Throws BudgetError when the domain holds more
/// than maxCount values.
std::vector<Value> enumerate_values(const Domain &d,
                                    std::uint64_t maxCount = 1000000);

/// True iff v inhabits lower_domain(d), side-conditions included.
bool check_value(const Domain &d, const Value &v);

/// The tags of every unnamed type occurring anywhere in d.
void collect_tags(const Domain &d, std::vector<std::string> &out);

} // namespace symlex

#endif
