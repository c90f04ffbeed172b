#include "symlex/domain.hpp"

#include <algorithm>
#include <limits>

#include "symlex/error.hpp"
#include "symlex/order.hpp"

namespace symlex {

namespace {

constexpr std::uint64_t kCountCap = std::numeric_limits<std::int64_t>::max();

std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  if (a > kCountCap / b)
    return kCountCap;
  return a * b;
}

std::uint64_t satPow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = satMul(r, base);
    if (r == kCountCap)
      return r;
  }
  return r;
}

} // namespace

Domain boolDom() { return Domain{BoolDom{}}; }

Domain intDom(std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw Error("int domain requires lo <= hi, got int(" + std::to_string(lo) +
                ".." + std::to_string(hi) + ")");
  return Domain{IntDom{lo, hi}};
}

Domain enumDom(std::string name, std::vector<std::string> atoms) {
  if (atoms.empty())
    throw Error("enum domain " + name + " has no atoms");
  return Domain{EnumDom{std::move(name), std::move(atoms)}};
}

Domain unnamedDom(std::string tag, int size) {
  if (size < 1)
    throw Error("unnamed type " + tag + " must have positive size");
  return Domain{UnnamedDom{std::move(tag), size}};
}

Domain tupleDom(std::vector<Domain> components) {
  return Domain{TupleDom{std::move(components)}};
}

Domain matrixDom(std::vector<Domain> indices, Domain element) {
  for (const Domain &ix : indices)
    if (!isAtomDomain(ix))
      throw Error("matrix index domains must be atomic");
  return Domain{
      MatrixDom{std::move(indices), std::make_shared<Domain>(std::move(element))}};
}

Domain msetDom(Domain element, int maxOccur, MSetFlavor role, bool keyDistinct,
               bool keyTotal) {
  if (maxOccur < 1)
    throw Error("mset multiplicity bound must be positive");
  return Domain{MSetDom{std::make_shared<Domain>(std::move(element)), maxOccur,
                        role, keyDistinct, keyTotal}};
}

Domain setDom(Domain element) {
  return Domain{SetDom{std::make_shared<Domain>(std::move(element))}};
}

Domain functionDom(Domain from, Domain to, bool total) {
  return Domain{FunctionDom{std::make_shared<Domain>(std::move(from)),
                            std::make_shared<Domain>(std::move(to)), total}};
}

Domain relationDom(std::vector<Domain> components) {
  return Domain{RelationDom{std::move(components)}};
}

bool operator==(const Domain &a, const Domain &b) {
  if (a.node.index() != b.node.index())
    return false;
  if (std::holds_alternative<BoolDom>(a.node))
    return true;
  if (const auto *x = std::get_if<IntDom>(&a.node)) {
    const auto &y = std::get<IntDom>(b.node);
    return x->lo == y.lo && x->hi == y.hi;
  }
  if (const auto *x = std::get_if<EnumDom>(&a.node)) {
    const auto &y = std::get<EnumDom>(b.node);
    return x->name == y.name && x->atoms == y.atoms;
  }
  if (const auto *x = std::get_if<UnnamedDom>(&a.node)) {
    const auto &y = std::get<UnnamedDom>(b.node);
    return x->tag == y.tag && x->size == y.size;
  }
  if (const auto *x = std::get_if<TupleDom>(&a.node)) {
    const auto &y = std::get<TupleDom>(b.node);
    if (x->components.size() != y.components.size())
      return false;
    for (std::size_t i = 0; i < x->components.size(); ++i)
      if (x->components[i] != y.components[i])
        return false;
    return true;
  }
  if (const auto *x = std::get_if<MatrixDom>(&a.node)) {
    const auto &y = std::get<MatrixDom>(b.node);
    if (x->indices.size() != y.indices.size())
      return false;
    for (std::size_t i = 0; i < x->indices.size(); ++i)
      if (x->indices[i] != y.indices[i])
        return false;
    return *x->element == *y.element;
  }
  if (const auto *x = std::get_if<MSetDom>(&a.node)) {
    const auto &y = std::get<MSetDom>(b.node);
    return x->maxOccur == y.maxOccur && x->role == y.role &&
           x->keyDistinct == y.keyDistinct && x->keyTotal == y.keyTotal &&
           *x->element == *y.element;
  }
  if (const auto *x = std::get_if<SetDom>(&a.node))
    return *x->element == *std::get<SetDom>(b.node).element;
  if (const auto *x = std::get_if<FunctionDom>(&a.node)) {
    const auto &y = std::get<FunctionDom>(b.node);
    return x->total == y.total && *x->from == *y.from && *x->to == *y.to;
  }
  if (const auto *x = std::get_if<RelationDom>(&a.node)) {
    const auto &y = std::get<RelationDom>(b.node);
    if (x->components.size() != y.components.size())
      return false;
    for (std::size_t i = 0; i < x->components.size(); ++i)
      if (x->components[i] != y.components[i])
        return false;
    return true;
  }
  return std::get<UnsupportedDom>(a.node).kind ==
         std::get<UnsupportedDom>(b.node).kind;
}

bool isAtomDomain(const Domain &d) {
  return std::holds_alternative<BoolDom>(d.node) ||
         std::holds_alternative<IntDom>(d.node) ||
         std::holds_alternative<EnumDom>(d.node) ||
         std::holds_alternative<UnnamedDom>(d.node);
}

std::vector<Value> domain_atoms(const Domain &d) {
  std::vector<Value> out;
  if (std::holds_alternative<BoolDom>(d.node)) {
    out.push_back(boolV(false));
    out.push_back(boolV(true));
  } else if (const auto *x = std::get_if<IntDom>(&d.node)) {
    for (std::int64_t n = x->lo; n <= x->hi; ++n)
      out.push_back(intV(n));
  } else if (const auto *x = std::get_if<EnumDom>(&d.node)) {
    for (std::size_t i = 0; i < x->atoms.size(); ++i)
      out.push_back(enumV(x->name, x->atoms[i], static_cast<int>(i) + 1));
  } else if (const auto *x = std::get_if<UnnamedDom>(&d.node)) {
    for (int i = 1; i <= x->size; ++i)
      out.push_back(unnamedV(x->tag, i));
  } else {
    throw Error("domain_atoms: not an atomic domain");
  }
  return out;
}

Domain lower_domain(const Domain &d) {
  if (const auto *x = std::get_if<UnsupportedDom>(&d.node))
    throw OutOfScopeError(x->kind);
  if (isAtomDomain(d))
    return d;
  if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    std::vector<Domain> comps;
    comps.reserve(x->components.size());
    for (const Domain &c : x->components)
      comps.push_back(lower_domain(c));
    return tupleDom(std::move(comps));
  }
  if (const auto *x = std::get_if<MatrixDom>(&d.node))
    return matrixDom(x->indices, lower_domain(*x->element));
  if (const auto *x = std::get_if<MSetDom>(&d.node))
    return msetDom(lower_domain(*x->element), x->maxOccur, x->role,
                   x->keyDistinct, x->keyTotal);
  if (const auto *x = std::get_if<SetDom>(&d.node))
    return msetDom(lower_domain(*x->element), 1, MSetFlavor::Set);
  if (const auto *x = std::get_if<FunctionDom>(&d.node)) {
    Domain pair = tupleDom({lower_domain(*x->from), lower_domain(*x->to)});
    return msetDom(std::move(pair), 1, MSetFlavor::Function,
                   /*keyDistinct=*/true, /*keyTotal=*/x->total);
  }
  const auto &x = std::get<RelationDom>(d.node);
  std::vector<Domain> comps;
  comps.reserve(x.components.size());
  for (const Domain &c : x.components)
    comps.push_back(lower_domain(c));
  return msetDom(tupleDom(std::move(comps)), 1, MSetFlavor::Relation);
}

bool is_lowered(const Domain &d) {
  if (isAtomDomain(d))
    return true;
  if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    for (const Domain &c : x->components)
      if (!is_lowered(c))
        return false;
    return true;
  }
  if (const auto *x = std::get_if<MatrixDom>(&d.node))
    return is_lowered(*x->element);
  if (const auto *x = std::get_if<MSetDom>(&d.node))
    return is_lowered(*x->element);
  return false;
}

std::uint64_t value_count(const Domain &d) {
  if (std::holds_alternative<BoolDom>(d.node))
    return 2;
  if (const auto *x = std::get_if<IntDom>(&d.node))
    return static_cast<std::uint64_t>(x->hi - x->lo + 1);
  if (const auto *x = std::get_if<EnumDom>(&d.node))
    return x->atoms.size();
  if (const auto *x = std::get_if<UnnamedDom>(&d.node))
    return static_cast<std::uint64_t>(x->size);
  if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    std::uint64_t r = 1;
    for (const Domain &c : x->components)
      r = satMul(r, value_count(c));
    return r;
  }
  if (const auto *x = std::get_if<MatrixDom>(&d.node)) {
    std::uint64_t cells = 1;
    for (const Domain &ix : x->indices)
      cells = satMul(cells, value_count(ix));
    return satPow(value_count(*x->element), cells);
  }
  if (const auto *x = std::get_if<MSetDom>(&d.node)) {
    if (x->keyDistinct) {
      const auto *pair = std::get_if<TupleDom>(&x->element->node);
      if (!pair || pair->components.size() != 2)
        throw Error("value_count: function multiset must hold pairs");
      std::uint64_t from = value_count(pair->components[0]);
      std::uint64_t to = value_count(pair->components[1]);
      return satPow(x->keyTotal ? to : to + 1, from);
    }
    return satPow(static_cast<std::uint64_t>(x->maxOccur) + 1,
                  value_count(*x->element));
  }
  throw Error("value_count: domain is not lowered");
}

// ---------------------------------------------------------------------------
// Enumeration

struct ValueStream::Impl {
  virtual std::optional<Value> next() = 0;
  virtual void reset() = 0;
  virtual ~Impl() = default;
};

namespace {

using ImplPtr = std::unique_ptr<ValueStream::Impl>;

ImplPtr makeImpl(const Domain &d);

struct AtomsImpl final : ValueStream::Impl {
  std::vector<Value> atoms;
  std::size_t pos = 0;

  explicit AtomsImpl(const Domain &d) : atoms(domain_atoms(d)) {}

  std::optional<Value> next() override {
    if (pos >= atoms.size())
      return std::nullopt;
    return atoms[pos++];
  }
  void reset() override { pos = 0; }
};

// Cartesian product with the last component varying fastest; ascending
// component streams give an ascending lexicographic product.
struct OdometerImpl final : ValueStream::Impl {
  std::vector<ImplPtr> children;
  std::vector<Value> current;
  bool started = false;
  bool exhausted = false;
  // Matrix shape when nonempty, otherwise assembles a tuple.
  std::vector<std::vector<Value>> indexLists;
  bool isMatrix = false;

  std::optional<Value> next() override {
    if (exhausted)
      return std::nullopt;
    if (!started) {
      started = true;
      current.clear();
      for (auto &c : children) {
        auto v = c->next();
        if (!v) {
          exhausted = true;
          return std::nullopt;
        }
        current.push_back(std::move(*v));
      }
      return assemble();
    }
    for (std::size_t i = children.size(); i-- > 0;) {
      auto v = children[i]->next();
      if (v) {
        current[i] = std::move(*v);
        return assemble();
      }
      children[i]->reset();
      auto first = children[i]->next();
      current[i] = std::move(*first);
    }
    exhausted = true;
    return std::nullopt;
  }

  void reset() override {
    for (auto &c : children)
      c->reset();
    started = false;
    exhausted = false;
    current.clear();
  }

  Value assemble() const {
    if (isMatrix)
      return matrixV(indexLists, current);
    return tupleV(current);
  }
};

// Multisets stream in ascending multiset order: multiplicity vectors with
// every coordinate counting down from the bound, last coordinate fastest,
// which is exactly lex-ascending order of the negated-frequency vectors.
struct MSetImpl final : ValueStream::Impl {
  std::vector<Value> universe;
  int maxOccur;
  MSetFlavor flavor;
  bool keyDistinct;
  bool keyTotal;
  std::vector<std::pair<std::size_t, std::size_t>> keyGroups; // [start,end)
  std::vector<int> freq;
  bool started = false;
  bool exhausted = false;

  MSetImpl(const MSetDom &m, std::vector<Value> univ)
      : universe(std::move(univ)), maxOccur(m.maxOccur), flavor(m.role),
        keyDistinct(m.keyDistinct), keyTotal(m.keyTotal) {
    if (keyDistinct)
      buildKeyGroups();
  }

  void buildKeyGroups() {
    std::size_t i = 0;
    while (i < universe.size()) {
      const Value &first = std::get<TupleV>(universe[i].node).items[0];
      std::size_t j = i + 1;
      while (j < universe.size() &&
             std::get<TupleV>(universe[j].node).items[0] == first)
        ++j;
      keyGroups.emplace_back(i, j);
      i = j;
    }
  }

  bool admissible() const {
    if (!keyDistinct)
      return true;
    for (const auto &[s, e] : keyGroups) {
      int total = 0;
      for (std::size_t k = s; k < e; ++k)
        total += freq[k];
      if (total > 1)
        return false;
      if (keyTotal && total != 1)
        return false;
    }
    return true;
  }

  bool advance() {
    if (!started) {
      started = true;
      freq.assign(universe.size(), maxOccur);
      return true;
    }
    for (std::size_t i = freq.size(); i-- > 0;) {
      if (freq[i] > 0) {
        --freq[i];
        for (std::size_t j = i + 1; j < freq.size(); ++j)
          freq[j] = maxOccur;
        return true;
      }
    }
    return false;
  }

  std::optional<Value> next() override {
    if (exhausted)
      return std::nullopt;
    while (advance()) {
      if (!admissible())
        continue;
      std::vector<Value> items;
      for (std::size_t k = 0; k < universe.size(); ++k)
        for (int c = 0; c < freq[k]; ++c)
          items.push_back(universe[k]);
      return msetVSorted(std::move(items), flavor);
    }
    exhausted = true;
    return std::nullopt;
  }

  void reset() override {
    started = false;
    exhausted = false;
    freq.clear();
  }
};

ImplPtr makeImpl(const Domain &d) {
  if (isAtomDomain(d))
    return std::make_unique<AtomsImpl>(d);
  if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    auto odo = std::make_unique<OdometerImpl>();
    for (const Domain &c : x->components)
      odo->children.push_back(makeImpl(c));
    return odo;
  }
  if (const auto *x = std::get_if<MatrixDom>(&d.node)) {
    auto odo = std::make_unique<OdometerImpl>();
    odo->isMatrix = true;
    std::uint64_t cells = 1;
    for (const Domain &ix : x->indices) {
      odo->indexLists.push_back(domain_atoms(ix));
      cells = satMul(cells, odo->indexLists.back().size());
    }
    if (cells == kCountCap)
      throw BudgetError("matrix domain has too many cells to enumerate");
    for (std::uint64_t i = 0; i < cells; ++i)
      odo->children.push_back(makeImpl(*x->element));
    return odo;
  }
  if (const auto *x = std::get_if<MSetDom>(&d.node)) {
    std::vector<Value> universe = enumerate_values(*x->element);
    return std::make_unique<MSetImpl>(*x, std::move(universe));
  }
  throw Error("enumerate_values requires a lowered domain");
}

} // namespace

ValueStream::ValueStream(const Domain &lowered) : impl_(makeImpl(lowered)) {}
ValueStream::ValueStream(ValueStream &&) noexcept = default;
ValueStream &ValueStream::operator=(ValueStream &&) noexcept = default;
ValueStream::~ValueStream() = default;

std::optional<Value> ValueStream::next() { return impl_->next(); }
void ValueStream::reset() { impl_->reset(); }

std::vector<Value> enumerate_values(const Domain &d, std::uint64_t maxCount) {
  Domain low = lower_domain(d);
  if (value_count(low) > maxCount)
    throw BudgetError("domain holds more than " + std::to_string(maxCount) +
                      " values");
  ValueStream stream(low);
  std::vector<Value> out;
  while (auto v = stream.next())
    out.push_back(std::move(*v));
  return out;
}

// ---------------------------------------------------------------------------
// Membership

namespace {

bool checkLowered(const Domain &d, const Value &v);

bool checkMSet(const MSetDom &m, const MSetV &mv) {
  for (const Value &item : mv.items)
    if (!checkLowered(*m.element, item))
      return false;
  // canonical order with bounded runs of equal items
  std::size_t i = 0;
  while (i < mv.items.size()) {
    std::size_t j = i + 1;
    while (j < mv.items.size() && mv.items[j] == mv.items[i])
      ++j;
    if (j - i > static_cast<std::size_t>(m.maxOccur))
      return false;
    if (j < mv.items.size() && cmp(mv.items[i], mv.items[j]) != Cmp::LT)
      return false;
    i = j;
  }
  if (m.keyDistinct) {
    for (std::size_t k = 0; k + 1 < mv.items.size(); ++k) {
      const auto &a = std::get<TupleV>(mv.items[k].node).items[0];
      const auto &b = std::get<TupleV>(mv.items[k + 1].node).items[0];
      if (a == b)
        return false;
    }
    if (m.keyTotal) {
      const auto &pair = std::get<TupleDom>(m.element->node);
      if (mv.items.size() != value_count(pair.components[0]))
        return false;
    }
  }
  return true;
}

bool checkLowered(const Domain &d, const Value &v) {
  if (std::holds_alternative<BoolDom>(d.node))
    return std::holds_alternative<BoolV>(v.node);
  if (const auto *x = std::get_if<IntDom>(&d.node)) {
    const auto *iv = std::get_if<IntV>(&v.node);
    return iv && iv->v >= x->lo && iv->v <= x->hi;
  }
  if (const auto *x = std::get_if<EnumDom>(&d.node)) {
    const auto *ev = std::get_if<EnumV>(&v.node);
    return ev && ev->enumName == x->name && ev->pos >= 1 &&
           ev->pos <= static_cast<int>(x->atoms.size()) &&
           ev->label == x->atoms[static_cast<std::size_t>(ev->pos) - 1];
  }
  if (const auto *x = std::get_if<UnnamedDom>(&d.node)) {
    const auto *uv = std::get_if<UnnamedV>(&v.node);
    return uv && uv->tag == x->tag && uv->index >= 1 && uv->index <= x->size;
  }
  if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    const auto *tv = std::get_if<TupleV>(&v.node);
    if (!tv || tv->items.size() != x->components.size())
      return false;
    for (std::size_t i = 0; i < tv->items.size(); ++i)
      if (!checkLowered(x->components[i], tv->items[i]))
        return false;
    return true;
  }
  if (const auto *x = std::get_if<MatrixDom>(&d.node)) {
    const auto *mv = std::get_if<MatrixV>(&v.node);
    if (!mv || mv->indexLists.size() != x->indices.size())
      return false;
    std::size_t cells = 1;
    for (std::size_t dim = 0; dim < x->indices.size(); ++dim) {
      std::vector<Value> atoms = domain_atoms(x->indices[dim]);
      if (mv->indexLists[dim].size() != atoms.size())
        return false;
      for (std::size_t k = 0; k < atoms.size(); ++k)
        if (!(mv->indexLists[dim][k] == atoms[k]))
          return false;
      cells *= atoms.size();
    }
    if (mv->entries.size() != cells)
      return false;
    for (const Value &e : mv->entries)
      if (!checkLowered(*x->element, e))
        return false;
    return true;
  }
  const auto *x = std::get_if<MSetDom>(&d.node);
  if (!x)
    return false;
  const auto *mv = std::get_if<MSetV>(&v.node);
  return mv && checkMSet(*x, *mv);
}

} // namespace

bool check_value(const Domain &d, const Value &v) {
  return checkLowered(lower_domain(d), v);
}

void collect_tags(const Domain &d, std::vector<std::string> &out) {
  if (const auto *x = std::get_if<UnnamedDom>(&d.node)) {
    if (std::find(out.begin(), out.end(), x->tag) == out.end())
      out.push_back(x->tag);
    return;
  }
  if (const auto *x = std::get_if<TupleDom>(&d.node)) {
    for (const Domain &c : x->components)
      collect_tags(c, out);
  } else if (const auto *x = std::get_if<MatrixDom>(&d.node)) {
    for (const Domain &ix : x->indices)
      collect_tags(ix, out);
    collect_tags(*x->element, out);
  } else if (const auto *x = std::get_if<MSetDom>(&d.node)) {
    collect_tags(*x->element, out);
  } else if (const auto *x = std::get_if<SetDom>(&d.node)) {
    collect_tags(*x->element, out);
  } else if (const auto *x = std::get_if<FunctionDom>(&d.node)) {
    collect_tags(*x->from, out);
    collect_tags(*x->to, out);
  } else if (const auto *x = std::get_if<RelationDom>(&d.node)) {
    for (const Domain &c : x->components)
      collect_tags(c, out);
  }
}

} // namespace symlex
