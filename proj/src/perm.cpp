#include "symlex/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lexer.hpp"
#include "symlex/error.hpp"

namespace symlex {

namespace {

std::vector<int> invert(const std::vector<int> &fwd) {
  std::vector<int> inv(fwd.size(), 0);
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    int img = fwd[i];
    if (img < 1 || img > static_cast<int>(fwd.size()) || inv[img - 1] != 0)
      throw Error("forward array is not a bijection on 1.." +
                  std::to_string(fwd.size()));
    inv[img - 1] = static_cast<int>(i) + 1;
  }
  return inv;
}

} // namespace

Permutation::Permutation(std::string tag, std::vector<int> forward)
    : tag_(std::move(tag)), fwd_(std::move(forward)), inv_(invert(fwd_)) {}

Permutation Permutation::identity(std::string tag, int size) {
  if (size < 1)
    throw Error("permutation size must be positive");
  std::vector<int> fwd(static_cast<std::size_t>(size));
  std::iota(fwd.begin(), fwd.end(), 1);
  return Permutation(std::move(tag), std::move(fwd));
}

Permutation Permutation::transposition(std::string tag, int size, int a, int b) {
  if (a < 1 || a > size || b < 1 || b > size)
    throw Error("transposition point out of range");
  if (a == b)
    throw Error("transposition needs two distinct points");
  Permutation p = identity(std::move(tag), size);
  std::swap(p.fwd_[a - 1], p.fwd_[b - 1]);
  std::swap(p.inv_[a - 1], p.inv_[b - 1]);
  return p;
}

int Permutation::image(int point) const {
  if (point < 1 || point > size())
    throw Error("point " + std::to_string(point) + " out of range for " + tag_ +
                " of size " + std::to_string(size()));
  return fwd_[static_cast<std::size_t>(point) - 1];
}

int Permutation::preimage(int point) const {
  if (point < 1 || point > size())
    throw Error("point " + std::to_string(point) + " out of range for " + tag_ +
                " of size " + std::to_string(size()));
  return inv_[static_cast<std::size_t>(point) - 1];
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.tag_ = tag_;
  out.fwd_ = inv_;
  out.inv_ = fwd_;
  return out;
}

bool Permutation::isIdentity() const {
  for (std::size_t i = 0; i < fwd_.size(); ++i)
    if (fwd_[i] != static_cast<int>(i) + 1)
      return false;
  return true;
}

int Permutation::moved_points() const {
  int n = 0;
  for (std::size_t i = 0; i < fwd_.size(); ++i)
    if (fwd_[i] != static_cast<int>(i) + 1)
      ++n;
  return n;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(fwd_.size(), false);
  bool any = false;
  for (int start = 1; start <= size(); ++start) {
    if (seen[start - 1] || fwd_[start - 1] == start)
      continue;
    any = true;
    os << "(";
    int p = start;
    bool first = true;
    do {
      seen[p - 1] = true;
      if (!first)
        os << " ";
      os << p;
      first = false;
      p = fwd_[p - 1];
    } while (p != start);
    os << ")";
  }
  if (!any)
    return "()";
  return os.str();
}

Permutation parse_cycles(const std::string &text, const std::string &tag,
                         int size) {
  if (size < 1)
    throw Error("permutation size must be positive");
  std::vector<lex::Token> ts = lex::tokenize(text);
  std::size_t pos = 0;
  auto atSym = [&](const char *s) {
    return ts[pos].kind == lex::Kind::Sym && ts[pos].text == s;
  };
  auto fail = [&](const std::string &msg) -> void {
    throw ParseError(msg, ts[pos].line, ts[pos].col);
  };

  std::vector<int> fwd(static_cast<std::size_t>(size));
  std::iota(fwd.begin(), fwd.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(size), false);

  auto point = [&]() -> int {
    std::int64_t n;
    if (ts[pos].kind == lex::Kind::Int) {
      n = ts[pos].num;
    } else if (ts[pos].kind == lex::Kind::Unnamed) {
      if (ts[pos].text != tag)
        fail("point is tagged " + ts[pos].text + ", expected " + tag);
      n = ts[pos].num;
    } else {
      fail("expected a point");
    }
    if (n < 1 || n > size)
      fail("point " + std::to_string(n) + " out of range for " + tag +
           " of size " + std::to_string(size));
    if (used[static_cast<std::size_t>(n) - 1])
      fail("point " + std::to_string(n) + " appears twice");
    used[static_cast<std::size_t>(n) - 1] = true;
    ++pos;
    return static_cast<int>(n);
  };

  if (!atSym("("))
    fail("expected '('");
  // "()" is the identity and must stand alone
  if (ts[pos + 1].kind == lex::Kind::Sym && ts[pos + 1].text == ")") {
    pos += 2;
    if (ts[pos].kind != lex::Kind::End)
      fail("trailing input after identity cycle");
    return Permutation(tag, std::move(fwd));
  }
  while (atSym("(")) {
    ++pos;
    std::vector<int> cyc;
    cyc.push_back(point());
    while (!atSym(")")) {
      if (atSym(","))
        ++pos;
      cyc.push_back(point());
    }
    ++pos;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      fwd[static_cast<std::size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
  }
  if (ts[pos].kind != lex::Kind::End)
    fail("trailing input after cycles");
  return Permutation(tag, std::move(fwd));
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.tag() != q.tag())
    throw Error("cannot compose permutations of " + p.tag() + " and " + q.tag());
  if (p.size() != q.size())
    throw Error("cannot compose permutations of different sizes");
  std::vector<int> fwd(static_cast<std::size_t>(p.size()));
  for (int x = 1; x <= p.size(); ++x)
    fwd[x - 1] = q.image(p.image(x));
  return Permutation(p.tag(), std::move(fwd));
}

std::vector<Permutation> generator_set(GeneratorFlag flag,
                                       const std::string &tag, int size) {
  if (size < 1)
    throw Error("generator_set needs a positive size");
  std::vector<Permutation> out;
  switch (flag) {
  case GeneratorFlag::Consecutive:
    for (int j = 1; j < size; ++j)
      out.push_back(Permutation::transposition(tag, size, j, j + 1));
    break;
  case GeneratorFlag::AllPairs:
    for (int t = 1; t <= size; ++t)
      for (int u = t + 1; u <= size; ++u)
        out.push_back(Permutation::transposition(tag, size, t, u));
    break;
  case GeneratorFlag::AllPermutations: {
    std::vector<int> fwd(static_cast<std::size_t>(size));
    std::iota(fwd.begin(), fwd.end(), 1);
    while (std::next_permutation(fwd.begin(), fwd.end()))
      out.push_back(Permutation(tag, fwd));
    break;
  }
  }
  return out;
}

const Permutation *DirectProductElem::component(const std::string &tag) const {
  for (const Permutation &p : comps)
    if (p.tag() == tag)
      return &p;
  return nullptr;
}

DirectProductElem DirectProductElem::inverse() const {
  DirectProductElem out;
  for (const Permutation &p : comps)
    out.comps.push_back(p.inverse());
  return out;
}

std::string DirectProductElem::describe() const {
  if (comps.empty())
    return "identity";
  std::ostringstream os;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i)
      os << " ";
    os << comps[i].tag() << ":" << comps[i].cycles();
  }
  return os.str();
}

std::vector<DirectProductElem> dp_elements(DpMode mode,
                                           const std::vector<TagGens> &tags) {
  for (std::size_t i = 0; i < tags.size(); ++i)
    for (std::size_t j = i + 1; j < tags.size(); ++j)
      if (tags[i].tag == tags[j].tag)
        throw Error("duplicate tag " + tags[i].tag + " in dp_elements");

  std::vector<DirectProductElem> out;
  if (mode == DpMode::Independently) {
    for (const TagGens &tg : tags)
      for (const Permutation &g : tg.gens) {
        DirectProductElem e;
        e.comps.push_back(g);
        out.push_back(std::move(e));
      }
    return out;
  }
  // Altogether: odometer over (identity + gens) per tag, last tag fastest.
  std::vector<std::size_t> choice(tags.size(), 0); // 0 = identity, k = gens[k-1]
  for (;;) {
    // advance
    bool done = true;
    for (std::size_t i = tags.size(); i-- > 0;) {
      if (choice[i] < tags[i].gens.size()) {
        ++choice[i];
        for (std::size_t j = i + 1; j < tags.size(); ++j)
          choice[j] = 0;
        done = false;
        break;
      }
    }
    if (done)
      break;
    DirectProductElem e;
    for (std::size_t i = 0; i < tags.size(); ++i)
      if (choice[i] > 0)
        e.comps.push_back(tags[i].gens[choice[i] - 1]);
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace symlex
