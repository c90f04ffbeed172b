#ifndef SYMLEX_PERM_HPP
#define SYMLEX_PERM_HPP

#include <string>
#include <vector>

namespace symlex {

/// A permutation of one unnamed type's atoms, stored together with its
/// inverse so preimage lookups never recompute.
class Permutation {
public:
  Permutation(std::string tag, std::vector<int> forward);
  static Permutation identity(std::string tag, int size);
  static Permutation transposition(std::string tag, int size, int a, int b);

  const std::string &tag() const { return tag_; }
  int size() const { return static_cast<int>(fwd_.size()); }
  int image(int point) const;
  int preimage(int point) const;
  const std::vector<int> &forward() const { return fwd_; }

  Permutation inverse() const;
  bool isIdentity() const;
  int moved_points() const;
  std::string cycles() const;

  bool operator==(const Permutation &other) const {
    return tag_ == other.tag_ && fwd_ == other.fwd_;
  }
  bool operator!=(const Permutation &other) const { return !(*this == other); }

private:
  Permutation() = default;
  std::string tag_;
  std::vector<int> fwd_;
  std::vector<int> inv_;
};

/// Cycle notation, e.g. "(1 2)(3 4)", "(1_T,2_T)", "()" for the identity.
Permutation parse_cycles(const std::string &text, const std::string &tag,
                         int size);

/// Left-to-right composition: the result maps x to q(p(x)).
Permutation compose(const Permutation &p, const Permutation &q);

enum class GeneratorFlag { Consecutive, AllPairs, AllPermutations };

/// Deterministically ordered generating sets of Sym(tag); the identity is
/// never included.
std::vector<Permutation> generator_set(GeneratorFlag flag,
                                       const std::string &tag, int size);

/// One permutation per unnamed type; tags absent from comps act as the
/// identity. comps holds only non-identity components, in declaration order.
struct DirectProductElem {
  std::vector<Permutation> comps;

  const Permutation *component(const std::string &tag) const;
  bool isIdentity() const { return comps.empty(); }
  DirectProductElem inverse() const;
  std::string describe() const;
};

enum class DpMode { Independently, Altogether };

struct TagGens {
  std::string tag;
  int size;
  std::vector<Permutation> gens;
};

/// The symmetry-breaking element streams. Independently embeds each
/// generator alone; Altogether walks the product of (gens + identity) per
/// tag, last tag fastest, skipping the all-identity element.
std::vector<DirectProductElem> dp_elements(DpMode mode,
                                           const std::vector<TagGens> &tags);

} // namespace symlex

#endif
