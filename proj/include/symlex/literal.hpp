#ifndef SYMLEX_LITERAL_HPP
#define SYMLEX_LITERAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symlex/value.hpp"

namespace symlex {

// Names a literal may refer to. Parsing into an empty, unfrozen context
// infers unnamed-type sizes from the literal itself (largest atom index,
// matrix extent); a context built from a model is frozen and rejects
// unknown names and out-of-range atoms instead.
struct TypeContext {
  std::map<std::string, int> tagSizes;
  std::map<std::string, std::vector<std::string>> enums;
  bool frozen = false;

  void noteTag(const std::string &tag, int minSize);
  // (enumName, 1-based position) for an enum label
  std::optional<std::pair<std::string, int>> lookupLabel(const std::string &label) const;
};

Value parse_value(const std::string &text, TypeContext &ctx);

std::string print_value(const Value &v);

} // namespace symlex

#endif
