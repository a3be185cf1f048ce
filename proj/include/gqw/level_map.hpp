#pragma once

// Finitely described maps Z -> N: a default rule, a finite table of
// exceptions and an optional level from which the map is zero.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

namespace gqw {

using Level = std::int64_t;

struct ZeroRule {
  friend bool operator==(const ZeroRule&, const ZeroRule&) = default;
};
struct ConstantRule {
  std::uint64_t value = 0;
  friend bool operator==(const ConstantRule&, const ConstantRule&) = default;
};
// i -> |i - center| + offset
struct AbsRule {
  Level center = 0;
  std::uint64_t offset = 0;
  friend bool operator==(const AbsRule&, const AbsRule&) = default;
};
using Rule = std::variant<ZeroRule, ConstantRule, AbsRule>;

std::uint64_t evaluate(const Rule& r, Level i);
// "zero", "const(c)", "abs(c,o)"
std::string to_string(const Rule& r);
// Also accepts "abs" for abs(0,0). Throws PreconditionError.
Rule parse_rule(const std::string& text);

/// Value at i: 0 if i >= vanish_from, else the table entry, else the rule.
/// Instances are kept in a canonical form, so == is equality of functions.
class LevelMap {
 public:
  LevelMap() = default;
  static LevelMap make(Rule rule, std::map<Level, std::uint64_t> table = {},
                       std::optional<Level> vanish_from = std::nullopt);
  static LevelMap finite(std::map<Level, std::uint64_t> table) { return make(ZeroRule{}, std::move(table)); }

  std::uint64_t operator()(Level i) const;

  const Rule& rule() const noexcept { return rule_; }
  const std::map<Level, std::uint64_t>& table() const noexcept { return table_; }
  const std::optional<Level>& vanish_from() const noexcept { return vanish_from_; }

  bool is_zero() const;
  bool eventually_trivial() const;
  // Least t with value(i) = 0 for all i >= t. Requires an eventually trivial,
  // nonzero map; throws PreconditionError otherwise.
  Level threshold() const;

  // i -> value(i + k)
  LevelMap shifted(Level k) const;

  friend bool operator==(const LevelMap&, const LevelMap&) = default;

 private:
  Rule rule_ = ZeroRule{};
  std::map<Level, std::uint64_t> table_;
  std::optional<Level> vanish_from_;
};

}  // namespace gqw
