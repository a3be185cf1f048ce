#include "gqw/level_map.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gqw/error.hpp"

namespace gqw {

std::uint64_t evaluate(const Rule& r, Level i) {
  if (auto* c = std::get_if<ConstantRule>(&r)) return c->value;
  if (auto* a = std::get_if<AbsRule>(&r)) {
    Level d = i - a->center;
    return static_cast<std::uint64_t>(d < 0 ? -d : d) + a->offset;
  }
  return 0;
}

std::string to_string(const Rule& r) {
  if (auto* c = std::get_if<ConstantRule>(&r)) return "const(" + std::to_string(c->value) + ")";
  if (auto* a = std::get_if<AbsRule>(&r))
    return "abs(" + std::to_string(a->center) + "," + std::to_string(a->offset) + ")";
  return "zero";
}

namespace {

template <typename T>
T parse_number(std::string_view s, const std::string& whole) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw PreconditionError("bad number in rule " + whole);
  return value;
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Rule parse_rule(const std::string& text) {
  std::string s = strip(text);
  if (s == "zero") return ZeroRule{};
  if (s == "abs") return AbsRule{};
  auto args = [&](std::string_view head) -> std::string_view {
    if (s.size() < head.size() + 2 || s.compare(0, head.size(), head) != 0 || s[head.size()] != '(' ||
        s.back() != ')')
      return {};
    return std::string_view(s).substr(head.size() + 1, s.size() - head.size() - 2);
  };
  if (auto a = args("const"); !a.empty()) return ConstantRule{parse_number<std::uint64_t>(a, text)};
  if (auto a = args("abs"); !a.empty()) {
    auto comma = a.find(',');
    if (comma == std::string_view::npos) throw PreconditionError("abs rule needs center and offset: " + text);
    return AbsRule{parse_number<Level>(a.substr(0, comma), text),
                   parse_number<std::uint64_t>(a.substr(comma + 1), text)};
  }
  throw PreconditionError("unknown rule " + text);
}

LevelMap LevelMap::make(Rule rule, std::map<Level, std::uint64_t> table, std::optional<Level> vanish_from) {
  if (auto* c = std::get_if<ConstantRule>(&rule); c && c->value == 0) rule = ZeroRule{};

  LevelMap raw;
  raw.rule_ = rule;
  raw.table_ = std::move(table);
  raw.vanish_from_ = vanish_from;

  LevelMap out;
  if (std::holds_alternative<ZeroRule>(rule)) {
    out.rule_ = ZeroRule{};
    for (const auto& [i, v] : raw.table_)
      if (raw(i) != 0) out.table_.emplace(i, raw(i));
    return out;
  }
  if (!vanish_from) {
    out.rule_ = rule;
    for (const auto& [i, v] : raw.table_)
      if (v != evaluate(rule, i)) out.table_.emplace(i, v);
    return out;
  }

  // Nonzero rule cut off at vanish_from: find the least threshold, then pick
  // the rule representative determined by the far-negative values.
  Level theta = *vanish_from;
  while (raw(theta - 1) == 0) --theta;
  Rule canon = rule;
  Level low = theta;
  if (auto* a = std::get_if<AbsRule>(&rule)) {
    canon = AbsRule{a->center + static_cast<Level>(a->offset), 0};
    low = std::min({low, a->center, std::get<AbsRule>(canon).center});
  }
  if (!raw.table_.empty()) low = std::min(low, raw.table_.begin()->first);
  out.rule_ = canon;
  out.vanish_from_ = theta;
  for (Level i = low - 1; i < theta; ++i)
    if (raw(i) != evaluate(canon, i)) out.table_.emplace(i, raw(i));
  return out;
}

std::uint64_t LevelMap::operator()(Level i) const {
  if (vanish_from_ && i >= *vanish_from_) return 0;
  if (auto it = table_.find(i); it != table_.end()) return it->second;
  return evaluate(rule_, i);
}

bool LevelMap::is_zero() const { return std::holds_alternative<ZeroRule>(rule_) && table_.empty(); }

bool LevelMap::eventually_trivial() const {
  return std::holds_alternative<ZeroRule>(rule_) || vanish_from_.has_value();
}

Level LevelMap::threshold() const {
  if (is_zero()) throw PreconditionError("zero map has no least threshold");
  if (!eventually_trivial()) throw PreconditionError("map is not eventually trivial");
  if (vanish_from_) return *vanish_from_;
  return table_.rbegin()->first + 1;
}

LevelMap LevelMap::shifted(Level k) const {
  LevelMap out;
  out.rule_ = rule_;
  if (auto* a = std::get_if<AbsRule>(&out.rule_)) a->center -= k;
  for (const auto& [i, v] : table_) out.table_.emplace(i - k, v);
  if (vanish_from_) out.vanish_from_ = *vanish_from_ - k;
  return out;
}

}  // namespace gqw
