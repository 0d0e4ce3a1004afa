#include "zipfkit/morphology.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "zipfkit/errors.hpp"

namespace zipfkit::morphology {

RuleSet compile_rules(const std::vector<RuleEntry>& entries) {
  std::vector<MorphemeRule> rules;
  rules.reserve(entries.size());
  std::set<std::string> seen;
  for (const auto& [pattern, expansion] : entries) {
    if (pattern.empty()) throw ValidationError("rule pattern must be nonempty");
    if (expansion.empty())
      throw ValidationError("rule \"" + pattern + "\": expansion must be nonempty");
    std::string joined;
    for (const std::string& part : expansion) {
      if (part.empty())
        throw ValidationError("rule \"" + pattern + "\": empty expansion segment");
      joined += part;
    }
    if (joined != pattern)
      throw ValidationError("rule \"" + pattern + "\": expansion concatenates to \"" + joined +
                            "\"");
    if (!seen.insert(pattern).second)
      throw ValidationError("duplicate rule pattern \"" + pattern + "\"");
    rules.push_back(MorphemeRule{pattern, expansion});
  }
  std::sort(rules.begin(), rules.end(), [](const MorphemeRule& a, const MorphemeRule& b) {
    if (a.pattern.size() != b.pattern.size()) return a.pattern.size() > b.pattern.size();
    return a.pattern < b.pattern;
  });
  return RuleSet{std::move(rules)};
}

const std::vector<RuleEntry>& default_rule_entries() {
  static const std::vector<RuleEntry> entries = {
      {"lowi", {"lo", "wi"}},
      {"telowi", {"te", "lo", "wi"}},
      {"teli", {"te", "li"}},
      {"lebkwi", {"lebk", "wi"}},
      {"atomhe", {"ato", "mhe"}},
      {"atmhe", {"at", "mhe"}},
      {"qowi", {"qo", "wi"}},
      {"qo", {"qo"}},
      {"lo", {"lo"}},
      {"li", {"li"}},
      {"lw", {"lw"}},
      {"te", {"te"}},
      {"mhe", {"mhe"}},
  };
  return entries;
}

RuleSet default_rule_set() { return compile_rules(default_rule_entries()); }

std::vector<std::string> segment_token(const corpus::Token& token, const RuleSet& rules) {
  if (!token.illegible) {
    const std::string& s = token.surface;
    for (const MorphemeRule& rule : rules.rules) {
      const std::size_t plen = rule.pattern.size();
      if (plen > s.size()) continue;
      if (s.compare(s.size() - plen, plen, rule.pattern) != 0) continue;
      std::vector<std::string> parts;
      parts.reserve(rule.expansion.size() + 1);
      std::string stem = s.substr(0, s.size() - plen);
      if (!stem.empty()) parts.push_back(std::move(stem));
      parts.insert(parts.end(), rule.expansion.begin(), rule.expansion.end());
      return parts;
    }
  }
  return {token.surface};
}

std::vector<corpus::Token> segment_text(const std::vector<corpus::Token>& tokens,
                                        const RuleSet& rules) {
  std::vector<corpus::Token> out;
  out.reserve(tokens.size());
  for (const corpus::Token& t : tokens) {
    if (t.illegible) {
      out.push_back(t);
      continue;
    }
    auto parts = segment_token(t, rules);
    for (std::string& part : parts) out.push_back(corpus::Token{std::move(part), false});
  }
  return out;
}

RuleSet load_rules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open rule file: " + path.string());
  std::vector<RuleEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  auto is_blank = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    const std::size_t tab = line.find('\t');
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (tab == std::string::npos)
      throw FormatError(where + ": expected \"pattern<TAB>seg1 seg2 ...\"");
    const std::string pattern = line.substr(0, tab);
    std::istringstream rest(line.substr(tab + 1));
    std::vector<std::string> expansion;
    std::string part;
    while (rest >> part) expansion.push_back(part);
    if (pattern.empty() || expansion.empty())
      throw FormatError(where + ": empty pattern or expansion");
    entries.emplace_back(pattern, std::move(expansion));
  }
  return compile_rules(entries);
}

}  // namespace zipfkit::morphology
