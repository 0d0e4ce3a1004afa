#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "zipfkit/corpus.hpp"

namespace zipfkit::morphology {

/// A token-final substring and the bound-morpheme pieces it splits into.
/// The expansion concatenates back to the pattern exactly.
struct MorphemeRule {
  std::string pattern;
  std::vector<std::string> expansion;
};

/// Suffix-expansion rules, sorted by descending pattern length so the longest
/// matching suffix wins. Construct via compile_rules; treat as immutable.
struct RuleSet {
  std::vector<MorphemeRule> rules;

  bool empty() const { return rules.empty(); }
  std::size_t size() const { return rules.size(); }
};

using RuleEntry = std::pair<std::string, std::vector<std::string>>;

/// Validates the concatenation invariant and pattern uniqueness, then sorts
/// by descending pattern length (ties broken lexicographically).
RuleSet compile_rules(const std::vector<RuleEntry>& entries);

/// The stock bound-morpheme table for Meroitic transliterations
/// (data/rules/default.rules ships the same table in file form).
const std::vector<RuleEntry>& default_rule_entries();
RuleSet default_rule_set();

/// Splits off the longest rule pattern that is a suffix of the token, exactly
/// once, yielding (stem, expansion...); the stem is omitted when empty. With
/// no matching rule the token passes through whole. Illegible tokens are
/// never segmented.
std::vector<std::string> segment_token(const corpus::Token& token, const RuleSet& rules);

/// segment_token applied across a token sequence, order preserved.
std::vector<corpus::Token> segment_text(const std::vector<corpus::Token>& tokens,
                                        const RuleSet& rules);

/// Reads a rule file: one rule per line, "pattern<TAB>seg1 seg2 ...".
RuleSet load_rules(const std::filesystem::path& path);

}  // namespace zipfkit::morphology
