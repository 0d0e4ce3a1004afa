#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zipfkit::corpus {

/// How partially illegible words enter the counts: `distinct` turns each one
/// into its own singleton type, `merged` collapses them all into one type.
enum class IllegiblePolicy { distinct, merged };

struct Token {
  std::string surface;
  bool illegible = false;

  bool operator==(const Token&) const = default;
};

/// One transliterated source text.
struct Text {
  std::string id;
  std::string raw;
  std::vector<Token> tokens;
};

/// Spelling standardization map: variant surface form -> canonical form.
/// No canonical form may itself appear as a variant key, so one pass reaches
/// a fixpoint.
class NormalizationTable {
 public:
  NormalizationTable() = default;
  explicit NormalizationTable(std::map<std::string, std::string> entries);

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

struct CorpusConfig {
  std::string separator = ":";
  std::string illegible_marker = "?";  // substring test; empty disables the check
  IllegiblePolicy illegible_policy = IllegiblePolicy::distinct;
};

/// Splits raw text into tokens on every separator occurrence and on runs of
/// whitespace. Empty fragments are dropped; lines whose first non-blank
/// character is '#' are skipped entirely.
std::vector<Token> tokenize(std::string_view raw, const CorpusConfig& cfg);

/// Rewrites each surface form found in the table to its canonical form.
/// Illegible tokens are never rewritten. Order and length are preserved.
std::vector<Token> normalize(std::vector<Token> tokens, const NormalizationTable& table);

/// Rewrites illegible surfaces to synthetic types per cfg.illegible_policy:
/// "⟨illegible-1⟩", "⟨illegible-2⟩", ... under `distinct`, the single type
/// "⟨illegible⟩" under `merged`.
std::vector<Token> apply_illegible_policy(std::vector<Token> tokens, const CorpusConfig& cfg);

/// Reads one corpus file; the text id is the file name stem.
Text load_text(const std::filesystem::path& path, const CorpusConfig& cfg);

/// Reads a normalization file: one entry per line, "variant<TAB>canonical".
NormalizationTable load_normalization_table(const std::filesystem::path& path);

}  // namespace zipfkit::corpus
