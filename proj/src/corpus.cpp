#include "zipfkit/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "zipfkit/errors.hpp"

namespace zipfkit::corpus {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_comment_line(std::string_view line) {
  const std::string_view t = trim(line);
  return !t.empty() && t.front() == '#';
}

void split_line(std::string_view line, const CorpusConfig& cfg, std::vector<Token>& out) {
  const std::string& sep = cfg.separator;
  std::string fragment;
  auto flush = [&] {
    if (fragment.empty()) return;
    const bool illegible = !cfg.illegible_marker.empty() &&
                           fragment.find(cfg.illegible_marker) != std::string::npos;
    out.push_back(Token{fragment, illegible});
    fragment.clear();
  };
  std::size_t i = 0;
  while (i < line.size()) {
    if (line.compare(i, sep.size(), sep) == 0) {
      flush();
      i += sep.size();
    } else if (is_space(line[i])) {
      flush();
      ++i;
    } else {
      fragment.push_back(line[i]);
      ++i;
    }
  }
  flush();
}

}  // namespace

NormalizationTable::NormalizationTable(std::map<std::string, std::string> entries)
    : entries_(std::move(entries)) {
  for (const auto& [variant, canonical] : entries_) {
    if (variant.empty() || canonical.empty())
      throw ValidationError("normalization entries must be nonempty");
    if (entries_.count(canonical) > 0)
      throw ValidationError("normalization chain: canonical form \"" + canonical +
                            "\" is also a variant key");
  }
}

std::vector<Token> tokenize(std::string_view raw, const CorpusConfig& cfg) {
  if (cfg.separator.empty()) throw ConfigError("tokenize: separator must be nonempty");
  std::vector<Token> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t eol = raw.find('\n', pos);
    const std::string_view line =
        (eol == std::string_view::npos) ? raw.substr(pos) : raw.substr(pos, eol - pos);
    if (!is_comment_line(line)) split_line(line, cfg, out);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

std::vector<Token> normalize(std::vector<Token> tokens, const NormalizationTable& table) {
  for (Token& t : tokens) {
    if (t.illegible) continue;
    const auto it = table.entries().find(t.surface);
    if (it != table.entries().end()) t.surface = it->second;
  }
  return tokens;
}

std::vector<Token> apply_illegible_policy(std::vector<Token> tokens, const CorpusConfig& cfg) {
  std::size_t next_id = 0;
  for (Token& t : tokens) {
    if (!t.illegible) continue;
    if (cfg.illegible_policy == IllegiblePolicy::distinct)
      t.surface = "⟨illegible-" + std::to_string(++next_id) + "⟩";
    else
      t.surface = "⟨illegible⟩";
  }
  return tokens;
}

Text load_text(const std::filesystem::path& path, const CorpusConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string raw = std::move(buf).str();
  if (raw.find('\0') != std::string::npos)
    throw FormatError(path.string() + ": binary content is not a transliteration");
  Text text;
  text.id = path.stem().string();
  text.tokens = tokenize(raw, cfg);
  text.raw = std::move(raw);
  return text;
}

NormalizationTable load_normalization_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open normalization file: " + path.string());
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (tab == std::string::npos)
      throw FormatError(where + ": expected \"variant<TAB>canonical\"");
    const std::string variant{trim(std::string_view(line).substr(0, tab))};
    const std::string canonical{trim(std::string_view(line).substr(tab + 1))};
    if (variant.empty() || canonical.empty())
      throw FormatError(where + ": empty variant or canonical form");
    if (!entries.emplace(variant, canonical).second)
      throw ValidationError(where + ": duplicate variant \"" + variant + "\"");
  }
  return NormalizationTable(std::move(entries));
}

}  // namespace zipfkit::corpus
