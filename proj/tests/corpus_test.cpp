#include "zipfkit/corpus.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "zipfkit/errors.hpp"
#include "zipfkit/rankfreq.hpp"

using namespace zipfkit;
using corpus::CorpusConfig;
using corpus::IllegiblePolicy;
using corpus::Token;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

}  // namespace

TEST_CASE("tokenize splits on separator and whitespace") {
  CorpusConfig cfg;
  CHECK(surfaces(corpus::tokenize("wosi : soreyi : terike", cfg)) ==
        std::vector<std::string>{"wosi", "soreyi", "terike"});
  CHECK(corpus::tokenize("", cfg).empty());
  CHECK(surfaces(corpus::tokenize("a::b", cfg)) == std::vector<std::string>{"a", "b"});
  CHECK(surfaces(corpus::tokenize("qor:kdi\tmno\n ns ", cfg)) ==
        std::vector<std::string>{"qor", "kdi", "mno", "ns"});
}

TEST_CASE("tokenize skips comment lines and flags illegible tokens") {
  CorpusConfig cfg;
  const auto tokens = corpus::tokenize("# apparatus note\nqor : ab?c\n  # indented comment\nkdi", cfg);
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0] == Token{"qor", false});
  CHECK(tokens[1] == Token{"ab?c", true});
  CHECK(tokens[2] == Token{"kdi", false});
}

TEST_CASE("tokenize honors a custom separator") {
  CorpusConfig cfg;
  cfg.separator = "::";
  CHECK(surfaces(corpus::tokenize("a::b:c", cfg)) == std::vector<std::string>{"a", "b:c"});
  cfg.separator = "";
  CHECK_THROWS_AS(corpus::tokenize("a", cfg), ConfigError);
}

TEST_CASE("tokenize round-trips through the joined surface forms") {
  CorpusConfig cfg;
  std::mt19937_64 rng(11);
  const std::string letters = "abqrstw?";
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::string> words;
    const std::size_t count = 1 + rng() % 8;
    for (std::size_t w = 0; w < count; ++w) {
      std::string word;
      const std::size_t len = 1 + rng() % 6;
      for (std::size_t i = 0; i < len; ++i) word.push_back(letters[rng() % letters.size()]);
      words.push_back(word);
    }
    std::string joined;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (w > 0) joined += (rng() % 2 == 0) ? " : " : ":";
      joined += words[w];
    }
    const auto once = corpus::tokenize(joined, cfg);
    CHECK(surfaces(once) == words);
    std::string rejoined;
    for (const Token& t : once) {
      if (!rejoined.empty()) rejoined += cfg.separator;
      rejoined += t.surface;
    }
    CHECK(corpus::tokenize(rejoined, cfg) == once);
  }
}

TEST_CASE("normalize rewrites variants to canonical forms") {
  const corpus::NormalizationTable table(std::map<std::string, std::string>{{"qore", "qor"}});
  CHECK(surfaces(corpus::normalize({{"qore", false}}, table)) ==
        std::vector<std::string>{"qor"});
  CHECK(surfaces(corpus::normalize({{"qor", false}}, table)) ==
        std::vector<std::string>{"qor"});
  // Illegible tokens are left alone even when their surface is a key.
  CHECK(surfaces(corpus::normalize({{"ab?c", true}}, table)) ==
        std::vector<std::string>{"ab?c"});
  const corpus::NormalizationTable marked(std::map<std::string, std::string>{{"ab?c", "abc"}});
  CHECK(surfaces(corpus::normalize({{"ab?c", true}}, marked)) ==
        std::vector<std::string>{"ab?c"});
}

TEST_CASE("normalize is idempotent and preserves token count") {
  const corpus::NormalizationTable table(std::map<std::string, std::string>{{"qore", "qor"}, {"kdis", "kdi"}});
  const std::vector<Token> tokens = {{"qore", false}, {"kdis", false}, {"mno", false}};
  const auto once = corpus::normalize(tokens, table);
  CHECK(once.size() == tokens.size());
  CHECK(corpus::normalize(once, table) == once);
}

TEST_CASE("normalization table rejects chains and empty entries") {
  using Entries = std::map<std::string, std::string>;
  CHECK_THROWS_AS(corpus::NormalizationTable(Entries{{"a", "b"}, {"b", "c"}}),
                  ValidationError);
  CHECK_THROWS_AS(corpus::NormalizationTable(Entries{{"a", ""}}), ValidationError);
  CHECK_THROWS_AS(corpus::NormalizationTable(Entries{{"a", "a"}}), ValidationError);
}

TEST_CASE("illegible policy rewrites damaged words") {
  CorpusConfig cfg;
  const std::vector<Token> tokens = {{"ab?", true}, {"cd?", true}};
  SUBCASE("distinct gives each its own singleton type") {
    const auto out = corpus::apply_illegible_policy(tokens, cfg);
    CHECK(surfaces(out) ==
          std::vector<std::string>{"⟨illegible-1⟩", "⟨illegible-2⟩"});
    const auto counts = rankfreq::count_types(out);
    for (const auto& [surface, count] : counts.counts) CHECK(count == 1);
  }
  SUBCASE("merged collapses them into one type") {
    cfg.illegible_policy = IllegiblePolicy::merged;
    const auto out = corpus::apply_illegible_policy(tokens, cfg);
    CHECK(surfaces(out) ==
          std::vector<std::string>{"⟨illegible⟩", "⟨illegible⟩"});
  }
  SUBCASE("legible tokens pass through under either policy") {
    const std::vector<Token> clean = {{"abr", false}};
    CHECK(corpus::apply_illegible_policy(clean, cfg) == clean);
    cfg.illegible_policy = IllegiblePolicy::merged;
    CHECK(corpus::apply_illegible_policy(clean, cfg) == clean);
  }
  CHECK(corpus::apply_illegible_policy(tokens, cfg).size() == tokens.size());
}

TEST_CASE("load_text reads a corpus file") {
  testutil::TempDir tmp("corpus");
  CorpusConfig cfg;
  SUBCASE("tokens and id from the file") {
    const auto path = tmp.path / "REM1003.txt";
    testutil::write_file(path, "qor : kdi\n");
    const auto text = corpus::load_text(path, cfg);
    CHECK(text.id == "REM1003");
    CHECK(surfaces(text.tokens) == std::vector<std::string>{"qor", "kdi"});
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(corpus::load_text(tmp.path / "absent.txt", cfg), IoError);
  }
  SUBCASE("empty file") {
    const auto path = tmp.path / "empty.txt";
    testutil::write_file(path, "");
    CHECK(corpus::load_text(path, cfg).tokens.empty());
  }
  SUBCASE("binary content") {
    const auto path = tmp.path / "junk.txt";
    testutil::write_file(path, std::string("ab\0cd", 5));
    CHECK_THROWS_AS(corpus::load_text(path, cfg), FormatError);
  }
}

TEST_CASE("load_normalization_table parses tab-separated entries") {
  testutil::TempDir tmp("norm");
  const auto path = tmp.path / "norm.tsv";
  testutil::write_file(path, "# variants\nqore\tqor\nkdis\tkdi\n");
  const auto table = corpus::load_normalization_table(path);
  CHECK(table.entries().size() == 2);
  CHECK(table.entries().at("qore") == "qor");

  testutil::write_file(path, "no-tab-here\n");
  CHECK_THROWS_AS(corpus::load_normalization_table(path), FormatError);
  testutil::write_file(path, "a\tb\na\tc\n");
  CHECK_THROWS_AS(corpus::load_normalization_table(path), ValidationError);
}
