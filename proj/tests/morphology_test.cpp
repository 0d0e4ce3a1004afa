#include "zipfkit/morphology.hpp"

#include <numeric>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "zipfkit/errors.hpp"
#include "zipfkit/rankfreq.hpp"

using namespace zipfkit;
using corpus::Token;
using morphology::RuleEntry;
using morphology::RuleSet;

namespace {

std::vector<std::string> segment(const std::string& surface, const RuleSet& rules) {
  return morphology::segment_token(Token{surface, false}, rules);
}

}  // namespace

TEST_CASE("compile_rules validates and orders the table") {
  const auto single = morphology::compile_rules({{"lowi", {"lo", "wi"}}});
  CHECK(single.size() == 1);

  CHECK_THROWS_AS(morphology::compile_rules({{"xy", {"a", "b"}}}), ValidationError);
  CHECK_THROWS_AS(morphology::compile_rules({{"lo", {"lo"}}, {"lo", {"l", "o"}}}),
                  ValidationError);
  CHECK_THROWS_AS(morphology::compile_rules({{"", {}}}), ValidationError);
  CHECK_THROWS_AS(morphology::compile_rules({{"lo", {"lo", ""}}}), ValidationError);
  CHECK(morphology::compile_rules({}).empty());

  const auto rules = morphology::default_rule_set();
  REQUIRE(rules.size() == 13);
  for (std::size_t i = 1; i < rules.rules.size(); ++i)
    CHECK(rules.rules[i - 1].pattern.size() >= rules.rules[i].pattern.size());
  CHECK(rules.rules.front().pattern.size() == 6);
  CHECK(rules.rules.back().pattern.size() == 2);
}

TEST_CASE("segment_token strips the longest matching suffix once") {
  const auto rules = morphology::default_rule_set();
  CHECK(segment("telowi", rules) == std::vector<std::string>{"te", "lo", "wi"});
  CHECK(segment("qesli", rules) == std::vector<std::string>{"qes", "li"});
  CHECK(segment("abr", rules) == std::vector<std::string>{"abr"});
  CHECK(segment("bedewitelowi", rules) ==
        std::vector<std::string>{"bedewi", "te", "lo", "wi"});
  // "telowi" (whole-token) outranks the embedded "lowi"/"li" suffixes.
  CHECK(segment("atelowi", rules) == std::vector<std::string>{"a", "te", "lo", "wi"});
  CHECK(segment("slowi", rules) == std::vector<std::string>{"s", "lo", "wi"});
  CHECK(segment("teli", rules) == std::vector<std::string>{"te", "li"});
  // Whole-token match emits just the expansion.
  CHECK(segment("lowi", rules) == std::vector<std::string>{"lo", "wi"});
  CHECK(segment("qo", rules) == std::vector<std::string>{"qo"});
  // No recursion into the stem: "ato" of "atomhe" keeps its trailing "to".
  CHECK(segment("atomhe", rules) == std::vector<std::string>{"ato", "mhe"});
}

TEST_CASE("segment_token leaves illegible tokens alone") {
  const auto rules = morphology::default_rule_set();
  CHECK(morphology::segment_token(Token{"ab?li", true}, rules) ==
        std::vector<std::string>{"ab?li"});
}

TEST_CASE("segment_text concatenates per-token segmentations in order") {
  const auto rules = morphology::default_rule_set();
  const std::vector<Token> in = {{"qesli", false}, {"qes", false}};
  const auto out = morphology::segment_text(in, rules);
  REQUIRE(out.size() == 3);
  CHECK(out[0].surface == "qes");
  CHECK(out[1].surface == "li");
  CHECK(out[2].surface == "qes");
  CHECK(morphology::segment_text({}, rules).empty());
  CHECK(morphology::segment_text(in, rules).size() >= in.size());
}

TEST_CASE("segmentation with the empty rule set is the identity") {
  const RuleSet empty;
  const std::vector<Token> in = {{"telowi", false}, {"qesli", false}};
  CHECK(morphology::segment_text(in, empty) == in);
}

TEST_CASE("segmentation grows N and can shrink V") {
  const auto rules = morphology::default_rule_set();
  const std::vector<Token> in = {
      {"qes", false}, {"qesli", false}, {"qeste", false}, {"li", false}, {"te", false}};
  const auto out = morphology::segment_text(in, rules);
  CHECK(out.size() == 7);  // N grows
  const auto before = rankfreq::count_types(in);
  const auto after = rankfreq::count_types(out);
  CHECK(before.counts.size() == 5);
  CHECK(after.counts.size() == 3);  // V shrinks: qes, li, te
  CHECK(after.counts.at("qes") == 3);
  CHECK(after.counts.at("li") == 2);
  CHECK(after.counts.at("te") == 2);
}

TEST_CASE("segmentation output concatenates back to the surface form") {
  const auto rules = morphology::default_rule_set();
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 1000; ++iter) {
    std::string word;
    const std::size_t len = 1 + rng() % 12;
    for (std::size_t i = 0; i < len; ++i)
      word.push_back(static_cast<char>('a' + rng() % 26));
    const auto parts = segment(word, rules);
    const std::string joined = std::accumulate(parts.begin(), parts.end(), std::string{});
    CHECK(joined == word);
  }
}

TEST_CASE("load_rules reads the shipped table") {
  const auto from_file = morphology::load_rules(testutil::data_dir() / "rules/default.rules");
  const auto embedded = morphology::default_rule_set();
  REQUIRE(from_file.size() == embedded.size());
  for (std::size_t i = 0; i < embedded.size(); ++i) {
    CHECK(from_file.rules[i].pattern == embedded.rules[i].pattern);
    CHECK(from_file.rules[i].expansion == embedded.rules[i].expansion);
  }
}

TEST_CASE("load_rules reports malformed files") {
  testutil::TempDir tmp("rules");
  const auto path = tmp.path / "bad.rules";
  testutil::write_file(path, "lowi lo wi\n");  // no tab
  CHECK_THROWS_AS(morphology::load_rules(path), FormatError);
  testutil::write_file(path, "xy\ta b\n");  // concatenation mismatch
  CHECK_THROWS_AS(morphology::load_rules(path), ValidationError);
  CHECK_THROWS_AS(morphology::load_rules(tmp.path / "absent.rules"), IoError);
}
