#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zipfkit/errors.hpp"
#include "zipfkit/pipeline.hpp"

namespace {

using zipfkit::pipeline::ModelKind;
using zipfkit::pipeline::Variant;

std::vector<Variant> parse_variants(const std::vector<std::string>& names) {
  std::vector<Variant> out;
  for (const std::string& name : names) {
    if (name == "normal")
      out.push_back(Variant::normal);
    else if (name == "bm")
      out.push_back(Variant::bm);
    else
      throw zipfkit::ConfigError("unknown variant \"" + name + "\" (expected normal|bm)");
  }
  return out;
}

std::vector<ModelKind> parse_models(const std::vector<std::string>& names) {
  std::vector<ModelKind> out;
  for (const std::string& name : names) {
    if (name == "truncated" || name == "truncated_zeta")
      out.push_back(ModelKind::truncated_zeta);
    else if (name == "power" || name == "power_law")
      out.push_back(ModelKind::power_law);
    else
      throw zipfkit::ConfigError("unknown model \"" + name + "\" (expected truncated|power)");
  }
  return out;
}

zipfkit::fitting::FitMethod parse_method(const std::string& name) {
  if (name == "mle") return zipfkit::fitting::FitMethod::mle;
  if (name == "min-chisq" || name == "min_chisq") return zipfkit::fitting::FitMethod::min_chisq;
  throw zipfkit::ConfigError("unknown method \"" + name + "\" (expected mle|min-chisq)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-frequency and Zipf-law analysis for transliterated corpora"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "fit rank-frequency models to corpora");
  std::vector<std::string> inputs;
  std::string kind = "corpus";
  std::vector<std::string> variant_names = {"normal", "bm"};
  std::vector<std::string> model_names = {"power", "truncated"};
  std::string method_name = "mle";
  std::string rule_file, norm_file, separator = ":", illegible_marker = "?";
  std::string illegible_policy = "distinct";
  double pool_min = 1.0;
  std::string out_dir;
  int precision = 2;
  analyze->add_option("--input", inputs, "corpus files, or rank-table stems")
      ->required()
      ->take_all();
  analyze->add_option("--kind", kind, "input kind")
      ->check(CLI::IsMember({"corpus", "rank-table"}));
  analyze->add_option("--variants", variant_names, "variants to analyze (normal,bm)")
      ->delimiter(',');
  analyze->add_option("--model", model_names, "models to fit (truncated,power)")
      ->delimiter(',');
  analyze->add_option("--method", method_name, "estimator (mle|min-chisq)");
  analyze->add_option("--rules", rule_file, "bound-morpheme rule file");
  analyze->add_option("--norm", norm_file, "spelling normalization file");
  analyze->add_option("--separator", separator, "word separator string");
  analyze->add_option("--illegible-marker", illegible_marker,
                      "substring marking a partially illegible word");
  analyze->add_option("--illegible-policy", illegible_policy, "distinct|merged")
      ->check(CLI::IsMember({"distinct", "merged"}));
  analyze->add_option("--pool-min", pool_min, "minimum expected count per pooled class");
  analyze->add_option("--out", out_dir, "output directory")->required();
  analyze->add_option("--precision", precision, "decimals for fitted values in summary.tsv");

  // monkey
  auto* monkey = app.add_subcommand("monkey", "random-typing null model");
  zipfkit::nullmodel::MonkeyConfig mcfg;
  std::string compare_file, monkey_out;
  monkey->add_option("--alphabet", mcfg.alphabet_size, "alphabet size");
  monkey->add_option("--space-prob", mcfg.space_prob, "per-character space probability");
  monkey->add_option("--chars", mcfg.length, "characters to draw");
  monkey->add_option("--seed", mcfg.seed, "generator seed");
  monkey->add_option("--compare", compare_file, "rank-table file to compare against");
  monkey->add_option("--out", monkey_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      zipfkit::pipeline::RunConfig cfg;
      for (const std::string& in : inputs) cfg.inputs.emplace_back(in);
      cfg.input_kind = (kind == "corpus") ? zipfkit::pipeline::InputKind::corpus
                                          : zipfkit::pipeline::InputKind::rank_table;
      cfg.variants = parse_variants(variant_names);
      cfg.models = parse_models(model_names);
      cfg.method = parse_method(method_name);
      if (!rule_file.empty()) cfg.rule_file = rule_file;
      if (!norm_file.empty()) cfg.norm_file = norm_file;
      cfg.pooling.min_expected = pool_min;
      cfg.output_dir = out_dir;
      cfg.corpus_cfg.separator = separator;
      cfg.corpus_cfg.illegible_marker = illegible_marker;
      cfg.corpus_cfg.illegible_policy = (illegible_policy == "merged")
                                            ? zipfkit::corpus::IllegiblePolicy::merged
                                            : zipfkit::corpus::IllegiblePolicy::distinct;
      cfg.precision = precision;
      const auto report = zipfkit::pipeline::run_analyze(cfg);
      return report.all_ok() ? 0 : 1;
    }
    std::optional<std::filesystem::path> compare;
    if (!compare_file.empty()) compare = compare_file;
    zipfkit::pipeline::run_monkey(mcfg, compare, monkey_out);
    return 0;
  } catch (const zipfkit::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const zipfkit::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
