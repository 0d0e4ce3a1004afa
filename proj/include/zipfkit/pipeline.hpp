#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "zipfkit/corpus.hpp"
#include "zipfkit/fitting.hpp"
#include "zipfkit/morphology.hpp"
#include "zipfkit/nullmodel.hpp"

namespace zipfkit::pipeline {

enum class InputKind { corpus, rank_table };
enum class Variant { normal, bm };
enum class ModelKind { power_law, truncated_zeta };

std::string variant_name(Variant v);
std::string model_name(ModelKind m);
std::string method_name(fitting::FitMethod m);

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  InputKind input_kind = InputKind::corpus;
  std::vector<Variant> variants = {Variant::normal, Variant::bm};
  std::vector<ModelKind> models = {ModelKind::power_law, ModelKind::truncated_zeta};
  fitting::FitMethod method = fitting::FitMethod::mle;
  std::optional<std::filesystem::path> rule_file;  // default bound-morpheme table if unset
  std::optional<std::filesystem::path> norm_file;
  fitting::PoolingPolicy pooling;
  std::filesystem::path output_dir;
  corpus::CorpusConfig corpus_cfg;
  int precision = 2;  // decimals for a, C, X2, p in summary.tsv
};

struct SummaryRow {
  std::string text_id;
  Variant variant = Variant::normal;
  std::uint64_t n_tokens = 0;  // N
  std::uint64_t n_types = 0;   // V
  ModelKind model = ModelKind::truncated_zeta;
  fitting::FitMethod method = fitting::FitMethod::mle;
  double a = 0.0;
  double c = 0.0;
  double x2 = 0.0;
  std::optional<int> df;
  std::optional<double> p;
};

struct AnalyzeReport {
  std::vector<SummaryRow> rows;
  std::vector<std::string> errors;  // per-input failures, also logged to stderr

  bool all_ok() const { return errors.empty(); }
};

/// Runs the full pipeline for every input x variant x model, writes
/// summary.tsv and per-run plot files into cfg.output_dir, and returns the
/// rows plus any per-input errors. Output ordering is deterministic: inputs
/// in the given order, normal before bm, power_law before truncated_zeta.
///
/// Corpus inputs flow tokenize -> normalize -> illegible policy ->
/// (bm only) segmentation -> count -> rank. Rank-table inputs are stem
/// paths: "<stem>_normal.tsv" / "<stem>_bm.tsv" per variant; a literal
/// ".tsv" path is accepted when exactly one variant is requested.
///
/// Throws ConfigError for unusable configuration and ValidationError for a
/// bad rule file; per-input read/ers errors are recorded, not thrown.
AnalyzeReport run_analyze(const RunConfig& cfg);

/// TSV "rank<TAB>observed<TAB>expected", one row per rank, expected taken
/// from the fitted model.
void emit_plot_data(const rankfreq::RankFrequencyTable& table, const fitting::FitResult& fit,
                    const std::filesystem::path& path);

/// Generates a monkey text and writes monkey_rankfreq.tsv,
/// monkey_spectrum.tsv and monkey_diagnostics.tsv into output_dir; with
/// compare_to set, also comparison.tsv holding spectrum diagnostics for the
/// real table and the monkey text side by side.
void run_monkey(const nullmodel::MonkeyConfig& cfg,
                const std::optional<std::filesystem::path>& compare_to,
                const std::filesystem::path& output_dir);

}  // namespace zipfkit::pipeline
