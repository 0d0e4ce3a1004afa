#include "zipfkit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>

#include "zipfkit/errors.hpp"

namespace zipfkit::pipeline {

namespace {

std::string format_fixed(double v, int prec) {
  if (v == 0.0) v = std::fabs(v);  // avoid "-0.00"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

std::string sanitize_id(const std::string& id) {
  std::string out = id;
  for (char& c : out) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
    if (!keep) c = '_';
  }
  return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

template <typename T>
std::vector<T> canonical_order(const std::vector<T>& values, std::initializer_list<T> order) {
  std::vector<T> out;
  for (const T& v : order)
    if (std::find(values.begin(), values.end(), v) != values.end()) out.push_back(v);
  return out;
}

std::filesystem::path resolve_rank_table(const std::filesystem::path& input, Variant v) {
  if (input.extension() == ".tsv") return input;
  std::filesystem::path p = input;
  p += "_" + variant_name(v) + ".tsv";
  return p;
}

void write_diagnostics_row(std::ofstream& out, const std::string& label,
                           const nullmodel::SpectrumDiagnostics& d) {
  out << label << '\t' << format_fixed(d.slope, 6) << '\t' << format_fixed(d.intercept, 6)
      << '\t' << format_fixed(d.r2, 6) << '\t' << d.points_used << '\n';
}

}  // namespace

std::string variant_name(Variant v) { return v == Variant::normal ? "normal" : "bm"; }

std::string model_name(ModelKind m) {
  return m == ModelKind::power_law ? "power_law" : "truncated_zeta";
}

std::string method_name(fitting::FitMethod m) {
  return m == fitting::FitMethod::mle ? "mle" : "min_chisq";
}

AnalyzeReport run_analyze(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw ConfigError("at least one input is required");
  if (cfg.output_dir.empty()) throw ConfigError("an output directory is required");
  const std::vector<Variant> variants =
      canonical_order(cfg.variants, {Variant::normal, Variant::bm});
  const std::vector<ModelKind> models =
      canonical_order(cfg.models, {ModelKind::power_law, ModelKind::truncated_zeta});
  if (variants.empty()) throw ConfigError("at least one variant is required");
  if (models.empty()) throw ConfigError("at least one model is required");
  if (cfg.input_kind == InputKind::rank_table && variants.size() > 1) {
    for (const auto& input : cfg.inputs)
      if (input.extension() == ".tsv")
        throw ConfigError(input.string() +
                          ": a literal rank-table file fixes its variant; pass a stem "
                          "(resolved as <stem>_normal.tsv / <stem>_bm.tsv) or a single "
                          "--variants entry");
  }

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + cfg.output_dir.string() +
                            ": " + ec.message());

  // A bad rule or normalization file aborts the run before any input work.
  morphology::RuleSet rules;
  const bool wants_bm =
      std::find(variants.begin(), variants.end(), Variant::bm) != variants.end();
  if (wants_bm)
    rules = cfg.rule_file ? morphology::load_rules(*cfg.rule_file)
                          : morphology::default_rule_set();
  corpus::NormalizationTable norm;
  if (cfg.norm_file) norm = corpus::load_normalization_table(*cfg.norm_file);

  AnalyzeReport report;
  auto record_error = [&](const std::string& context, const std::exception& e) {
    const std::string msg = context + ": " + e.what();
    std::cerr << "error: " << msg << '\n';
    report.errors.push_back(msg);
  };

  struct PlotJob {
    rankfreq::RankFrequencyTable table;
    fitting::FitResult fit;
    std::filesystem::path path;
  };
  std::vector<PlotJob> plots;

  for (const auto& input : cfg.inputs) {
    std::optional<std::vector<corpus::Token>> base_tokens;
    std::string text_id;
    if (cfg.input_kind == InputKind::corpus) {
      try {
        corpus::Text text = corpus::load_text(input, cfg.corpus_cfg);
        text_id = text.id;
        auto tokens = corpus::normalize(std::move(text.tokens), norm);
        base_tokens = corpus::apply_illegible_policy(std::move(tokens), cfg.corpus_cfg);
      } catch (const std::exception& e) {
        record_error(input.string(), e);
        continue;
      }
    }

    for (const Variant variant : variants) {
      rankfreq::RankFrequencyTable table;
      try {
        if (cfg.input_kind == InputKind::corpus) {
          const auto tokens = (variant == Variant::bm)
                                  ? morphology::segment_text(*base_tokens, rules)
                                  : *base_tokens;
          table = rankfreq::build_rank_frequency(rankfreq::count_types(tokens));
        } else {
          const auto path = resolve_rank_table(input, variant);
          text_id = input.stem().string();
          table = rankfreq::parse_rank_table(path);
        }
      } catch (const std::exception& e) {
        record_error(input.string() + " [" + variant_name(variant) + "]", e);
        continue;
      }

      for (const ModelKind model : models) {
        try {
          const fitting::FitResult fit =
              (model == ModelKind::truncated_zeta)
                  ? fitting::fit_truncated_zeta(table, cfg.method, {}, cfg.pooling)
                  : fitting::fit_power_law(table, cfg.method, cfg.pooling);
          SummaryRow row;
          row.text_id = text_id;
          row.variant = variant;
          row.n_tokens = table.total_tokens;
          row.n_types = table.type_count();
          row.model = model;
          row.method = fit.method;
          row.a = fit.a();
          row.c = fit.amplitude();
          row.x2 = fit.x2;
          row.df = fit.df;
          row.p = fit.p;
          report.rows.push_back(row);
          plots.push_back(PlotJob{
              table, fit,
              cfg.output_dir / (sanitize_id(text_id) + "_" + variant_name(variant) + "_" +
                                model_name(model) + ".tsv")});
        } catch (const std::exception& e) {
          record_error(input.string() + " [" + variant_name(variant) + ", " +
                           model_name(model) + "]",
                       e);
        }
      }
    }
  }

  // Single collector writes everything, preserving the deterministic order.
  for (const PlotJob& job : plots) emit_plot_data(job.table, job.fit, job.path);

  const auto summary_path = cfg.output_dir / "summary.tsv";
  std::ofstream out = open_output(summary_path);
  out << "text_id\tvariant\tN\tV\tmodel\tmethod\ta\tC\tX2\tdf\tp\n";
  for (const SummaryRow& row : report.rows) {
    out << row.text_id << '\t' << variant_name(row.variant) << '\t' << row.n_tokens << '\t'
        << row.n_types << '\t' << model_name(row.model) << '\t' << method_name(row.method)
        << '\t' << format_fixed(row.a, cfg.precision) << '\t'
        << format_fixed(row.c, cfg.precision) << '\t' << format_fixed(row.x2, cfg.precision)
        << '\t' << (row.df ? std::to_string(*row.df) : "NA") << '\t'
        << (row.p ? format_fixed(*row.p, cfg.precision) : "NA") << '\n';
  }
  finish_output(out, summary_path);
  return report;
}

void emit_plot_data(const rankfreq::RankFrequencyTable& table, const fitting::FitResult& fit,
                    const std::filesystem::path& path) {
  if (table.entries.empty()) throw DegenerateInputError("plot data needs a nonempty table");
  std::ofstream out = open_output(path);
  out << "rank\tobserved\texpected\n";
  const double total = static_cast<double>(table.total_tokens);
  for (const rankfreq::RankEntry& e : table.entries) {
    const double expected = fitting::expected_frequency(fit.model, e.rank, total);
    out << e.rank << '\t' << e.frequency << '\t' << format_fixed(expected, 6) << '\n';
  }
  finish_output(out, path);
}

void run_monkey(const nullmodel::MonkeyConfig& cfg,
                const std::optional<std::filesystem::path>& compare_to,
                const std::filesystem::path& output_dir) {
  const auto tokens = nullmodel::generate_monkey_text(cfg);
  const auto table = rankfreq::build_rank_frequency(rankfreq::count_types(tokens));
  const auto spectrum = rankfreq::frequency_spectrum(table);
  const auto rank_diag = nullmodel::loglog_regression(table);
  const auto spec_diag = nullmodel::loglog_regression(spectrum);

  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + output_dir.string() + ": " +
                            ec.message());

  {
    const auto path = output_dir / "monkey_rankfreq.tsv";
    std::ofstream out = open_output(path);
    out << "rank\tfrequency\n";
    for (const rankfreq::RankEntry& e : table.entries)
      out << e.rank << '\t' << e.frequency << '\n';
    finish_output(out, path);
  }
  {
    const auto path = output_dir / "monkey_spectrum.tsv";
    std::ofstream out = open_output(path);
    out << "frequency\ttypes\tp\n";
    for (const auto& [f, v] : spectrum.types_with_frequency)
      out << f << '\t' << v << '\t' << format_fixed(spectrum.probability.at(f), 6) << '\n';
    finish_output(out, path);
  }
  {
    const auto path = output_dir / "monkey_diagnostics.tsv";
    std::ofstream out = open_output(path);
    out << "series\tslope\tintercept\tr2\tpoints\n";
    write_diagnostics_row(out, "rankfreq", rank_diag);
    write_diagnostics_row(out, "spectrum", spec_diag);
    finish_output(out, path);
  }
  if (compare_to) {
    const auto real_table = rankfreq::parse_rank_table(*compare_to);
    const auto cmp =
        nullmodel::compare_spectra(rankfreq::frequency_spectrum(real_table), spectrum);
    const auto path = output_dir / "comparison.tsv";
    std::ofstream out = open_output(path);
    out << "side\tslope\tintercept\tr2\tpoints\n";
    write_diagnostics_row(out, "real", cmp.real_diag);
    write_diagnostics_row(out, "monkey", cmp.monkey_diag);
    finish_output(out, path);
  }
}

}  // namespace zipfkit::pipeline
