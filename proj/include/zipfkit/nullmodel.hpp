#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zipfkit/corpus.hpp"
#include "zipfkit/rankfreq.hpp"

namespace zipfkit::nullmodel {

/// Random-typing ("monkey") text: each character is a space with probability
/// space_prob, otherwise uniform over the first alphabet_size letters of a
/// fixed symbol pool. Words are the maximal nonspace runs.
struct MonkeyConfig {
  std::uint32_t alphabet_size = 26;
  double space_prob = 0.18;
  std::uint64_t length = 1'000'000;  // characters drawn
  std::uint64_t seed = 0;
};

/// Ordinary least squares on (ln x, ln y).
struct SpectrumDiagnostics {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int points_used = 0;
};

/// Side-by-side diagnostics of a real corpus spectrum and a monkey-text
/// spectrum. Purely descriptive; no verdict.
struct SpectrumComparison {
  SpectrumDiagnostics real_diag;
  SpectrumDiagnostics monkey_diag;
  rankfreq::FrequencySpectrum real_spectrum;
  rankfreq::FrequencySpectrum monkey_spectrum;
};

/// Deterministic given cfg.seed; empty runs (consecutive spaces) are
/// discarded.
std::vector<corpus::Token> generate_monkey_text(const MonkeyConfig& cfg);

/// Regression over all points with x > 0 and y > 0; needs two distinct
/// abscissae.
SpectrumDiagnostics loglog_regression(const std::vector<std::pair<double, double>>& points);

/// Zipf plot: x = rank, y = frequency, each type weighted by its frequency
/// (least squares over tokens).
SpectrumDiagnostics loglog_regression(const rankfreq::RankFrequencyTable& table);

/// Inverse Zipf plot: x = frequency, y = P(frequency).
SpectrumDiagnostics loglog_regression(const rankfreq::FrequencySpectrum& spectrum);

SpectrumComparison compare_spectra(const rankfreq::FrequencySpectrum& real,
                                   const rankfreq::FrequencySpectrum& monkey);

}  // namespace zipfkit::nullmodel
