#include "zipfkit/nullmodel.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "zipfkit/errors.hpp"
#include "zipfkit/rng.hpp"

namespace zipfkit::nullmodel {

namespace {

constexpr std::string_view kSymbolPool =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

}  // namespace

std::vector<corpus::Token> generate_monkey_text(const MonkeyConfig& cfg) {
  if (!(cfg.space_prob > 0.0 && cfg.space_prob < 1.0))
    throw ConfigError("space probability must lie strictly between 0 and 1");
  if (cfg.alphabet_size < 1 || cfg.alphabet_size > kSymbolPool.size())
    throw ConfigError("alphabet size must be between 1 and " +
                      std::to_string(kSymbolPool.size()));
  if (cfg.length == 0) throw ConfigError("text length must be positive");

  UniformRng rng(cfg.seed);
  std::vector<corpus::Token> out;
  std::string word;
  for (std::uint64_t i = 0; i < cfg.length; ++i) {
    const double u = rng.next_double();
    if (u < cfg.space_prob) {
      if (!word.empty()) {
        out.push_back(corpus::Token{word, false});
        word.clear();
      }
    } else {
      // One draw per character: the nonspace mass remaps to a uniform index.
      const double t = (u - cfg.space_prob) / (1.0 - cfg.space_prob);
      const auto idx = std::min<std::size_t>(
          cfg.alphabet_size - 1, static_cast<std::size_t>(t * cfg.alphabet_size));
      word.push_back(kSymbolPool[idx]);
    }
  }
  if (!word.empty()) out.push_back(corpus::Token{std::move(word), false});
  return out;
}

namespace {

struct WeightedPoint {
  double log_x;
  double log_y;
  double weight;
};

SpectrumDiagnostics weighted_loglog(const std::vector<WeightedPoint>& logs) {
  double min_x = 0.0, max_x = 0.0;
  if (!logs.empty()) {
    const auto [lo, hi] = std::minmax_element(
        logs.begin(), logs.end(),
        [](const auto& a, const auto& b) { return a.log_x < b.log_x; });
    min_x = lo->log_x;
    max_x = hi->log_x;
  }
  if (logs.size() < 2 || !(max_x > min_x))
    throw DegenerateInputError("log-log regression needs at least two distinct points");

  double sw = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& p : logs) {
    sw += p.weight;
    sx += p.weight * p.log_x;
    sy += p.weight * p.log_y;
    sxx += p.weight * p.log_x * p.log_x;
    sxy += p.weight * p.log_x * p.log_y;
  }
  SpectrumDiagnostics d;
  d.slope = (sw * sxy - sx * sy) / (sw * sxx - sx * sx);
  d.intercept = (sy - d.slope * sx) / sw;
  const double mean_y = sy / sw;
  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& p : logs) {
    const double e = p.log_y - (d.slope * p.log_x + d.intercept);
    ss_res += p.weight * e * e;
    ss_tot += p.weight * (p.log_y - mean_y) * (p.log_y - mean_y);
  }
  d.r2 = (ss_tot > 0.0) ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
  d.points_used = static_cast<int>(logs.size());
  return d;
}

}  // namespace

SpectrumDiagnostics loglog_regression(const std::vector<std::pair<double, double>>& points) {
  std::vector<WeightedPoint> logs;
  logs.reserve(points.size());
  for (const auto& [x, y] : points)
    if (x > 0.0 && y > 0.0) logs.push_back({std::log(x), std::log(y), 1.0});
  return weighted_loglog(logs);
}

SpectrumDiagnostics loglog_regression(const rankfreq::RankFrequencyTable& table) {
  // Each type enters with its frequency as weight, i.e. least squares over
  // tokens. An unweighted per-type fit would be swamped by the singleton
  // plateau on staircase-shaped tables such as random-typing text.
  std::vector<WeightedPoint> logs;
  logs.reserve(table.entries.size());
  for (const rankfreq::RankEntry& e : table.entries)
    logs.push_back({std::log(static_cast<double>(e.rank)),
                    std::log(static_cast<double>(e.frequency)),
                    static_cast<double>(e.frequency)});
  return weighted_loglog(logs);
}

SpectrumDiagnostics loglog_regression(const rankfreq::FrequencySpectrum& spectrum) {
  std::vector<std::pair<double, double>> points;
  points.reserve(spectrum.probability.size());
  for (const auto& [f, p] : spectrum.probability)
    points.emplace_back(static_cast<double>(f), p);
  return loglog_regression(points);
}

SpectrumComparison compare_spectra(const rankfreq::FrequencySpectrum& real,
                                   const rankfreq::FrequencySpectrum& monkey) {
  if (real.types_with_frequency.empty() || monkey.types_with_frequency.empty())
    throw DegenerateInputError("spectrum comparison needs nonempty spectra");
  return SpectrumComparison{loglog_regression(real), loglog_regression(monkey), real, monkey};
}

}  // namespace zipfkit::nullmodel
