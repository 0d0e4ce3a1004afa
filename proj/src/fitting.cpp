#include "zipfkit/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "zipfkit/errors.hpp"
#include "zipfkit/rng.hpp"

namespace zipfkit::fitting {

namespace {

constexpr double kMaxExponent = 10.0;  // search domain upper bound for a
constexpr double kSearchTol = 1e-6;
constexpr double kGridStep = 0.01;

// Free parameters charged against the degrees of freedom: the truncated fit
// counts the exponent and the truncation point (n defaults to V, i.e. it is
// taken from the data), the power law its exponent and amplitude.
constexpr int kTruncatedZetaParams = 2;
constexpr int kPowerLawParams = 2;

// Golden-section search for the maximum of a unimodal function on [lo, hi].
template <typename F>
double golden_maximize(F&& f, double lo, double hi, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

template <typename F>
double golden_minimize(F&& f, double lo, double hi, double tol) {
  return golden_maximize([&](double x) { return -f(x); }, lo, hi, tol);
}

// Lower regularized incomplete gamma P(a,x) by its series expansion.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 10000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma Q(a,x) by continued fraction
// (modified Lentz algorithm).
double gamma_q_contfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double FitResult::a() const {
  return std::visit([](const auto& m) { return m.a; }, model);
}

double FitResult::amplitude() const {
  return std::visit([](const auto& m) { return m.C; }, model);
}

double truncated_zeta_normalizer(double a, std::uint64_t n) {
  if (n == 0) throw std::domain_error("truncation rank n must be >= 1");
  double sum = 0.0;
  for (std::uint64_t z = n; z > 0; --z) sum += std::pow(static_cast<double>(z), -a);
  return sum;
}

TruncatedZetaModel make_truncated_zeta(double a, std::uint64_t n) {
  if (!(a >= 0.0) || !std::isfinite(a))
    throw std::domain_error("scaling exponent a must be finite and >= 0");
  TruncatedZetaModel model;
  model.a = a;
  model.n = n;
  model.C = 1.0 / truncated_zeta_normalizer(a, n);
  return model;
}

double truncated_zeta_pmf(const TruncatedZetaModel& model, std::uint64_t z) {
  if (z == 0) throw std::domain_error("rank z must be >= 1");
  if (z > model.n) return 0.0;
  return model.C * std::pow(static_cast<double>(z), -model.a);
}

double truncated_zeta_log_likelihood(const rankfreq::RankFrequencyTable& table, double a,
                                     std::uint64_t n) {
  double s = 0.0;
  for (const rankfreq::RankEntry& e : table.entries)
    s += static_cast<double>(e.frequency) * std::log(static_cast<double>(e.rank));
  return -a * s - static_cast<double>(table.total_tokens) *
                      std::log(truncated_zeta_normalizer(a, n));
}

double expected_frequency(const Model& model, std::uint64_t rank, double total_tokens) {
  if (const auto* tz = std::get_if<TruncatedZetaModel>(&model))
    return total_tokens * truncated_zeta_pmf(*tz, rank);
  const auto& pl = std::get<PowerLawModel>(model);
  return total_tokens * pl.C * std::pow(static_cast<double>(rank), -pl.a);
}

GofStats pearson_gof(const rankfreq::RankFrequencyTable& table, const Model& model,
                     int free_params, const PoolingPolicy& policy) {
  if (table.entries.empty())
    throw DegenerateInputError("goodness of fit needs a nonempty table");
  if (policy.min_expected <= 0.0) throw ConfigError("pooling threshold must be positive");
  if (const auto* pl = std::get_if<PowerLawModel>(&model); pl && pl->C <= 0.0)
    throw std::domain_error("power-law amplitude must be positive");

  const double total = static_cast<double>(table.total_tokens);
  // Pool adjacent rank classes tail-first until each class reaches the
  // expected-count floor; a short head remainder merges into the last class.
  std::vector<std::pair<double, double>> classes;  // (observed, expected)
  double obs_acc = 0.0;
  double exp_acc = 0.0;
  for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it) {
    obs_acc += static_cast<double>(it->frequency);
    exp_acc += expected_frequency(model, it->rank, total);
    if (exp_acc >= policy.min_expected) {
      classes.emplace_back(obs_acc, exp_acc);
      obs_acc = 0.0;
      exp_acc = 0.0;
    }
  }
  if (obs_acc > 0.0 || exp_acc > 0.0) {
    if (classes.empty())
      classes.emplace_back(obs_acc, exp_acc);
    else {
      classes.back().first += obs_acc;
      classes.back().second += exp_acc;
    }
  }

  GofStats out;
  for (const auto& [obs, exp] : classes) {
    if (exp <= 0.0)
      throw std::domain_error("pooled class has non-positive expected count");
    const double d = obs - exp;
    out.x2 += d * d / exp;
  }
  out.pooled_classes = static_cast<int>(classes.size());
  const int df = static_cast<int>(classes.size()) - 1 - free_params;
  if (df >= 1) {
    out.df = df;
    out.p = chi_square_sf(out.x2, df);
  }
  return out;
}

double chi_square_sf(double x, int df) {
  if (x < 0.0) throw std::domain_error("chi-square statistic must be >= 0");
  if (df < 1) throw std::domain_error("degrees of freedom must be >= 1");
  if (x == 0.0) return 1.0;
  const double a = 0.5 * df;
  const double s = 0.5 * x;
  // Series converges fastest left of the mean, continued fraction right of it.
  if (x < static_cast<double>(df) + 1.0) return 1.0 - gamma_p_series(a, s);
  return gamma_q_contfrac(a, s);
}

FitResult fit_truncated_zeta(const rankfreq::RankFrequencyTable& table, FitMethod method,
                             std::optional<std::uint64_t> n_override,
                             const PoolingPolicy& policy) {
  const std::uint64_t v = table.type_count();
  if (v < 2)
    throw DegenerateInputError("right-truncated zeta fit needs at least two word types");
  const std::uint64_t n = n_override.value_or(v);
  if (n == 0) throw std::domain_error("truncation rank n must be >= 1");

  double a_hat = 0.0;
  if (method == FitMethod::mle) {
    double s = 0.0;
    for (const rankfreq::RankEntry& e : table.entries)
      s += static_cast<double>(e.frequency) * std::log(static_cast<double>(e.rank));
    const double total = static_cast<double>(table.total_tokens);
    auto loglik = [&](double a) {
      return -a * s - total * std::log(truncated_zeta_normalizer(a, n));
    };
    a_hat = golden_maximize(loglik, 0.0, kMaxExponent, kSearchTol);
  } else {
    // A candidate whose pooling collapses to a single class scores X2 = 0
    // vacuously; such exponents are not comparable and are skipped.
    auto x2_at = [&](double a) {
      const GofStats gof =
          pearson_gof(table, make_truncated_zeta(a, n), kTruncatedZetaParams, policy);
      return gof.pooled_classes >= 2 ? gof.x2 : std::numeric_limits<double>::infinity();
    };
    int best_i = 0;
    double best_x2 = x2_at(0.0);
    const int steps = static_cast<int>(kMaxExponent / kGridStep);
    for (int i = 1; i <= steps; ++i) {
      const double x2 = x2_at(i * kGridStep);
      if (x2 < best_x2) {
        best_x2 = x2;
        best_i = i;
      }
    }
    const double lo = std::max(0.0, (best_i - 1) * kGridStep);
    const double hi = std::min(kMaxExponent, (best_i + 1) * kGridStep);
    const double refined = golden_minimize(x2_at, lo, hi, kSearchTol);
    a_hat = (x2_at(refined) <= best_x2) ? refined : best_i * kGridStep;
  }

  const TruncatedZetaModel model = make_truncated_zeta(a_hat, n);
  const GofStats gof = pearson_gof(table, model, kTruncatedZetaParams, policy);
  return FitResult{model, gof.x2, gof.df, gof.p, method, gof.pooled_classes};
}

FitResult fit_power_law(const rankfreq::RankFrequencyTable& table, FitMethod /*method*/,
                        const PoolingPolicy& policy) {
  const std::uint64_t v = table.type_count();
  if (v < 3)
    throw DegenerateInputError("power-law fit needs at least three word types");
  const double total = static_cast<double>(table.total_tokens);

  // For fixed a the X2-optimal amplitude is closed-form: with g_z = N z^-a,
  // A = sum f_z^2/g_z and B = sum g_z, C* = sqrt(A/B) and the per-rank
  // statistic collapses to X2 = 2(sqrt(A B) - N).
  auto profile = [&](double a) {
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (const rankfreq::RankEntry& e : table.entries) {
      const double g = total * std::pow(static_cast<double>(e.rank), -a);
      const double f = static_cast<double>(e.frequency);
      sum_a += f * f / g;
      sum_b += g;
    }
    return std::pair<double, double>{2.0 * (std::sqrt(sum_a * sum_b) - total),
                                     std::sqrt(sum_a / sum_b)};
  };
  auto x2_at = [&](double a) { return profile(a).first; };

  // Least-squares seed on (ln z, ln f_z).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const rankfreq::RankEntry& e : table.entries) {
    const double x = std::log(static_cast<double>(e.rank));
    const double y = std::log(static_cast<double>(e.frequency));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double nv = static_cast<double>(v);
  const double slope = (nv * sxy - sx * sy) / (nv * sxx - sx * sx);
  const double a_seed = std::clamp(-slope, 0.0, kMaxExponent);

  double best_a = a_seed;
  double best_x2 = x2_at(a_seed);
  const int steps = static_cast<int>(kMaxExponent / kGridStep);
  for (int i = 0; i <= steps; ++i) {
    const double a = i * kGridStep;
    const double x2 = x2_at(a);
    if (x2 < best_x2) {
      best_x2 = x2;
      best_a = a;
    }
  }
  const double lo = std::max(0.0, best_a - kGridStep);
  const double hi = std::min(kMaxExponent, best_a + kGridStep);
  const double refined = golden_minimize(x2_at, lo, hi, kSearchTol);
  const double a_hat = (x2_at(refined) <= best_x2) ? refined : best_a;

  const PowerLawModel model{a_hat, profile(a_hat).second};
  const GofStats gof = pearson_gof(table, model, kPowerLawParams, policy);
  return FitResult{model, gof.x2, gof.df, gof.p, FitMethod::min_chisq, gof.pooled_classes};
}

rankfreq::TypeCounts sample_truncated_zeta(const TruncatedZetaModel& model,
                                           std::uint64_t n_draws, std::uint64_t seed) {
  std::vector<double> cumulative(model.n);
  double acc = 0.0;
  for (std::uint64_t z = 1; z <= model.n; ++z) {
    acc += truncated_zeta_pmf(model, z);
    cumulative[z - 1] = acc;
  }
  cumulative.back() = 1.0;  // guard against rounding at the top end

  UniformRng rng(seed);
  std::vector<std::uint64_t> counts(model.n, 0);
  for (std::uint64_t i = 0; i < n_draws; ++i) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    ++counts[static_cast<std::size_t>(it - cumulative.begin())];
  }

  rankfreq::TypeCounts out;
  for (std::uint64_t z = 1; z <= model.n; ++z)
    if (counts[z - 1] > 0) out.counts[rankfreq::synthetic_rank_surface(z)] = counts[z - 1];
  return out;
}

}  // namespace zipfkit::fitting
