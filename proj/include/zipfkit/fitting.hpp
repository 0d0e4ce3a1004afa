#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "zipfkit/rankfreq.hpp"

namespace zipfkit::fitting {

/// Right-truncated zeta distribution: pmf(z) = C * z^(-a) for z = 1..n and
/// exactly zero beyond n. C is always derived as 1/T(n,a), never a free
/// parameter.
struct TruncatedZetaModel {
  double a = 0.0;
  std::uint64_t n = 1;
  double C = 1.0;
};

/// Unnormalized power law: the expected frequency at rank z is
/// N * C * z^(-a) with a free amplitude C > 0.
struct PowerLawModel {
  double a = 0.0;
  double C = 1.0;
};

using Model = std::variant<TruncatedZetaModel, PowerLawModel>;

enum class FitMethod { mle, min_chisq };

/// Tail classes are pooled until each pooled class has at least this much
/// expected count.
struct PoolingPolicy {
  double min_expected = 1.0;
};

struct GofStats {
  double x2 = 0.0;
  std::optional<int> df;    // absent when pooling leaves df < 1
  std::optional<double> p;  // absent alongside df
  int pooled_classes = 0;
};

struct FitResult {
  Model model;
  double x2 = 0.0;
  std::optional<int> df;
  std::optional<double> p;
  FitMethod method = FitMethod::mle;
  int pooled_classes = 0;

  double a() const;
  double amplitude() const;  // the model's C
};

/// T(n,a) = sum_{z=1..n} z^(-a), accumulated small terms first.
double truncated_zeta_normalizer(double a, std::uint64_t n);

/// Builds a model with C = 1/T(n,a). Requires a >= 0 finite and n >= 1.
TruncatedZetaModel make_truncated_zeta(double a, std::uint64_t n);

double truncated_zeta_pmf(const TruncatedZetaModel& model, std::uint64_t z);

/// l(a) = -a * sum_z f_z ln z - N ln T(n,a); concave in a.
double truncated_zeta_log_likelihood(const rankfreq::RankFrequencyTable& table, double a,
                                     std::uint64_t n);

/// Expected frequency at a rank under either model, for a table of
/// total_tokens tokens.
double expected_frequency(const Model& model, std::uint64_t rank, double total_tokens);

/// Fits the exponent over a in [0, 10]. mle maximizes the concave
/// log-likelihood by golden-section search (tolerance 1e-6); min_chisq
/// minimizes the pooled Pearson statistic by a 0.01-step scan plus local
/// refinement. n defaults to the observed vocabulary V.
FitResult fit_truncated_zeta(const rankfreq::RankFrequencyTable& table, FitMethod method,
                             std::optional<std::uint64_t> n_override = {},
                             const PoolingPolicy& policy = {});

/// Two-parameter fit (C, a) minimizing the per-rank Pearson statistic with
/// expected_z = N * C * z^(-a); the amplitude has a closed-form profile and
/// the scan is seeded by least squares on (ln z, ln f_z). `method` is
/// accepted for call symmetry; the estimator is always least-X2 and the
/// result reports min_chisq.
FitResult fit_power_law(const rankfreq::RankFrequencyTable& table, FitMethod method,
                        const PoolingPolicy& policy = {});

/// Pearson X2 over rank classes pooled tail-first until each class reaches
/// policy.min_expected; df = classes - 1 - free_params, with df and p
/// reported unavailable when df < 1.
GofStats pearson_gof(const rankfreq::RankFrequencyTable& table, const Model& model,
                     int free_params, const PoolingPolicy& policy = {});

/// Upper-tail probability of the chi-square distribution, Q(df/2, x/2) via
/// the regularized incomplete gamma function. Absolute error <= 1e-10.
double chi_square_sf(double x, int df);

/// N independent draws by inversion of the cumulative pmf using the seeded
/// deterministic generator; counts are keyed by synthetic rank surfaces.
rankfreq::TypeCounts sample_truncated_zeta(const TruncatedZetaModel& model, std::uint64_t n_draws,
                                           std::uint64_t seed);

}  // namespace zipfkit::fitting
