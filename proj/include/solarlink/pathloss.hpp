#pragma once

#include <cstddef>
#include <span>

namespace solarlink {

struct PathLossSample {
    double distance_m;
    double path_loss_db;
};

/// Log-distance model PL(d) = PL(d0) + 10 n log10(d / d0) + X_sigma.
struct LdmFit {
    double ple_n = 0.0;
    double shadow_sigma_db = 0.0;
    double reference_distance_m = 1.0;
    double reference_loss_db = 0.0;
    std::size_t sample_count = 0;
};

/// Floating-intercept model PL(d) = alpha + 10 beta log10(d) + X_sigma.
struct FimFit {
    double alpha_db = 0.0;
    double beta_slope = 0.0;
    double shadow_sigma_db = 0.0;
    std::size_t sample_count = 0;
};

/// Friis free-space loss 20 log10(4 pi d / lambda).
double fspl_db(double distance_m, double frequency_ghz);

/// Mean path loss, shadowing excluded. Throws DomainError for d < d0.
double ldm_predict(double distance_m, const LdmFit& fit);
double fim_predict(double distance_m, const FimFit& fit);

/// Least-squares path loss exponent with the intercept pinned to
/// reference_loss_db at d0:
///   n = sum x_i (PL_i - PL0) / (10 sum x_i^2),  x_i = log10(d_i / d0)
/// sigma is the population RMS of the residuals over all samples.
///
/// Throws DomainError if any sample lies below d0 and FitError unless at least
/// two distinct distances beyond d0 are present.
LdmFit fit_ldm(std::span<const PathLossSample> samples, double d0_m, double reference_loss_db);

/// fit_ldm anchored to the free-space loss at d0 for the carrier frequency.
LdmFit fit_ldm_friis(std::span<const PathLossSample> samples, double frequency_ghz,
                     double d0_m = 1.0);

/// Ordinary least squares of PL on 10 log10(d) with a free intercept.
FimFit fit_fim(std::span<const PathLossSample> samples);

/// 100 (day - night) / night. Throws DomainError for a non-positive baseline.
double ple_increase_percent(double ple_day, double ple_night);

} // namespace solarlink
