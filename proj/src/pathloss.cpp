#include "solarlink/pathloss.hpp"

#include "solarlink/errors.hpp"
#include "solarlink/units.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace solarlink {

namespace {

// Throws unless at least two distinct distances satisfy the predicate.
template <typename Pred>
void require_two_distinct(std::span<const PathLossSample> samples, Pred usable, const char* what)
{
    const PathLossSample* first = nullptr;
    for (const auto& s : samples) {
        if (!usable(s))
            continue;
        if (!first)
            first = &s;
        else if (s.distance_m != first->distance_m)
            return;
    }
    throw FitError(fmt::format("{}: need at least two distinct distances, got {} sample(s)",
                               what, samples.size()));
}

void require_finite(std::span<const PathLossSample> samples)
{
    for (const auto& s : samples) {
        if (!std::isfinite(s.distance_m) || !std::isfinite(s.path_loss_db))
            throw DomainError("path loss sample contains a non-finite value");
        if (!(s.distance_m > 0.0))
            throw DomainError(fmt::format("sample distance must be positive, got {} m", s.distance_m));
    }
}

} // namespace

double fspl_db(double distance_m, double frequency_ghz)
{
    if (!(distance_m > 0.0))
        throw DomainError(fmt::format("distance must be positive, got {} m", distance_m));
    if (!(frequency_ghz > 0.0))
        throw DomainError(fmt::format("frequency must be positive, got {} GHz", frequency_ghz));
    const double lambda = constants::speed_of_light_c / (frequency_ghz * 1e9);
    return 20.0 * std::log10(4.0 * constants::pi * distance_m / lambda);
}

double ldm_predict(double distance_m, const LdmFit& fit)
{
    if (!(distance_m >= fit.reference_distance_m))
        throw DomainError(fmt::format("distance {} m is below the reference distance {} m",
                                      distance_m, fit.reference_distance_m));
    return fit.reference_loss_db +
           10.0 * fit.ple_n * std::log10(distance_m / fit.reference_distance_m);
}

double fim_predict(double distance_m, const FimFit& fit)
{
    if (!(distance_m > 0.0))
        throw DomainError(fmt::format("distance must be positive, got {} m", distance_m));
    return fit.alpha_db + 10.0 * fit.beta_slope * std::log10(distance_m);
}

LdmFit fit_ldm(std::span<const PathLossSample> samples, double d0_m, double reference_loss_db)
{
    if (!(d0_m > 0.0))
        throw DomainError(fmt::format("reference distance must be positive, got {} m", d0_m));
    require_finite(samples);
    for (const auto& s : samples) {
        if (s.distance_m < d0_m)
            throw DomainError(fmt::format("sample at {} m lies below the reference distance {} m",
                                          s.distance_m, d0_m));
    }
    require_two_distinct(samples, [d0_m](const PathLossSample& s) { return s.distance_m > d0_m; },
                         "fit_ldm");

    // Samples at exactly d0 have x = 0 and drop out of both sums.
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& s : samples) {
        const double x = std::log10(s.distance_m / d0_m);
        sxy += x * (s.path_loss_db - reference_loss_db);
        sxx += x * x;
    }

    LdmFit fit;
    fit.ple_n = sxy / (10.0 * sxx);
    fit.reference_distance_m = d0_m;
    fit.reference_loss_db = reference_loss_db;
    fit.sample_count = samples.size();

    double sse = 0.0;
    for (const auto& s : samples) {
        const double r = s.path_loss_db - ldm_predict(s.distance_m, fit);
        sse += r * r;
    }
    fit.shadow_sigma_db = std::sqrt(sse / static_cast<double>(samples.size()));
    return fit;
}

LdmFit fit_ldm_friis(std::span<const PathLossSample> samples, double frequency_ghz, double d0_m)
{
    return fit_ldm(samples, d0_m, fspl_db(d0_m, frequency_ghz));
}

FimFit fit_fim(std::span<const PathLossSample> samples)
{
    require_finite(samples);
    require_two_distinct(samples, [](const PathLossSample&) { return true; }, "fit_fim");

    // Centred normal equations.
    const double count = static_cast<double>(samples.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& s : samples) {
        mean_x += 10.0 * std::log10(s.distance_m);
        mean_y += s.path_loss_db;
    }
    mean_x /= count;
    mean_y /= count;

    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& s : samples) {
        const double dx = 10.0 * std::log10(s.distance_m) - mean_x;
        sxy += dx * (s.path_loss_db - mean_y);
        sxx += dx * dx;
    }

    FimFit fit;
    fit.beta_slope = sxy / sxx;
    fit.alpha_db = mean_y - fit.beta_slope * mean_x;
    fit.sample_count = samples.size();

    double sse = 0.0;
    for (const auto& s : samples) {
        const double r = s.path_loss_db - fim_predict(s.distance_m, fit);
        sse += r * r;
    }
    fit.shadow_sigma_db = std::sqrt(sse / count);
    return fit;
}

double ple_increase_percent(double ple_day, double ple_night)
{
    if (!(ple_night > 0.0))
        throw DomainError(fmt::format("baseline PLE must be positive, got {}", ple_night));
    if (!(ple_day > 0.0))
        throw DomainError(fmt::format("PLE must be positive, got {}", ple_day));
    return 100.0 * (ple_day - ple_night) / ple_night;
}

} // namespace solarlink
