#include "solarlink/solar_flux.hpp"

#include "solarlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace solarlink {

namespace {

void require_positive_frequency(double frequency_ghz)
{
    if (!(frequency_ghz > 0.0) || !std::isfinite(frequency_ghz))
        throw DomainError(fmt::format("frequency must be positive, got {} GHz", frequency_ghz));
}

} // namespace

SolarActivityIndex::SolarActivityIndex(double f10_sfu) : f10_(f10_sfu)
{
    if (!(f10_sfu >= quiet_floor_sfu))
        throw DomainError(fmt::format(
            "F10 = {} SFU is below the quiet-sun floor of {} SFU", f10_sfu, quiet_floor_sfu));
    if (f10_sfu > upper_bound_sfu)
        throw DomainError(fmt::format(
            "F10 = {} SFU exceeds the sanity bound of {} SFU", f10_sfu, upper_bound_sfu));
}

BurstSetting BurstSetting::custom(double sfu)
{
    if (std::isnan(sfu))
        throw DomainError("burst flux override is NaN");
    BurstSetting s;
    s.custom_sfu_ = std::clamp(sfu, 0.0, max_burst_sfu);
    return s;
}

double BurstSetting::sfu() const
{
    return custom_sfu_ ? *custom_sfu_ : burst_flux(policy_);
}

double quiet_flux(double frequency_ghz)
{
    require_positive_frequency(frequency_ghz);
    const double f = frequency_ghz;
    return 26.4 + 12.4 * f + 1.11 * f * f;
}

double varying_flux(double frequency_ghz, const SolarActivityIndex& index)
{
    require_positive_frequency(frequency_ghz);
    const double f = frequency_ghz;
    const double log_term = std::log(f / 2.9);
    return 0.64 * (index.f10() - SolarActivityIndex::quiet_floor_sfu) * std::pow(f, 0.4) /
           (1.0 + 1.56 * log_term * log_term);
}

double burst_flux(BurstPolicy policy)
{
    switch (policy) {
    case BurstPolicy::quiet:
        return 0.0;
    case BurstPolicy::upper_bound_flare:
        return max_burst_sfu;
    }
    return 0.0;
}

SolarFlux integrated_flux(double frequency_ghz, const SolarActivityIndex& index,
                          const BurstSetting& burst)
{
    SolarFlux flux;
    flux.frequency_ghz = frequency_ghz;
    flux.quiet_sq = quiet_flux(frequency_ghz);
    flux.varying_sv = varying_flux(frequency_ghz, index);
    flux.burst_sb = burst.sfu();
    flux.integrated_s = flux.quiet_sq + flux.varying_sv + flux.burst_sb;
    flux.quiet_extrapolated = frequency_ghz > quiet_fit_max_ghz;
    return flux;
}

std::vector<double> inclusive_grid(double lo, double hi, double step)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step))
        throw DomainError("grid bounds and step must be finite");
    if (!(step > 0.0))
        throw DomainError(fmt::format("grid step must be positive, got {}", step));
    if (lo > hi)
        throw DomainError(fmt::format("grid range [{}, {}] is inverted", lo, hi));

    // Tolerate accumulated rounding so that e.g. [1, 100] step 0.1 ends at 100.
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        grid.push_back(lo + static_cast<double>(i) * step);
    return grid;
}

std::vector<SolarFlux> flux_curve(double f_min_ghz, double f_max_ghz, double step_ghz,
                                  const SolarActivityIndex& index, const BurstSetting& burst)
{
    if (!(f_min_ghz > 0.0))
        throw DomainError(fmt::format("f_min must be positive, got {} GHz", f_min_ghz));
    std::vector<SolarFlux> rows;
    for (double f : inclusive_grid(f_min_ghz, f_max_ghz, step_ghz))
        rows.push_back(integrated_flux(f, index, burst));
    return rows;
}

} // namespace solarlink
