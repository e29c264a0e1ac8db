#pragma once

#include <optional>
#include <vector>

namespace solarlink {

/// Solar activity expressed as the 10.7 cm (2.8 GHz) flux reading F10, in SFU.
/// 70 SFU is the quiet-sun floor at which the slowly varying component vanishes.
class SolarActivityIndex {
public:
    static constexpr double quiet_floor_sfu = 70.0;
    static constexpr double upper_bound_sfu = 500.0;

    /// Throws DomainError outside [70, 500] SFU.
    explicit SolarActivityIndex(double f10_sfu);

    double f10() const { return f10_; }

private:
    double f10_;
};

enum class BurstPolicy {
    quiet,             ///< no flare during detection, 0 SFU
    upper_bound_flare, ///< largest observed burst, 10000 SFU
};

inline constexpr double max_burst_sfu = 10000.0;

/// Burst contribution: one of the two policies, or an explicit research
/// override clamped to [0, max_burst_sfu].
class BurstSetting {
public:
    BurstSetting(BurstPolicy policy = BurstPolicy::quiet) : policy_(policy) {}

    static BurstSetting custom(double sfu);

    double sfu() const;
    BurstPolicy policy() const { return policy_; }
    bool is_custom() const { return custom_sfu_.has_value(); }

private:
    BurstPolicy policy_;
    std::optional<double> custom_sfu_;
};

struct SolarFlux {
    double frequency_ghz = 0.0;
    double quiet_sq = 0.0;
    double varying_sv = 0.0;
    double burst_sb = 0.0;
    double integrated_s = 0.0;
    /// The quiet-sun quadratic is only validated to 20 GHz.
    bool quiet_extrapolated = false;
};

/// Upper edge of the frequency range the quiet-sun fit was validated on [GHz].
inline constexpr double quiet_fit_max_ghz = 20.0;

/// Quiet component S_q(f) = 26.4 + 12.4 f + 1.11 f^2 [SFU]. Applied at any
/// positive frequency; above 20 GHz it overestimates.
double quiet_flux(double frequency_ghz);

/// Slowly varying (plage) component
///   0.64 (F10 - 70) f^0.4 / (1 + 1.56 ln^2(f / 2.9))   [SFU]
double varying_flux(double frequency_ghz, const SolarActivityIndex& index);

double burst_flux(BurstPolicy policy = BurstPolicy::quiet);

SolarFlux integrated_flux(double frequency_ghz, const SolarActivityIndex& index,
                          const BurstSetting& burst = {});

/// Inclusive sweep f_min, f_min + step, ... <= f_max. f_min == f_max yields
/// a single row.
std::vector<SolarFlux> flux_curve(double f_min_ghz, double f_max_ghz, double step_ghz,
                                  const SolarActivityIndex& index,
                                  const BurstSetting& burst = {});

/// Grid helper shared by the frequency and A_e/T sweeps. Throws DomainError
/// for an inverted range or a non-positive step.
std::vector<double> inclusive_grid(double lo, double hi, double step);

} // namespace solarlink
