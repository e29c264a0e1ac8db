#pragma once

#include "solarlink/solar_flux.hpp"

#include <optional>
#include <span>
#include <vector>

namespace solarlink {

struct AntennaConfig {
    double gain_dbi = 0.0;
    double hpbw_deg = 0.0;

    /// Effective aperture A_e = (lambda^2 / 4 pi) G at the given carrier [m^2].
    double aperture_m2(double frequency_ghz) const;
    /// The solar-noise formula assumes a beam narrower than the solar disc.
    bool wide_beam() const;
};

struct LinkConfig {
    double frequency_ghz = 60.0;
    double tx_power_dbm = 10.0;
    AntennaConfig tx_antenna{24.0, 7.3};
    AntennaConfig rx_antenna{24.0, 7.3};
    double system_temp_k = 315.15;
    double bandwidth_hz = 1.0;
    double reference_distance_m = 1.0;

    /// Throws DomainError naming the first invalid field.
    void validate() const;
    bool wide_beam() const { return tx_antenna.wide_beam() || rx_antenna.wide_beam(); }
};

/// 60 GHz, 10 dBm, 24/24 dBi horns (7.3 deg), 42 C, B = 1 Hz, d0 = 1 m.
LinkConfig table_one_config();

double wavelength_m(double frequency_ghz);
double aperture_m2(double frequency_ghz, double gain_dbi);

/// Decrease in CNR caused by solar noise entering a receive antenna [dB]:
///   10 log10(1 + 2 pi S A_e / (G k T Omega_s))
double delta_cnr_db(double flux_sfu, double frequency_ghz, double rx_gain_dbi,
                    double system_temp_k);
double delta_cnr_db(const SolarFlux& flux, double rx_gain_dbi, double system_temp_k);

/// Same quantity parameterised by the aperture-to-temperature ratio A_e/T
/// [dB m^2/K] for an antenna of the given gain.
double delta_cnr_from_aet_db(double flux_sfu, double aet_db, double rx_gain_dbi);

struct DcnrSeries {
    std::vector<double> aet_db;
    std::vector<double> frequencies_ghz;
    /// dcnr_db[i][j]: frequency i, A_e/T point j.
    std::vector<std::vector<double>> dcnr_db;
    bool quiet_extrapolated = false;
};

DcnrSeries dcnr_curve(std::span<const double> frequencies_ghz, double aet_min_db,
                      double aet_max_db, double aet_step_db, const SolarActivityIndex& index,
                      double rx_gain_dbi, const BurstSetting& burst = {});

/// 10 log10(k T B / 1 mW).
double thermal_noise_dbm(double system_temp_k, double bandwidth_hz);

/// P_t - PL + G_t + G_r.
double received_power_dbm(const LinkConfig& config, double path_loss_db);

double cnr_db(const LinkConfig& config, double path_loss_db);

struct CnrRow {
    double distance_m;
    double prec_dbw;
    double cnr_db;
    double pct_degradation;
    double cumulative_avg_pct;
};

struct CnrProfile {
    std::vector<CnrRow> rows;
    double delta_cnr_db = 0.0;
    bool wide_beam = false;
    bool quiet_extrapolated = false;
};

struct ProfileOptions {
    /// Compute the baseline CNR at this temperature (night-time) instead of the
    /// link's own system temperature. Solar dCNR always uses the link's temperature.
    std::optional<double> baseline_temp_k;
};

/// Distance-resolved CNR and percentage CNR degradation under the log-distance
/// model with free-space reference loss and no shadowing.
CnrProfile degradation_profile(const LinkConfig& config, double ple,
                               std::span<const double> distances_m, const SolarFlux& flux,
                               const ProfileOptions& options = {});

struct CoverageRange {
    double range_m;
    /// False when the threshold is not met even at the reference distance.
    bool covered;
};

CoverageRange max_range(const LinkConfig& config, double ple, double cnr_threshold_db,
                        double delta_cnr_db);

/// |E_sun| = sqrt(2 * 377 * S_av) with S_av in kW/m^2, returned in V/m.
double esun_field_magnitude(double solar_power_density_kw_m2);

} // namespace solarlink
