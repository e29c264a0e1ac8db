#include "solarlink/link_budget.hpp"

#include "solarlink/errors.hpp"
#include "solarlink/pathloss.hpp"
#include "solarlink/units.hpp"

#include <cmath>
#include <fmt/format.h>

namespace solarlink {

namespace {

void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(fmt::format("{} must be positive, got {}", name, value));
}

} // namespace

double AntennaConfig::aperture_m2(double frequency_ghz) const
{
    return solarlink::aperture_m2(frequency_ghz, gain_dbi);
}

bool AntennaConfig::wide_beam() const
{
    return hpbw_deg > constants::solar_disc_diameter_deg;
}

void LinkConfig::validate() const
{
    require_positive(frequency_ghz, "frequency_ghz");
    require_positive(system_temp_k, "system_temp_k");
    require_positive(reference_distance_m, "reference_distance_m");
    require_positive(tx_antenna.hpbw_deg, "tx hpbw_deg");
    require_positive(rx_antenna.hpbw_deg, "rx hpbw_deg");
    if (!(bandwidth_hz >= 1.0) || !std::isfinite(bandwidth_hz))
        throw DomainError(fmt::format("bandwidth_hz must be >= 1, got {}", bandwidth_hz));
    if (!std::isfinite(tx_power_dbm) || !std::isfinite(tx_antenna.gain_dbi) ||
        !std::isfinite(rx_antenna.gain_dbi))
        throw DomainError("transmit power and antenna gains must be finite");
}

LinkConfig table_one_config()
{
    LinkConfig config;
    config.frequency_ghz = 60.0;
    config.tx_power_dbm = 10.0;
    config.tx_antenna = {24.0, 7.3};
    config.rx_antenna = {24.0, 7.3};
    config.system_temp_k = kelvin_from_celsius(42.0);
    config.bandwidth_hz = 1.0;
    config.reference_distance_m = 1.0;
    return config;
}

double wavelength_m(double frequency_ghz)
{
    require_positive(frequency_ghz, "frequency");
    return constants::speed_of_light_c / (frequency_ghz * 1e9);
}

double aperture_m2(double frequency_ghz, double gain_dbi)
{
    const double lambda = wavelength_m(frequency_ghz);
    return lambda * lambda / (4.0 * constants::pi) * linear_from_db(gain_dbi);
}

double delta_cnr_db(double flux_sfu, double frequency_ghz, double rx_gain_dbi,
                    double system_temp_k)
{
    require_positive(system_temp_k, "system temperature");
    if (!(flux_sfu >= 0.0))
        throw DomainError(fmt::format("solar flux must be non-negative, got {} SFU", flux_sfu));
    const double gain = linear_from_db(rx_gain_dbi);
    const double ae = aperture_m2(frequency_ghz, rx_gain_dbi);
    const double solar_to_thermal = 2.0 * constants::pi * si_from_sfu(flux_sfu) * ae /
                                    (gain * constants::boltzmann_k * system_temp_k *
                                     constants::sun_solid_angle_omega_s);
    return 10.0 * std::log10(1.0 + solar_to_thermal);
}

double delta_cnr_db(const SolarFlux& flux, double rx_gain_dbi, double system_temp_k)
{
    return delta_cnr_db(flux.integrated_s, flux.frequency_ghz, rx_gain_dbi, system_temp_k);
}

double delta_cnr_from_aet_db(double flux_sfu, double aet_db, double rx_gain_dbi)
{
    if (!(flux_sfu >= 0.0))
        throw DomainError(fmt::format("solar flux must be non-negative, got {} SFU", flux_sfu));
    const double gain = linear_from_db(rx_gain_dbi);
    const double solar_to_thermal = 2.0 * constants::pi * si_from_sfu(flux_sfu) *
                                    linear_from_db(aet_db) /
                                    (gain * constants::boltzmann_k *
                                     constants::sun_solid_angle_omega_s);
    return 10.0 * std::log10(1.0 + solar_to_thermal);
}

DcnrSeries dcnr_curve(std::span<const double> frequencies_ghz, double aet_min_db,
                      double aet_max_db, double aet_step_db, const SolarActivityIndex& index,
                      double rx_gain_dbi, const BurstSetting& burst)
{
    if (frequencies_ghz.empty())
        throw DomainError("dcnr_curve: frequency list is empty");

    DcnrSeries series;
    series.aet_db = inclusive_grid(aet_min_db, aet_max_db, aet_step_db);
    series.frequencies_ghz.assign(frequencies_ghz.begin(), frequencies_ghz.end());
    for (double f : frequencies_ghz) {
        const SolarFlux flux = integrated_flux(f, index, burst);
        series.quiet_extrapolated = series.quiet_extrapolated || flux.quiet_extrapolated;
        std::vector<double> column;
        column.reserve(series.aet_db.size());
        for (double aet : series.aet_db)
            column.push_back(delta_cnr_from_aet_db(flux.integrated_s, aet, rx_gain_dbi));
        series.dcnr_db.push_back(std::move(column));
    }
    return series;
}

double thermal_noise_dbm(double system_temp_k, double bandwidth_hz)
{
    require_positive(system_temp_k, "system temperature");
    if (!(bandwidth_hz >= 1.0))
        throw DomainError(fmt::format("bandwidth must be >= 1 Hz, got {}", bandwidth_hz));
    return dbw_to_dbm(db_from_linear(constants::boltzmann_k * system_temp_k * bandwidth_hz));
}

double received_power_dbm(const LinkConfig& config, double path_loss_db)
{
    return config.tx_power_dbm - path_loss_db + config.tx_antenna.gain_dbi +
           config.rx_antenna.gain_dbi;
}

double cnr_db(const LinkConfig& config, double path_loss_db)
{
    return received_power_dbm(config, path_loss_db) -
           thermal_noise_dbm(config.system_temp_k, config.bandwidth_hz);
}

CnrProfile degradation_profile(const LinkConfig& config, double ple,
                               std::span<const double> distances_m, const SolarFlux& flux,
                               const ProfileOptions& options)
{
    config.validate();
    require_positive(ple, "path loss exponent");

    LinkConfig baseline = config;
    if (options.baseline_temp_k)
        baseline.system_temp_k = *options.baseline_temp_k;
    require_positive(baseline.system_temp_k, "baseline temperature");

    CnrProfile profile;
    profile.delta_cnr_db = delta_cnr_db(flux.integrated_s, config.frequency_ghz,
                                        config.rx_antenna.gain_dbi, config.system_temp_k);
    profile.wide_beam = config.wide_beam();
    profile.quiet_extrapolated = flux.quiet_extrapolated;

    LdmFit model;
    model.ple_n = ple;
    model.reference_distance_m = config.reference_distance_m;
    model.reference_loss_db = fspl_db(config.reference_distance_m, config.frequency_ghz);

    double previous = 0.0;
    double pct_sum = 0.0;
    for (double d : distances_m) {
        if (!(d >= config.reference_distance_m))
            throw DomainError(fmt::format("distance {} m is below the reference distance {} m", d,
                                          config.reference_distance_m));
        if (!profile.rows.empty() && !(d > previous))
            throw DomainError("distances must be sorted ascending without duplicates");
        previous = d;

        const double pl = ldm_predict(d, model);
        CnrRow row;
        row.distance_m = d;
        row.prec_dbw = dbm_to_dbw(received_power_dbm(config, pl));
        row.cnr_db = cnr_db(baseline, pl);
        row.pct_degradation = 100.0 * profile.delta_cnr_db / row.cnr_db;
        pct_sum += row.pct_degradation;
        row.cumulative_avg_pct = pct_sum / static_cast<double>(profile.rows.size() + 1);
        profile.rows.push_back(row);
    }
    return profile;
}

CoverageRange max_range(const LinkConfig& config, double ple, double cnr_threshold_db,
                        double delta_cnr_db)
{
    config.validate();
    require_positive(ple, "path loss exponent");
    const double d0 = config.reference_distance_m;
    const double margin =
        cnr_db(config, fspl_db(d0, config.frequency_ghz)) - delta_cnr_db - cnr_threshold_db;
    if (margin < 0.0)
        return {d0, false};
    return {d0 * std::pow(10.0, margin / (10.0 * ple)), true};
}

double esun_field_magnitude(double solar_power_density_kw_m2)
{
    if (!(solar_power_density_kw_m2 >= 0.0))
        throw DomainError(fmt::format("solar power density must be non-negative, got {} kW/m^2",
                                      solar_power_density_kw_m2));
    return std::sqrt(2.0 * constants::free_space_impedance_eta) *
           std::sqrt(solar_power_density_kw_m2 * 1000.0);
}

} // namespace solarlink
