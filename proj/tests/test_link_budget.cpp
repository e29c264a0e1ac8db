#include "doctest.h"

#include "solarlink/errors.hpp"
#include "solarlink/link_budget.hpp"
#include "solarlink/pathloss.hpp"
#include "solarlink/units.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace solarlink;

namespace {

const SolarActivityIndex kActive{329.0};
const double kTableDistances[] = {1.0, 10.0, 20.0, 50.0, 100.0};

// Gain-free form of the solar-to-thermal ratio: S lambda^2 / (2 k T Omega_s).
double solar_ratio_gain_free(double s_sfu, double f_ghz, double temp_k)
{
    const double lambda = constants::speed_of_light_c / (f_ghz * 1e9);
    return s_sfu * 1e-22 * lambda * lambda /
           (2.0 * constants::boltzmann_k * temp_k * constants::sun_solid_angle_omega_s);
}

} // namespace

TEST_CASE("wavelength")
{
    CHECK(wavelength_m(60.0) == doctest::Approx(4.9965e-3).epsilon(1e-4));
    CHECK(wavelength_m(0.299792458) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wavelength_m(2.8) == doctest::Approx(0.10707).epsilon(1e-4));
    CHECK_THROWS_AS(wavelength_m(0.0), DomainError);
}

TEST_CASE("aperture")
{
    CHECK(aperture_m2(60.0, 24.0) == doctest::Approx(4.990e-4).epsilon(1e-3));
    CHECK(aperture_m2(60.0, 0.0) == doctest::Approx(1.9866851e-6).epsilon(1e-7));
    CHECK(aperture_m2(30.0, 24.0) == doctest::Approx(4.0 * aperture_m2(60.0, 24.0)).epsilon(1e-12));

    // A_e / T at 42 C is the -58 dB m^2/K operating point.
    const double aet = db_from_linear(aperture_m2(60.0, 24.0) / kelvin_from_celsius(42.0));
    CHECK(aet == doctest::Approx(-58.0).epsilon(1e-3));
}

TEST_CASE("delta_cnr")
{
    CHECK(delta_cnr_db(4822.0, 60.0, 24.0, 315.15) == doctest::Approx(13.2946).epsilon(1e-5));
    CHECK(delta_cnr_db(4822.0, 60.0, 24.0, 630.3) == doctest::Approx(10.4831).epsilon(1e-5));
    CHECK(delta_cnr_db(0.0, 60.0, 24.0, 315.15) == 0.0);
    CHECK(delta_cnr_db(0.0, 3.0, 40.0, 10.0) == 0.0);
    CHECK_THROWS_AS(delta_cnr_db(4822.0, 60.0, 24.0, 0.0), DomainError);
    CHECK_THROWS_AS(delta_cnr_db(-1.0, 60.0, 24.0, 300.0), DomainError);

    const SolarFlux flux = integrated_flux(60.0, kActive);
    CHECK(delta_cnr_db(flux, 24.0, 315.15) == doctest::Approx(13.30).epsilon(5e-3));
}

TEST_CASE("delta_cnr: antenna gain cancels in the interior ratio")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> s_dist(1.0, 20000.0), f_dist(1.0, 100.0),
        g_dist(-5.0, 50.0), t_dist(50.0, 2000.0);
    for (int i = 0; i < 2000; ++i) {
        const double s = s_dist(rng), f = f_dist(rng), g = g_dist(rng), t = t_dist(rng);
        const double via_gain = linear_from_db(delta_cnr_db(s, f, g, t)) - 1.0;
        const double gain_free = solar_ratio_gain_free(s, f, t);
        CHECK(std::abs(via_gain - gain_free) / gain_free < 1e-12);
    }
}

TEST_CASE("delta_cnr monotonicity")
{
    double prev = -1.0;
    for (double s = 0.0; s <= 20000.0; s += 250.0) {
        const double cur = delta_cnr_db(s, 60.0, 24.0, 315.15);
        CHECK(cur >= 0.0);
        CHECK(cur > prev);
        CHECK((cur == 0.0) == (s == 0.0));
        prev = cur;
    }
    prev = 1e9;
    for (double t = 10.0; t <= 3000.0; t += 10.0) {
        const double cur = delta_cnr_db(4822.0, 60.0, 24.0, t);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("dcnr curve")
{
    const double freqs[] = {10.0, 30.0, 60.0};
    const auto series = dcnr_curve(freqs, -80.0, -30.0, 1.0, kActive, 24.0);
    REQUIRE(series.aet_db.size() == 51);
    REQUIRE(series.dcnr_db.size() == 3);
    CHECK(series.quiet_extrapolated);

    // -58 dB m^2/K is index 22.
    CHECK(series.aet_db[22] == -58.0);
    CHECK(series.dcnr_db[2][22] == doctest::Approx(13.3).epsilon(5e-3));

    for (const auto& column : series.dcnr_db)
        for (std::size_t j = 1; j < column.size(); ++j)
            CHECK(column[j] >= column[j - 1]);

    CHECK(delta_cnr_from_aet_db(4822.0, -400.0, 24.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(dcnr_curve(std::span<const double>{}, -80.0, -30.0, 1.0, kActive, 24.0),
                    DomainError);
    CHECK_THROWS_AS(dcnr_curve(freqs, -30.0, -80.0, 1.0, kActive, 24.0), DomainError);
}

TEST_CASE("A_e/T route agrees with the physical route")
{
    for (double f : {5.0, 28.0, 60.0, 73.0}) {
        for (double t : {100.0, 315.15, 900.0}) {
            const double s = integrated_flux(f, kActive).integrated_s;
            const double aet = db_from_linear(aperture_m2(f, 24.0) / t);
            CHECK(delta_cnr_from_aet_db(s, aet, 24.0) ==
                  doctest::Approx(delta_cnr_db(s, f, 24.0, t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("thermal noise")
{
    CHECK(thermal_noise_dbm(298.15, 1.0) == doctest::Approx(-173.857).epsilon(1e-5));
    CHECK(thermal_noise_dbm(315.15, 1.0) == doctest::Approx(-173.616).epsilon(1e-5));
    CHECK(thermal_noise_dbm(298.15, 1e6) == doctest::Approx(-113.857).epsilon(1e-5));
    CHECK_THROWS_AS(thermal_noise_dbm(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(thermal_noise_dbm(300.0, 0.5), DomainError);
}

TEST_CASE("received power and CNR")
{
    const LinkConfig cfg = table_one_config();
    CHECK(received_power_dbm(cfg, 68.0) == -10.0);
    CHECK(dbm_to_dbw(received_power_dbm(cfg, 68.0)) == -40.0);
    CHECK(dbm_to_dbw(received_power_dbm(cfg, 88.0)) == -60.0);

    LinkConfig isotropic = cfg;
    isotropic.tx_antenna.gain_dbi = 0.0;
    isotropic.rx_antenna.gain_dbi = 0.0;
    isotropic.tx_power_dbm = 7.5;
    CHECK(received_power_dbm(isotropic, 0.0) == 7.5);

    CHECK(cnr_db(cfg, fspl_db(1.0, 60.0)) == doctest::Approx(163.6).epsilon(5e-4));
    CHECK(cnr_db(cfg, fspl_db(1.0, 60.0) + 40.0) == doctest::Approx(123.6).epsilon(5e-4));

    LinkConfig wide = cfg;
    wide.bandwidth_hz = 10.0;
    CHECK(cnr_db(cfg, 90.0) - cnr_db(wide, 90.0) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("degradation profile reproduces the 42 C table")
{
    const auto profile = degradation_profile(table_one_config(), 2.0, kTableDistances,
                                             integrated_flux(60.0, kActive));
    REQUIRE(profile.rows.size() == 5);
    CHECK(profile.wide_beam);
    CHECK(profile.quiet_extrapolated);

    const double prec[] = {-40.0, -60.0, -66.0, -74.0, -80.0};
    const double cnr[] = {163.6, 143.6, 137.6, 129.6, 123.6};
    const double pct[] = {8.13, 9.26, 9.67, 10.26, 10.76};
    const double cum[] = {8.1, 8.7, 9.0, 9.3, 9.6};
    for (std::size_t i = 0; i < 5; ++i) {
        CAPTURE(i);
        CHECK(std::abs(profile.rows[i].prec_dbw - prec[i]) <= 0.05);
        CHECK(std::abs(profile.rows[i].cnr_db - cnr[i]) <= 0.05);
        CHECK(std::abs(profile.rows[i].pct_degradation - pct[i]) <= 0.05);
        CHECK(std::abs(profile.rows[i].cumulative_avg_pct - cum[i]) <= 0.05);
    }
}

TEST_CASE("degradation profile invariants")
{
    const LinkConfig cfg = table_one_config();
    std::vector<double> distances;
    for (double d = 1.0; d <= 1000.0; d *= 1.7)
        distances.push_back(d);

    for (double ple : {1.6, 2.0, 3.1, 4.4}) {
        const auto profile =
            degradation_profile(cfg, ple, distances, integrated_flux(60.0, kActive));
        double running = 0.0;
        for (std::size_t i = 0; i < profile.rows.size(); ++i) {
            const auto& r = profile.rows[i];
            running += r.pct_degradation;
            CHECK(r.cumulative_avg_pct == doctest::Approx(running / double(i + 1)).epsilon(1e-12));
            CHECK(r.pct_degradation ==
                  doctest::Approx(100.0 * profile.delta_cnr_db / r.cnr_db).epsilon(1e-12));
            if (i > 0)
                CHECK(r.cnr_db < profile.rows[i - 1].cnr_db);
        }
    }

    // 10 n dB per decade.
    const double decade[] = {2.0, 20.0, 200.0};
    const auto p = degradation_profile(cfg, 3.3, decade, integrated_flux(60.0, kActive));
    CHECK(p.rows[0].cnr_db - p.rows[1].cnr_db == doctest::Approx(33.0).epsilon(1e-12));
    CHECK(p.rows[1].cnr_db - p.rows[2].cnr_db == doctest::Approx(33.0).epsilon(1e-12));
}

TEST_CASE("degradation profile edge cases")
{
    const LinkConfig cfg = table_one_config();
    const auto none = degradation_profile(cfg, 2.0, kTableDistances,
                                          integrated_flux(60.0, SolarActivityIndex(70.0), BurstSetting::custom(0.0)));
    CHECK(none.delta_cnr_db > 0.0); // quiet sun still radiates

    SolarFlux dark;
    dark.frequency_ghz = 60.0;
    const auto zero = degradation_profile(cfg, 2.0, kTableDistances, dark);
    for (const auto& r : zero.rows)
        CHECK(r.pct_degradation == 0.0);

    const double below[] = {0.5, 10.0};
    CHECK_THROWS_AS(degradation_profile(cfg, 2.0, below, dark), DomainError);
    const double unsorted[] = {10.0, 5.0};
    CHECK_THROWS_AS(degradation_profile(cfg, 2.0, unsorted, dark), DomainError);
    CHECK_THROWS_AS(degradation_profile(cfg, 0.0, kTableDistances, dark), DomainError);

    // Night baseline: a cooler baseline raises CNR and lowers the percentage.
    ProfileOptions night;
    night.baseline_temp_k = kelvin_from_celsius(20.0);
    const SolarFlux flux = integrated_flux(60.0, kActive);
    const auto day_profile = degradation_profile(cfg, 2.0, kTableDistances, flux);
    const auto night_profile = degradation_profile(cfg, 2.0, kTableDistances, flux, night);
    CHECK(night_profile.delta_cnr_db == day_profile.delta_cnr_db);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(night_profile.rows[i].pct_degradation < day_profile.rows[i].pct_degradation);
}

TEST_CASE("max_range")
{
    const LinkConfig cfg = table_one_config();
    const auto clear = max_range(cfg, 2.0, 123.6, 0.0);
    CHECK(clear.covered);
    CHECK(clear.range_m == doctest::Approx(100.0).epsilon(1e-3));

    const auto sunny = max_range(cfg, 2.0, 123.6, 13.3);
    CHECK(sunny.range_m == doctest::Approx(21.6).epsilon(3e-3));

    const double cnr0 = cnr_db(cfg, fspl_db(1.0, 60.0));
    const auto edge = max_range(cfg, 2.0, cnr0, 0.0);
    CHECK(edge.covered);
    CHECK(edge.range_m == doctest::Approx(1.0).epsilon(1e-12));

    const auto out = max_range(cfg, 2.0, cnr0 + 1.0, 0.0);
    CHECK_FALSE(out.covered);
    CHECK(out.range_m == 1.0);

    // CNR at the returned range equals the threshold.
    for (double ple : {1.8, 2.0, 3.5}) {
        for (double threshold : {60.0, 100.0, 150.0}) {
            const auto r = max_range(cfg, ple, threshold, 0.0);
            const double range[] = {r.range_m};
            const auto p = degradation_profile(cfg, ple, range, SolarFlux{});
            CHECK(std::abs(p.rows[0].cnr_db - threshold) < 1e-9);
        }
    }

    double prev = 1e30;
    for (double dcnr = 0.0; dcnr <= 30.0; dcnr += 0.5) {
        const double r = max_range(cfg, 2.0, 123.6, dcnr).range_m;
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("solar field magnitude")
{
    CHECK(esun_field_magnitude(0.0) == 0.0);
    CHECK(esun_field_magnitude(1.0) == doctest::Approx(868.33).epsilon(1e-5));
    CHECK(esun_field_magnitude(0.25) == doctest::Approx(434.17).epsilon(1e-5));
    CHECK_THROWS_AS(esun_field_magnitude(-0.1), DomainError);
}

TEST_CASE("link config validation")
{
    LinkConfig cfg = table_one_config();
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.system_temp_k == doctest::Approx(315.15));
    cfg.bandwidth_hz = 0.5;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = table_one_config();
    cfg.frequency_ghz = -1.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);

    AntennaConfig narrow{40.0, 0.3};
    CHECK_FALSE(narrow.wide_beam());
    CHECK(AntennaConfig{24.0, 7.3}.wide_beam());
}
