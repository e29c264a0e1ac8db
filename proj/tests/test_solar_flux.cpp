#include "doctest.h"

#include "solarlink/errors.hpp"
#include "solarlink/solar_flux.hpp"

#include <algorithm>
#include <cmath>

using namespace solarlink;

namespace {
const SolarActivityIndex kActive{329.0};
}

TEST_CASE("quiet component")
{
    CHECK(quiet_flux(2.8) == doctest::Approx(69.8224).epsilon(1e-9));
    CHECK(quiet_flux(60.0) == doctest::Approx(4766.4).epsilon(1e-12));
    CHECK(quiet_flux(0.001) == doctest::Approx(26.41).epsilon(1e-3));
    CHECK_THROWS_AS(quiet_flux(0.0), DomainError);
    CHECK_THROWS_AS(quiet_flux(-1.0), DomainError);
}

TEST_CASE("quiet component is strictly increasing")
{
    double prev = quiet_flux(0.01);
    for (double f = 0.02; f <= 200.0; f += 0.01) {
        const double cur = quiet_flux(f);
        REQUIRE(cur > prev);
        prev = cur;
    }
}

TEST_CASE("slowly varying component")
{
    CHECK(varying_flux(2.8, kActive) == doctest::Approx(249.75).epsilon(1e-4));
    CHECK(varying_flux(60.0, kActive) == doctest::Approx(55.66).epsilon(1e-4));
    for (double f : {0.5, 2.8, 20.0, 60.0, 300.0})
        CHECK(varying_flux(f, SolarActivityIndex(70.0)) == 0.0);
    CHECK_THROWS_AS(varying_flux(0.0, kActive), DomainError);
}

TEST_CASE("activity index bounds")
{
    CHECK_THROWS_AS(SolarActivityIndex(69.9), DomainError);
    CHECK_THROWS_AS(SolarActivityIndex(500.1), DomainError);
    CHECK_NOTHROW(SolarActivityIndex(70.0));
    CHECK_NOTHROW(SolarActivityIndex(500.0));
}

TEST_CASE("varying component is linear in F10 - 70")
{
    for (double f : {1.0, 2.9, 10.0, 60.0}) {
        for (double k : {10.0, 50.0, 150.0}) {
            const double once = varying_flux(f, SolarActivityIndex(70.0 + k));
            const double twice = varying_flux(f, SolarActivityIndex(70.0 + 2.0 * k));
            CHECK(twice == doctest::Approx(2.0 * once).epsilon(1e-12));
        }
    }
}

TEST_CASE("varying component peaks near 3 GHz")
{
    // d/df ln S_v = 0  <=>  0.624 L^2 - 3.12 L + 0.4 = 0 with L = ln(f / 2.9).
    const double root = (3.12 - std::sqrt(3.12 * 3.12 - 4.0 * 0.624 * 0.4)) / (2.0 * 0.624);
    const double analytic_peak = 2.9 * std::exp(root);
    CHECK(analytic_peak == doctest::Approx(3.308).epsilon(1e-3));

    for (double f10 : {71.0, 150.0, 329.0, 500.0}) {
        const SolarActivityIndex idx(f10);
        double best_f = 0.0;
        double best = -1.0;
        for (int i = 1; i <= 10000; ++i) {
            const double f = 0.01 * i;
            const double v = varying_flux(f, idx);
            if (v > best) {
                best = v;
                best_f = f;
            }
        }
        CHECK(std::abs(best_f - analytic_peak) <= 0.005);
    }
}

TEST_CASE("burst policies")
{
    CHECK(burst_flux(BurstPolicy::quiet) == 0.0);
    CHECK(burst_flux(BurstPolicy::upper_bound_flare) == 10000.0);
    CHECK(burst_flux() == 0.0);
    CHECK(BurstSetting{}.sfu() == 0.0);
    CHECK(BurstSetting::custom(2500.0).sfu() == 2500.0);
    CHECK(BurstSetting::custom(-5.0).sfu() == 0.0);
    CHECK(BurstSetting::custom(1e6).sfu() == 10000.0);
}

TEST_CASE("integrated flux")
{
    const SolarFlux at60 = integrated_flux(60.0, kActive);
    CHECK(at60.integrated_s == doctest::Approx(4822.0).epsilon(1e-4));
    CHECK(at60.quiet_extrapolated);
    CHECK(at60.burst_sb == 0.0);

    const SolarFlux quiet_sun = integrated_flux(2.8, SolarActivityIndex(70.0));
    CHECK(quiet_sun.integrated_s == quiet_flux(2.8));
    CHECK_FALSE(quiet_sun.quiet_extrapolated);

    const SolarFlux flare = integrated_flux(20.0, kActive, BurstPolicy::upper_bound_flare);
    CHECK(flare.integrated_s == quiet_flux(20.0) + varying_flux(20.0, kActive) + 10000.0);
    CHECK_FALSE(flare.quiet_extrapolated);
}

TEST_CASE("integrated flux is additive and non-negative")
{
    for (double f10 : {70.0, 200.0, 329.0}) {
        for (auto burst : {BurstSetting(BurstPolicy::quiet), BurstSetting(BurstPolicy::upper_bound_flare),
                           BurstSetting::custom(123.0)}) {
            for (double f = 0.1; f < 120.0; f *= 1.3) {
                const SolarFlux s = integrated_flux(f, SolarActivityIndex(f10), burst);
                CHECK(s.integrated_s - (s.quiet_sq + s.varying_sv + s.burst_sb) == 0.0);
                CHECK(s.quiet_sq >= 0.0);
                CHECK(s.varying_sv >= 0.0);
                CHECK(s.burst_sb >= 0.0);
            }
        }
    }
}

TEST_CASE("integrated flux growth with frequency")
{
    auto increasing_on = [](const SolarActivityIndex& idx, int first, int last) {
        double prev = integrated_flux(0.1 * first, idx).integrated_s;
        for (int i = first + 1; i <= last; ++i) {
            const double cur = integrated_flux(0.1 * i, idx).integrated_s;
            if (!(cur > prev))
                return false;
            prev = cur;
        }
        return true;
    };

    // Moderate activity: increasing across the whole 1-100 GHz range.
    CHECK(increasing_on(SolarActivityIndex(150.0), 10, 1000));
    // F10 = 329: the falling varying component outpaces the quiet term
    // between roughly 3.7 and 6 GHz; increasing on either side of that dip.
    CHECK(increasing_on(kActive, 10, 37));
    CHECK(increasing_on(kActive, 61, 1000));
    CHECK_FALSE(increasing_on(kActive, 37, 61));
    CHECK(integrated_flux(100.0, kActive).integrated_s > integrated_flux(1.0, kActive).integrated_s);
}

TEST_CASE("flux curve grid")
{
    const auto rows = flux_curve(1.0, 100.0, 1.0, kActive);
    REQUIRE(rows.size() == 100);
    CHECK(rows.front().frequency_ghz == 1.0);
    CHECK(rows.back().frequency_ghz == 100.0);
    CHECK(rows[59].integrated_s == doctest::Approx(4822.0).epsilon(1e-4));
    const auto peak = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.varying_sv < b.varying_sv;
    });
    CHECK(peak->frequency_ghz == 3.0);

    const auto single = flux_curve(60.0, 60.0, 1.0, kActive);
    REQUIRE(single.size() == 1);
    CHECK(single[0].integrated_s == doctest::Approx(4822.0).epsilon(1e-4));

    CHECK(flux_curve(1.0, 100.0, 0.1, kActive).size() == 991);

    CHECK_THROWS_AS(flux_curve(5.0, 4.0, 1.0, kActive), DomainError);
    CHECK_THROWS_AS(flux_curve(1.0, 4.0, 0.0, kActive), DomainError);
    CHECK_THROWS_AS(flux_curve(0.0, 4.0, 1.0, kActive), DomainError);
}
