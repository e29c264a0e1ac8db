#pragma once

#include "solarlink/link_budget.hpp"
#include "solarlink/pathloss.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace solarlink {

enum class LinkType { access, backhaul, d2d };
enum class Los { los, nlos };
enum class Weather { sunny, clear_night, day, night, dusty };

std::string_view to_string(LinkType v);
std::string_view to_string(Los v);
std::string_view to_string(Weather v);
/// Parsers return nullopt for unknown labels.
std::optional<LinkType> parse_link_type(std::string_view s);
std::optional<Los> parse_los(std::string_view s);
std::optional<Weather> parse_weather(std::string_view s);

struct Scenario {
    std::string scenario_id;
    LinkType link_type = LinkType::access;
    std::string environment;
    Los los = Los::los;
    double tx_height_m = 1.0;
    double rx_height_m = 1.0;
    Weather weather = Weather::sunny;
    double temp_c = 25.0;
    std::optional<double> visibility_km;

    /// Heights positive, temperature within [-40, 60] C.
    void validate() const;
};

struct Provenance {
    enum class Kind { measured, synthetic };
    Kind kind = Kind::measured;
    std::uint64_t seed = 0;

    static Provenance measured() { return {}; }
    static Provenance synthetic(std::uint64_t seed) { return {Kind::synthetic, seed}; }
};

struct Campaign {
    Scenario scenario;
    LinkConfig config;
    std::vector<PathLossSample> samples;
    Provenance provenance;
    /// Measurement timestamps (ISO-8601 or empty), parallel to samples.
    std::vector<std::string> timestamps;
};

/// The exact header line of a campaign file.
inline constexpr std::string_view campaign_csv_header =
    "scenario_id,link_type,environment,los,tx_height_m,rx_height_m,distance_m,prec_dbm,"
    "temp_c,weather,visibility_km,timestamp_utc";

struct RowError {
    std::size_t line;
    std::string message;
};

struct IngestResult {
    std::vector<Campaign> campaigns;
    std::vector<RowError> row_errors;
};

/// Parses a campaign file. Path loss is recovered from received power as
/// PL = P_t + G_t + G_r - P_rec. Rows are grouped by scenario_id in order of
/// first appearance; bad rows are collected in row_errors.
///
/// Throws FormatError for a missing or wrong header, or when no row yields a
/// sample ("no samples").
IngestResult ingest_csv(std::istream& in, const LinkConfig& config);
IngestResult ingest_csv(const std::filesystem::path& path, const LinkConfig& config);

/// Writes campaigns in the schema above (six significant digits).
void write_campaign_csv(std::ostream& out, std::span<const Campaign> campaigns);

/// Seeded normal variates: a std::mt19937_64 seeded with the raw seed, each
/// uniform taken from the top 53 bits of one engine output, turned into
/// normals by Marsaglia's polar method (the second variate of each pair is
/// cached). The mapping is fixed so a seed regenerates the same stream on any
/// platform with IEEE doubles and a conforming libm.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double standard_normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Derives an independent sub-stream seed (SplitMix64 finaliser of seed + salt).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

/// count distances, log-uniform on [d_min, d_max].
std::vector<double> log_uniform_distances(std::size_t count, double d_min_m, double d_max_m,
                                          std::uint64_t seed);

/// Default measurement span for a scenario type: backhaul 90 m, access
/// 110 m in sparse vegetation and 80 m otherwise, D2D 100 m.
double default_max_distance_m(const Scenario& scenario);

/// PL_i = FSPL(d0) + 10 n log10(d_i / d0) + g_i, g_i ~ N(0, sigma^2) drawn
/// from GaussianSource(seed).
Campaign generate_campaign(const Scenario& scenario, const LinkConfig& config, double true_ple,
                           double shadow_sigma_db, std::span<const double> distances_m,
                           std::uint64_t seed);

/// day PLE = night PLE * (1 + p / 100), with p the final cumulative average
/// CNR degradation of the profile.
double apply_solar_inflation(double night_ple, const CnrProfile& profile);
double apply_solar_inflation(double night_ple, double cumulative_pct);

} // namespace solarlink
