#include "solarlink/campaign.hpp"

#include "solarlink/csv.hpp"
#include "solarlink/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <fmt/format.h>

namespace solarlink {

std::string_view to_string(LinkType v)
{
    switch (v) {
    case LinkType::access: return "access";
    case LinkType::backhaul: return "backhaul";
    case LinkType::d2d: return "d2d";
    }
    return "?";
}

std::string_view to_string(Los v)
{
    return v == Los::los ? "LOS" : "NLOS";
}

std::string_view to_string(Weather v)
{
    switch (v) {
    case Weather::sunny: return "sunny";
    case Weather::clear_night: return "clear-night";
    case Weather::day: return "day";
    case Weather::night: return "night";
    case Weather::dusty: return "dusty";
    }
    return "?";
}

std::optional<LinkType> parse_link_type(std::string_view s)
{
    for (auto v : {LinkType::access, LinkType::backhaul, LinkType::d2d})
        if (s == to_string(v))
            return v;
    return std::nullopt;
}

std::optional<Los> parse_los(std::string_view s)
{
    for (auto v : {Los::los, Los::nlos})
        if (s == to_string(v))
            return v;
    return std::nullopt;
}

std::optional<Weather> parse_weather(std::string_view s)
{
    for (auto v : {Weather::sunny, Weather::clear_night, Weather::day, Weather::night, Weather::dusty})
        if (s == to_string(v))
            return v;
    return std::nullopt;
}

void Scenario::validate() const
{
    if (!(tx_height_m > 0.0) || !(rx_height_m > 0.0))
        throw DomainError(fmt::format("scenario '{}': antenna heights must be positive", scenario_id));
    if (!(temp_c >= -40.0 && temp_c <= 60.0))
        throw DomainError(fmt::format("scenario '{}': temperature {} C outside [-40, 60]",
                                      scenario_id, temp_c));
    if (visibility_km && !(*visibility_km >= 0.0))
        throw DomainError(fmt::format("scenario '{}': visibility must be non-negative", scenario_id));
}

namespace {

constexpr std::size_t kColumns = 12;

std::optional<double> parse_double(std::string_view s)
{
    double value = 0.0;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value))
        return std::nullopt;
    return value;
}

double require_double(const std::vector<std::string>& f, std::size_t idx, std::string_view name)
{
    if (auto v = parse_double(f[idx]))
        return *v;
    throw std::invalid_argument(fmt::format("{}: '{}' is not a number", name, f[idx]));
}

bool plausible_timestamp(std::string_view s)
{
    // YYYY-MM-DD prefix, optionally followed by a time part.
    if (s.size() < 10 || s[4] != '-' || s[7] != '-')
        return false;
    for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9})
        if (s[i] < '0' || s[i] > '9')
            return false;
    return s.size() == 10 || s[10] == 'T' || s[10] == ' ';
}

bool same_site(const Scenario& a, const Scenario& b)
{
    return a.link_type == b.link_type && a.environment == b.environment && a.los == b.los &&
           a.tx_height_m == b.tx_height_m && a.rx_height_m == b.rx_height_m &&
           a.weather == b.weather;
}

std::string trim_bom(std::string line)
{
    if (line.rfind("\xEF\xBB\xBF", 0) == 0)
        line.erase(0, 3);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

} // namespace

IngestResult ingest_csv(std::istream& in, const LinkConfig& config)
{
    config.validate();

    std::string line;
    if (!std::getline(in, line))
        throw FormatError("campaign file is empty: missing header");
    if (trim_bom(line) != campaign_csv_header)
        throw FormatError(fmt::format("unexpected header; expected '{}'", campaign_csv_header));

    const double gains = config.tx_power_dbm + config.tx_antenna.gain_dbi + config.rx_antenna.gain_dbi;
    IngestResult result;
    std::map<std::string, std::size_t> index_of;
    std::size_t line_no = 1;
    std::size_t data_rows = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        ++data_rows;
        try {
            const auto f = csv::split_record(line);
            if (f.size() != kColumns)
                throw std::invalid_argument(
                    fmt::format("expected {} fields, got {}", kColumns, f.size()));

            Scenario sc;
            sc.scenario_id = f[0];
            if (sc.scenario_id.empty())
                throw std::invalid_argument("scenario_id is empty");
            auto link = parse_link_type(f[1]);
            if (!link)
                throw std::invalid_argument(fmt::format("link_type: unknown value '{}'", f[1]));
            sc.link_type = *link;
            sc.environment = f[2];
            auto los = parse_los(f[3]);
            if (!los)
                throw std::invalid_argument(fmt::format("los: unknown value '{}'", f[3]));
            sc.los = *los;
            sc.tx_height_m = require_double(f, 4, "tx_height_m");
            sc.rx_height_m = require_double(f, 5, "rx_height_m");
            const double distance = require_double(f, 6, "distance_m");
            const double prec_dbm = require_double(f, 7, "prec_dbm");
            sc.temp_c = require_double(f, 8, "temp_c");
            auto weather = parse_weather(f[9]);
            if (!weather)
                throw std::invalid_argument(fmt::format("weather: unknown value '{}'", f[9]));
            sc.weather = *weather;
            if (!f[10].empty())
                sc.visibility_km = require_double(f, 10, "visibility_km");
            if (!f[11].empty() && !plausible_timestamp(f[11]))
                throw std::invalid_argument(
                    fmt::format("timestamp_utc: '{}' is not ISO-8601", f[11]));
            sc.validate();
            if (distance < config.reference_distance_m)
                throw std::invalid_argument(fmt::format(
                    "distance {} m is below the reference distance {} m", distance,
                    config.reference_distance_m));

            auto [it, inserted] = index_of.try_emplace(sc.scenario_id, result.campaigns.size());
            if (inserted) {
                Campaign c;
                c.scenario = sc;
                c.config = config;
                c.provenance = Provenance::measured();
                result.campaigns.push_back(std::move(c));
            }
            Campaign& campaign = result.campaigns[it->second];
            if (!same_site(campaign.scenario, sc))
                throw std::invalid_argument(fmt::format(
                    "scenario '{}' metadata differs from its first row", sc.scenario_id));
            campaign.samples.push_back({distance, gains - prec_dbm});
            campaign.timestamps.push_back(f[11]);
        } catch (const std::invalid_argument& e) {
            result.row_errors.push_back({line_no, e.what()});
        } catch (const DomainError& e) {
            result.row_errors.push_back({line_no, e.what()});
        } catch (const FormatError& e) {
            result.row_errors.push_back({line_no, e.what()});
        }
    }

    if (result.campaigns.empty()) {
        if (data_rows == 0)
            throw FormatError("no samples");
        std::string detail;
        for (const auto& e : result.row_errors)
            detail += fmt::format("\n  line {}: {}", e.line, e.message);
        throw FormatError(fmt::format("no samples: all {} data rows failed{}", data_rows, detail));
    }
    return result;
}

IngestResult ingest_csv(const std::filesystem::path& path, const LinkConfig& config)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(fmt::format("cannot open '{}'", path.string()));
    return ingest_csv(in, config);
}

void write_campaign_csv(std::ostream& out, std::span<const Campaign> campaigns)
{
    out << campaign_csv_header << '\n';
    for (const auto& c : campaigns) {
        const double gains = c.config.tx_power_dbm + c.config.tx_antenna.gain_dbi +
                             c.config.rx_antenna.gain_dbi;
        const auto& sc = c.scenario;
        for (std::size_t i = 0; i < c.samples.size(); ++i) {
            const auto& s = c.samples[i];
            csv::write_record(out, {
                sc.scenario_id,
                std::string(to_string(sc.link_type)),
                sc.environment,
                std::string(to_string(sc.los)),
                csv::format_number(sc.tx_height_m),
                csv::format_number(sc.rx_height_m),
                csv::format_number(s.distance_m),
                csv::format_number(gains - s.path_loss_db),
                csv::format_number(sc.temp_c),
                std::string(to_string(sc.weather)),
                sc.visibility_km ? csv::format_number(*sc.visibility_km) : std::string(),
                i < c.timestamps.size() ? c.timestamps[i] : std::string(),
            });
        }
    }
}

double GaussianSource::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSource::standard_normal()
{
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    return u * scale;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt)
{
    std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<double> log_uniform_distances(std::size_t count, double d_min_m, double d_max_m,
                                          std::uint64_t seed)
{
    if (!(d_min_m > 0.0) || !(d_max_m >= d_min_m))
        throw DomainError(fmt::format("invalid distance range [{}, {}] m", d_min_m, d_max_m));
    GaussianSource source(seed);
    const double lo = std::log(d_min_m);
    const double span = std::log(d_max_m) - lo;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(std::exp(lo + span * source.uniform()));
    return out;
}

double default_max_distance_m(const Scenario& scenario)
{
    switch (scenario.link_type) {
    case LinkType::backhaul:
        return 90.0;
    case LinkType::access:
        return scenario.environment.find("rare") != std::string::npos ? 110.0 : 80.0;
    case LinkType::d2d:
        return 100.0;
    }
    return 100.0;
}

Campaign generate_campaign(const Scenario& scenario, const LinkConfig& config, double true_ple,
                           double shadow_sigma_db, std::span<const double> distances_m,
                           std::uint64_t seed)
{
    config.validate();
    scenario.validate();
    if (!(true_ple > 0.0))
        throw DomainError(fmt::format("path loss exponent must be positive, got {}", true_ple));
    if (!(shadow_sigma_db >= 0.0) || !std::isfinite(shadow_sigma_db))
        throw DomainError(fmt::format("shadow sigma must be non-negative, got {} dB", shadow_sigma_db));

    LdmFit truth;
    truth.ple_n = true_ple;
    truth.reference_distance_m = config.reference_distance_m;
    truth.reference_loss_db = fspl_db(config.reference_distance_m, config.frequency_ghz);

    Campaign campaign;
    campaign.scenario = scenario;
    campaign.config = config;
    campaign.provenance = Provenance::synthetic(seed);
    campaign.samples.reserve(distances_m.size());

    GaussianSource shadowing(seed);
    for (double d : distances_m) {
        const double mean = ldm_predict(d, truth); // rejects d < d0
        campaign.samples.push_back({d, mean + shadow_sigma_db * shadowing.standard_normal()});
    }
    campaign.timestamps.assign(campaign.samples.size(), std::string());
    return campaign;
}

double apply_solar_inflation(double night_ple, double cumulative_pct)
{
    if (!(night_ple > 0.0))
        throw DomainError(fmt::format("night PLE must be positive, got {}", night_ple));
    return night_ple * (1.0 + cumulative_pct / 100.0);
}

double apply_solar_inflation(double night_ple, const CnrProfile& profile)
{
    if (profile.rows.empty())
        throw DomainError("apply_solar_inflation: CNR profile is empty");
    return apply_solar_inflation(night_ple, profile.rows.back().cumulative_avg_pct);
}

} // namespace solarlink
