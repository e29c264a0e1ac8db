#include "solarlink/reports.hpp"

#include "solarlink/csv.hpp"
#include "solarlink/errors.hpp"
#include "solarlink/pathloss.hpp"
#include "solarlink/units.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <fmt/format.h>

namespace solarlink {

namespace {

constexpr std::array<std::string_view, 11> kConfigKeys = {
    "frequency_ghz", "tx_power_dbm", "tx_gain_dbi",  "rx_gain_dbi", "hpbw_deg",    "d0_m",
    "temperature_c", "f10_sfu",      "burst_policy", "bandwidth_hz", "output_dir",
};

constexpr const char* kInflationNote =
    "Day/night PLE gaps are read as equal to the cumulative % CNR degradation; this "
    "correspondence is asserted, not derived.";

std::size_t display_width(std::string_view s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::ofstream open_output(const std::filesystem::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec)
            throw IoError(fmt::format("cannot create directory '{}': {}",
                                      path.parent_path().string(), ec.message()));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out)
        throw IoError(fmt::format("write to '{}' failed", path.string()));
}

std::string fixed(double v, int decimals)
{
    // Avoid printing "-0.0" for values that round to zero.
    const double scale = std::pow(10.0, decimals);
    if (std::round(std::abs(v) * scale) == 0.0)
        v = 0.0;
    return fmt::format("{:.{}f}", v, decimals);
}

} // namespace

// ---------------------------------------------------------------- ToolConfig

std::span<const std::string_view> tool_config_keys()
{
    return kConfigKeys;
}

void ToolConfig::validate() const
{
    std::vector<std::string> problems;
    auto check = [&problems](bool ok, std::string_view key, std::string what) {
        if (!ok)
            problems.push_back(fmt::format("{}: {}", key, what));
    };
    check(frequency_ghz > 0.0 && std::isfinite(frequency_ghz), "frequency_ghz",
          fmt::format("must be positive, got {}", frequency_ghz));
    check(std::isfinite(tx_power_dbm), "tx_power_dbm", "must be finite");
    check(std::isfinite(tx_gain_dbi), "tx_gain_dbi", "must be finite");
    check(std::isfinite(rx_gain_dbi), "rx_gain_dbi", "must be finite");
    check(hpbw_deg > 0.0 && std::isfinite(hpbw_deg), "hpbw_deg",
          fmt::format("must be positive, got {}", hpbw_deg));
    check(d0_m > 0.0 && std::isfinite(d0_m), "d0_m", fmt::format("must be positive, got {}", d0_m));
    check(temperature_c > constants::absolute_zero_c && std::isfinite(temperature_c),
          "temperature_c", fmt::format("must be above absolute zero, got {}", temperature_c));
    check(f10_sfu >= SolarActivityIndex::quiet_floor_sfu &&
              f10_sfu <= SolarActivityIndex::upper_bound_sfu,
          "f10_sfu", fmt::format("must lie in [70, 500] SFU, got {}", f10_sfu));
    check(bandwidth_hz >= 1.0 && std::isfinite(bandwidth_hz), "bandwidth_hz",
          fmt::format("must be >= 1 Hz, got {}", bandwidth_hz));
    if (!problems.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems)
            msg += "\n  " + p;
        throw ConfigError(msg);
    }
}

LinkConfig ToolConfig::link_config() const
{
    validate();
    LinkConfig link;
    link.frequency_ghz = frequency_ghz;
    link.tx_power_dbm = tx_power_dbm;
    link.tx_antenna = {tx_gain_dbi, hpbw_deg};
    link.rx_antenna = {rx_gain_dbi, hpbw_deg};
    link.system_temp_k = kelvin_from_celsius(temperature_c);
    link.bandwidth_hz = bandwidth_hz;
    link.reference_distance_m = d0_m;
    return link;
}

SolarActivityIndex ToolConfig::activity() const
{
    validate();
    return SolarActivityIndex(f10_sfu);
}

BurstSetting parse_burst_policy(std::string_view text)
{
    if (text == "quiet")
        return BurstPolicy::quiet;
    if (text == "upper-bound-flare")
        return BurstPolicy::upper_bound_flare;
    double sfu = 0.0;
    std::istringstream in{std::string(text)};
    if (in >> sfu && in.peek() == std::char_traits<char>::eof())
        return BurstSetting::custom(sfu);
    throw ConfigError(fmt::format(
        "burst_policy: expected 'quiet', 'upper-bound-flare' or a number of SFU, got '{}'", text));
}

std::string burst_policy_label(const BurstSetting& burst)
{
    if (burst.is_custom())
        return fmt::format("{} SFU", burst.sfu());
    return burst.policy() == BurstPolicy::quiet ? "quiet" : "upper-bound-flare";
}

ToolConfig parse_tool_config(std::string_view json_text, ToolConfig base)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
    }
    if (!doc.is_object())
        throw ConfigError("config must be a flat JSON object");

    std::vector<std::string> problems;
    auto number = [&](const std::string& key, const nlohmann::json& v, double& slot) {
        if (!v.is_number())
            problems.push_back(fmt::format("{}: expected a number", key));
        else
            slot = v.get<double>();
    };

    for (const auto& [key, value] : doc.items()) {
        if (key == "frequency_ghz") number(key, value, base.frequency_ghz);
        else if (key == "tx_power_dbm") number(key, value, base.tx_power_dbm);
        else if (key == "tx_gain_dbi") number(key, value, base.tx_gain_dbi);
        else if (key == "rx_gain_dbi") number(key, value, base.rx_gain_dbi);
        else if (key == "hpbw_deg") number(key, value, base.hpbw_deg);
        else if (key == "d0_m") number(key, value, base.d0_m);
        else if (key == "temperature_c") number(key, value, base.temperature_c);
        else if (key == "f10_sfu") number(key, value, base.f10_sfu);
        else if (key == "bandwidth_hz") number(key, value, base.bandwidth_hz);
        else if (key == "burst_policy") {
            try {
                if (value.is_number())
                    base.burst_policy = BurstSetting::custom(value.get<double>());
                else if (value.is_string())
                    base.burst_policy = parse_burst_policy(value.get<std::string>());
                else
                    problems.push_back("burst_policy: expected a string or a number");
            } catch (const std::exception& e) {
                problems.push_back(e.what());
            }
        } else if (key == "output_dir") {
            if (!value.is_string())
                problems.push_back("output_dir: expected a string");
            else
                base.output_dir = value.get<std::string>();
        } else {
            problems.push_back(fmt::format("{}: unknown key", key));
        }
    }
    if (!problems.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems)
            msg += "\n  " + p;
        throw ConfigError(msg);
    }
    base.validate();
    return base;
}

ToolConfig load_tool_config(const std::filesystem::path& path, ToolConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(fmt::format("cannot open config '{}'", path.string()));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_tool_config(buffer.str(), std::move(base));
}

// --------------------------------------------------------------- ReportTable

std::string ReportTable::render() const
{
    std::vector<std::size_t> widths(columns.size(), 0);
    for (std::size_t c = 0; c < columns.size(); ++c)
        widths[c] = display_width(columns[c]);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], display_width(row[c]));

    auto is_text = [](const std::string& cell) {
        return !cell.empty() && std::isalpha(static_cast<unsigned char>(cell[0]));
    };
    // Headers follow the alignment of the first row beneath them.
    std::vector<bool> text_column(columns.size(), true);
    if (!rows.empty())
        for (std::size_t c = 0; c < columns.size() && c < rows.front().size(); ++c)
            text_column[c] = rows.front()[c].empty() || is_text(rows.front()[c]);

    auto line = [&](const std::vector<std::string>& cells, bool header) {
        std::string out;
        for (std::size_t c = 0; c < widths.size(); ++c) {
            const std::string cell = c < cells.size() ? cells[c] : std::string();
            if (c)
                out += "  ";
            const std::string pad(widths[c] - display_width(cell), ' ');
            // Text left, numbers right.
            const bool text = header ? text_column[c] : is_text(cell);
            out += text ? cell + pad : pad + cell;
        }
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        out += '\n';
        return out;
    };

    std::string out = title + "\n";
    out += line(columns, true);
    std::size_t total = 0;
    for (auto w : widths)
        total += w;
    out += std::string(total + 2 * (widths.empty() ? 0 : widths.size() - 1), '-') + "\n";
    for (const auto& row : rows)
        out += line(row, false);
    for (std::size_t i = 0; i < footnotes.size(); ++i)
        out += fmt::format("[{}] {}\n", i + 1, footnotes[i]);
    return out;
}

std::vector<std::string> approximation_notes(const ToolConfig& config)
{
    std::vector<std::string> notes;
    if (config.frequency_ghz > quiet_fit_max_ghz)
        notes.push_back(fmt::format(
            "Quiet-sun flux extrapolated above {} GHz (fit validated 1-20 GHz); values lean high.",
            quiet_fit_max_ghz));
    if (config.hpbw_deg > constants::solar_disc_diameter_deg)
        notes.push_back(fmt::format(
            "Wide-beam approximation: HPBW {} deg exceeds the {} deg solar disc; dCNR formula "
            "applied regardless.",
            config.hpbw_deg, constants::solar_disc_diameter_deg));
    return notes;
}

// ------------------------------------------------------------------ commands

SeriesOutput cmd_flux(const ToolConfig& config, double f_min_ghz, double f_max_ghz,
                      double step_ghz, const std::filesystem::path& out)
{
    const auto rows = flux_curve(f_min_ghz, f_max_ghz, step_ghz, config.activity(),
                                 config.burst_policy);

    auto file = open_output(out);
    csv::write_record(file, {"frequency_ghz", "sq_sfu", "sv_sfu", "sb_sfu", "s_sfu"});
    for (const auto& r : rows)
        csv::write_record(file, {csv::format_number(r.frequency_ghz), csv::format_number(r.quiet_sq),
                                 csv::format_number(r.varying_sv), csv::format_number(r.burst_sb),
                                 csv::format_number(r.integrated_s)});
    finish_output(file, out);

    const auto peak = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.varying_sv < b.varying_sv;
    });
    SeriesOutput result;
    result.path = out;
    result.summary = fmt::format(
        "flux: {} rows, {}-{} GHz, F10 = {} SFU, burst {}; S({} GHz) = {:.1f} SFU; "
        "S_v peaks at {} GHz ({:.1f} SFU)",
        rows.size(), rows.front().frequency_ghz, rows.back().frequency_ghz, config.f10_sfu,
        burst_policy_label(config.burst_policy), rows.back().frequency_ghz,
        rows.back().integrated_s, peak->frequency_ghz, peak->varying_sv);
    if (rows.back().quiet_extrapolated)
        result.notes.push_back(fmt::format(
            "Quiet-sun flux extrapolated above {} GHz (fit validated 1-20 GHz); values lean high.",
            quiet_fit_max_ghz));
    return result;
}

SeriesOutput cmd_dcnr(const ToolConfig& config, double aet_min_db, double aet_max_db,
                      double step_db, std::span<const double> frequencies_ghz,
                      const std::filesystem::path& out)
{
    const auto series = dcnr_curve(frequencies_ghz, aet_min_db, aet_max_db, step_db,
                                   config.activity(), config.rx_gain_dbi, config.burst_policy);

    auto file = open_output(out);
    std::vector<std::string> header{"aet_db_m2_per_k"};
    for (double f : series.frequencies_ghz)
        header.push_back(fmt::format("dcnr_db_{}ghz", csv::format_number(f)));
    csv::write_record(file, header);
    for (std::size_t j = 0; j < series.aet_db.size(); ++j) {
        std::vector<std::string> row{csv::format_number(series.aet_db[j])};
        for (const auto& column : series.dcnr_db)
            row.push_back(csv::format_number(column[j]));
        csv::write_record(file, row);
    }
    finish_output(file, out);

    SeriesOutput result;
    result.path = out;
    result.summary = fmt::format("dcnr: {} frequencies x {} A_e/T points ({} to {} dB m^2/K), "
                                 "rx gain {} dBi",
                                 series.frequencies_ghz.size(), series.aet_db.size(),
                                 series.aet_db.front(), series.aet_db.back(), config.rx_gain_dbi);
    if (series.quiet_extrapolated)
        result.notes.push_back(fmt::format(
            "Quiet-sun flux extrapolated above {} GHz (fit validated 1-20 GHz); values lean high.",
            quiet_fit_max_ghz));
    return result;
}

BudgetOutput cmd_budget(const ToolConfig& config, double ple, std::span<const double> distances_m)
{
    const LinkConfig link = config.link_config();
    const SolarFlux flux =
        integrated_flux(config.frequency_ghz, config.activity(), config.burst_policy);

    BudgetOutput out;
    out.profile = degradation_profile(link, ple, distances_m, flux);

    auto& t = out.table;
    t.title = fmt::format(
        "Analytical % CNR degradation due to solar radio emissions: {} GHz, P_t = {} dBm, "
        "{}/{} dBi, {} C, PLE = {}, A_e/T = {:.1f} dB m^2/K, dCNR = {:.1f} dB",
        config.frequency_ghz, config.tx_power_dbm, config.tx_gain_dbi, config.rx_gain_dbi,
        config.temperature_c, ple,
        db_from_linear(link.rx_antenna.aperture_m2(link.frequency_ghz) / link.system_temp_k),
        out.profile.delta_cnr_db);
    t.columns = {"d [m]", "P_rec [dBW]", "CNR [dB]", "CNR degradation [%]",
                 "Cumulative average [%]"};
    for (const auto& r : out.profile.rows)
        t.rows.push_back({csv::format_number(r.distance_m), fixed(r.prec_dbw, 1),
                          fixed(r.cnr_db, 1), fixed(r.pct_degradation, 2),
                          fixed(r.cumulative_avg_pct, 1)});
    t.footnotes = approximation_notes(config);
    t.footnotes.push_back(fmt::format(
        "Received power in dBW; CNR against k T B with T = {} K, B = {} Hz; no shadowing.",
        link.system_temp_k, link.bandwidth_hz));
    return out;
}

std::optional<FitModel> parse_fit_model(std::string_view s)
{
    if (s == "ldm") return FitModel::ldm;
    if (s == "fim") return FitModel::fim;
    if (s == "both") return FitModel::both;
    return std::nullopt;
}

FitOutput cmd_fit(const ToolConfig& config, const std::filesystem::path& csv_path, FitModel model,
                  const std::optional<std::filesystem::path>& residuals_out)
{
    const LinkConfig link = config.link_config();
    const auto ingested = ingest_csv(csv_path, link);

    FitOutput out;
    for (const auto& e : ingested.row_errors)
        out.errors.push_back(fmt::format("{}:{}: {}", csv_path.string(), e.line, e.message));

    const bool want_ldm = model != FitModel::fim;
    const bool want_fim = model != FitModel::ldm;
    for (const auto& campaign : ingested.campaigns) {
        ScenarioFit fit{campaign.scenario, std::nullopt, std::nullopt};
        try {
            if (want_ldm)
                fit.ldm = fit_ldm_friis(campaign.samples, link.frequency_ghz,
                                        link.reference_distance_m);
            if (want_fim)
                fit.fim = fit_fim(campaign.samples);
        } catch (const FitError& e) {
            out.errors.push_back(
                fmt::format("scenario '{}': {}", campaign.scenario.scenario_id, e.what()));
            continue;
        }
        out.fits.push_back(std::move(fit));
    }
    if (out.fits.empty()) {
        std::string msg = "no scenario could be fitted";
        for (const auto& e : out.errors)
            msg += "\n  " + e;
        throw FitError(msg);
    }

    auto& t = out.table;
    t.title = fmt::format("Path loss model fits: {} (d0 = {} m, PL(d0) anchored to free space at "
                          "{} GHz)",
                          csv_path.filename().string(), link.reference_distance_m,
                          link.frequency_ghz);
    t.columns = {"scenario", "LOS", "model", "n", "PL(d0) [dB]", "alpha [dB]", "beta",
                 "sigma [dB]", "samples"};
    for (const auto& f : out.fits) {
        const std::string id = f.scenario.scenario_id;
        const std::string los(to_string(f.scenario.los));
        if (f.ldm)
            t.rows.push_back({id, los, "LDM", fixed(f.ldm->ple_n, 3),
                              fixed(f.ldm->reference_loss_db, 2), "", "",
                              fixed(f.ldm->shadow_sigma_db, 2),
                              std::to_string(f.ldm->sample_count)});
        if (f.fim)
            t.rows.push_back({id, los, "FIM", "", "", fixed(f.fim->alpha_db, 2),
                              fixed(f.fim->beta_slope, 3), fixed(f.fim->shadow_sigma_db, 2),
                              std::to_string(f.fim->sample_count)});
    }
    t.footnotes.push_back("sigma is the RMS of residuals about the fitted line (divide by N).");

    if (residuals_out) {
        auto file = open_output(*residuals_out);
        csv::write_record(file, {"scenario_id", "model", "distance_m", "measured_db", "fitted_db"});
        for (const auto& f : out.fits) {
            const auto& campaign = *std::find_if(
                ingested.campaigns.begin(), ingested.campaigns.end(),
                [&](const Campaign& c) { return c.scenario.scenario_id == f.scenario.scenario_id; });
            for (const auto& s : campaign.samples) {
                if (f.ldm)
                    csv::write_record(file, {f.scenario.scenario_id, "ldm",
                                             csv::format_number(s.distance_m),
                                             csv::format_number(s.path_loss_db),
                                             csv::format_number(ldm_predict(s.distance_m, *f.ldm))});
                if (f.fim)
                    csv::write_record(file, {f.scenario.scenario_id, "fim",
                                             csv::format_number(s.distance_m),
                                             csv::format_number(s.path_loss_db),
                                             csv::format_number(fim_predict(s.distance_m, *f.fim))});
            }
        }
        finish_output(file, *residuals_out);
    }
    return out;
}

SimulateOutput cmd_simulate(const ToolConfig& config, const SimulateParams& params,
                            const std::filesystem::path& out)
{
    const LinkConfig link = config.link_config();
    if (params.count == 0)
        throw DomainError("simulate: sample count must be positive");
    if (!(params.sigma_db >= 0.0))
        throw DomainError(fmt::format("simulate: sigma must be non-negative, got {} dB",
                                      params.sigma_db));
    if (!(params.ple > 0.0))
        throw DomainError(fmt::format("simulate: PLE must be positive, got {}", params.ple));

    Scenario scenario;
    scenario.scenario_id = params.scenario_id;
    scenario.link_type = params.link_type;
    scenario.environment = params.environment;
    scenario.los = params.los;
    scenario.tx_height_m = params.tx_height_m;
    scenario.rx_height_m = params.rx_height_m;
    scenario.weather = params.solar ? Weather::sunny : Weather::clear_night;
    scenario.temp_c = params.temp_c.value_or(params.solar ? config.temperature_c : 20.0);
    scenario.validate();

    SimulateOutput result;
    result.generating_ple = params.ple;
    if (params.solar) {
        // Inflation uses the analytical profile of the configured link at PLE 2
        // over the standard 1-100 m distance set.
        const SolarFlux flux =
            integrated_flux(config.frequency_ghz, config.activity(), config.burst_policy);
        const CnrProfile profile = degradation_profile(link, 2.0, table_one_distances_m, flux);
        result.generating_ple = apply_solar_inflation(params.ple, profile);
    }

    const double d_max = params.d_max_m.value_or(default_max_distance_m(scenario));
    if (!(d_max >= link.reference_distance_m))
        throw DomainError(fmt::format("simulate: maximum distance {} m is below d0 = {} m", d_max,
                                      link.reference_distance_m));
    const auto distances = log_uniform_distances(params.count, link.reference_distance_m, d_max,
                                                 derive_seed(params.seed, 1));
    result.campaign = generate_campaign(scenario, link, result.generating_ple, params.sigma_db,
                                        distances, params.seed);

    auto file = open_output(out);
    write_campaign_csv(file, std::span(&result.campaign, 1));
    finish_output(file, out);
    result.path = out;
    return result;
}

ReportOutput cmd_report(const ToolConfig& config, const std::filesystem::path& day_csv,
                        const std::filesystem::path& night_csv)
{
    const LinkConfig link = config.link_config();
    const auto day = ingest_csv(day_csv, link);
    const auto night = ingest_csv(night_csv, link);

    ReportOutput out;
    for (const auto& e : day.row_errors)
        out.errors.push_back(fmt::format("{}:{}: {}", day_csv.string(), e.line, e.message));
    for (const auto& e : night.row_errors)
        out.errors.push_back(fmt::format("{}:{}: {}", night_csv.string(), e.line, e.message));

    std::map<std::string, const Campaign*> night_by_id;
    for (const auto& c : night.campaigns)
        night_by_id.emplace(c.scenario.scenario_id, &c);

    auto fit = [&](const Campaign& c) {
        return fit_ldm_friis(c.samples, link.frequency_ghz, link.reference_distance_m);
    };

    for (const auto& d : day.campaigns) {
        const auto it = night_by_id.find(d.scenario.scenario_id);
        if (it == night_by_id.end()) {
            out.warnings.push_back(fmt::format("scenario '{}' has no night-time counterpart",
                                               d.scenario.scenario_id));
            continue;
        }
        const Campaign& n = *it->second;
        night_by_id.erase(it);
        if (n.scenario.los != d.scenario.los)
            out.warnings.push_back(fmt::format("scenario '{}': LOS condition differs between files",
                                               d.scenario.scenario_id));
        try {
            ScenarioComparison cmp{d.scenario.scenario_id, d.scenario.los, fit(d), fit(n), 0.0};
            cmp.pct_increase = ple_increase_percent(cmp.day.ple_n, cmp.night.ple_n);
            out.comparisons.push_back(cmp);
        } catch (const std::exception& e) {
            out.errors.push_back(fmt::format("scenario '{}': {}", d.scenario.scenario_id, e.what()));
        }
    }
    for (const auto& [id, c] : night_by_id)
        out.warnings.push_back(fmt::format("scenario '{}' has no day-time counterpart", id));

    auto& t = out.table;
    t.title = fmt::format("Percent increase in PLE, day ({}) vs night ({}), d0 = {} m, {} GHz",
                          day_csv.filename().string(), night_csv.filename().string(),
                          link.reference_distance_m, link.frequency_ghz);
    t.columns = {"scenario", "LOS", "day PLE", "day sigma [dB]", "night PLE", "night sigma [dB]",
                 "% PLE increase"};
    for (const auto& c : out.comparisons)
        t.rows.push_back({c.scenario_id, std::string(to_string(c.los)), fixed(c.day.ple_n, 3),
                          fixed(c.day.shadow_sigma_db, 2), fixed(c.night.ple_n, 3),
                          fixed(c.night.shadow_sigma_db, 2), fixed(c.pct_increase, 1)});
    t.footnotes = approximation_notes(config);
    t.footnotes.push_back(kInflationNote);
    for (const auto& w : out.warnings)
        t.footnotes.push_back("Warning: " + w);
    return out;
}

FixtureReport cmd_report_fixture()
{
    const auto& fx = load_fixture();
    FixtureReport out;
    auto& t = out.table;
    t.title = "Percent increase in PLE in extreme sunny weather (embedded 60 GHz reference, "
              "d0 = 1 m)";
    t.columns = {"scenario",  "LOS",          "day",       "day PLE",    "day sigma [dB]",
                 "night",     "night PLE",    "night sigma [dB]", "printed %", "recomputed %"};

    std::size_t ambiguous_note = 0;
    for (const auto& p : fx.pairs()) {
        const double pct = ple_increase_percent(p.day.ple, p.night.ple);
        out.comparisons.push_back({&p.day, &p.night, pct});
        std::string block = p.day.block;
        if (p.day.pairing_note) {
            if (!ambiguous_note) {
                t.footnotes.push_back("Backhaul 41 C row: " + *p.day.pairing_note + ".");
                ambiguous_note = t.footnotes.size();
            }
            block += fmt::format(" [{}]", ambiguous_note);
        }
        t.rows.push_back({block, std::string(to_string(p.day.los)), p.day.weather_label,
                          fixed(p.day.ple, 3), fixed(p.day.sigma_db, 2), p.night.weather_label,
                          fixed(p.night.ple, 3), fixed(p.night.sigma_db, 2),
                          fixed(*p.day.pct_increase, 1), fixed(pct, 1)});
    }
    t.footnotes.push_back("Measurement setup: 60 GHz, 24/24 dBi horns, 7.3 deg HPBW, 10 dBm, "
                          "d0 = 1 m.");
    t.footnotes.push_back(kInflationNote);
    return out;
}

} // namespace solarlink
