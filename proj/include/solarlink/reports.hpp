#pragma once

#include "solarlink/campaign.hpp"
#include "solarlink/fixture.hpp"
#include "solarlink/link_budget.hpp"
#include "solarlink/solar_flux.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace solarlink {

/// Flat tool configuration. Defaults describe the 60 GHz measurement setup:
/// 10 dBm, 24/24 dBi horns with 7.3 deg HPBW, d0 = 1 m, 42 C, F10 = 329 SFU,
/// no burst, single-tone bandwidth.
struct ToolConfig {
    double frequency_ghz = 60.0;
    double tx_power_dbm = 10.0;
    double tx_gain_dbi = 24.0;
    double rx_gain_dbi = 24.0;
    double hpbw_deg = 7.3;
    double d0_m = 1.0;
    double temperature_c = 42.0;
    double f10_sfu = 329.0;
    BurstSetting burst_policy{};
    double bandwidth_hz = 1.0;
    std::filesystem::path output_dir = ".";

    /// Throws ConfigError naming every invalid key.
    void validate() const;
    LinkConfig link_config() const;
    SolarActivityIndex activity() const;
};

/// Keys accepted in a config file (and as --kebab-case overrides).
std::span<const std::string_view> tool_config_keys();

/// Applies a flat JSON object on top of `base`. Unknown keys, wrong types and
/// invalid values raise ConfigError.
ToolConfig parse_tool_config(std::string_view json_text, ToolConfig base = {});
ToolConfig load_tool_config(const std::filesystem::path& path, ToolConfig base = {});

/// Parses "quiet", "upper-bound-flare" or a number of SFU (clamped override).
BurstSetting parse_burst_policy(std::string_view text);
std::string burst_policy_label(const BurstSetting& burst);

struct ReportTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footnotes;

    /// Column-aligned UTF-8 text, footnotes numbered below the table.
    std::string render() const;
};

/// Footnotes for the approximation flags that apply to a configuration.
std::vector<std::string> approximation_notes(const ToolConfig& config);

struct SeriesOutput {
    std::filesystem::path path;
    std::string summary;
    std::vector<std::string> notes;
};

/// Writes frequency_ghz,sq_sfu,sv_sfu,sb_sfu,s_sfu.
SeriesOutput cmd_flux(const ToolConfig& config, double f_min_ghz, double f_max_ghz,
                      double step_ghz, const std::filesystem::path& out);

/// Writes aet_db_m2_per_k followed by one dcnr_db_<f>ghz column per frequency.
SeriesOutput cmd_dcnr(const ToolConfig& config, double aet_min_db, double aet_max_db,
                      double step_db, std::span<const double> frequencies_ghz,
                      const std::filesystem::path& out);

inline constexpr double table_one_distances_m[] = {1.0, 10.0, 20.0, 50.0, 100.0};

struct BudgetOutput {
    CnrProfile profile;
    ReportTable table;
};

BudgetOutput cmd_budget(const ToolConfig& config, double ple,
                        std::span<const double> distances_m);

enum class FitModel { ldm, fim, both };
std::optional<FitModel> parse_fit_model(std::string_view s);

struct ScenarioFit {
    Scenario scenario;
    std::optional<LdmFit> ldm;
    std::optional<FimFit> fim;
};

struct FitOutput {
    ReportTable table;
    std::vector<ScenarioFit> fits;
    /// Row-level ingestion problems and per-scenario fit failures.
    std::vector<std::string> errors;
};

/// Fits every scenario of a campaign file. Throws FitError when no scenario
/// could be fitted. Writes scenario_id,model,distance_m,measured_db,fitted_db
/// to `residuals_out` when given.
FitOutput cmd_fit(const ToolConfig& config, const std::filesystem::path& csv_path,
                  FitModel model, const std::optional<std::filesystem::path>& residuals_out);

struct SimulateParams {
    std::string scenario_id = "sim";
    LinkType link_type = LinkType::access;
    std::string environment = "synthetic";
    Los los = Los::los;
    double tx_height_m = 14.0;
    double rx_height_m = 2.0;
    double ple = 2.0;
    double sigma_db = 0.0;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    bool solar = false;
    /// Defaults to config temperature when solar is on, 20 C otherwise.
    std::optional<double> temp_c;
    /// Defaults to default_max_distance_m for the scenario.
    std::optional<double> d_max_m;
};

struct SimulateOutput {
    std::filesystem::path path;
    double generating_ple = 0.0;
    Campaign campaign;
};

/// Generates a schema-conformant campaign file. With solar on, the generating
/// PLE is the night PLE inflated by the default CNR-degradation profile.
SimulateOutput cmd_simulate(const ToolConfig& config, const SimulateParams& params,
                            const std::filesystem::path& out);

struct ScenarioComparison {
    std::string scenario_id;
    Los los;
    LdmFit day;
    LdmFit night;
    double pct_increase;
};

struct ReportOutput {
    ReportTable table;
    std::vector<ScenarioComparison> comparisons;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
};

/// Day/night PLE comparison of two campaign files, matched by scenario_id.
ReportOutput cmd_report(const ToolConfig& config, const std::filesystem::path& day_csv,
                        const std::filesystem::path& night_csv);

struct FixtureComparison {
    const FixtureRow* day;
    const FixtureRow* night;
    double recomputed_pct;
};

struct FixtureReport {
    ReportTable table;
    std::vector<FixtureComparison> comparisons;
};

/// Re-derives every printed percentage of the embedded reference table.
FixtureReport cmd_report_fixture();

} // namespace solarlink
