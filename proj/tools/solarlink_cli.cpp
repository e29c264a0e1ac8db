// solarlink: solar-noise link budgets and path loss model fitting at mmWave.
//
//   solarlink <subcommand> [--config path] [overrides] [subcommand args]
//
// Exit status: 0 success, 1 usage or validation error, 2 IO or data error.

#include "solarlink/errors.hpp"
#include "solarlink/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace solarlink;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Overrides {
    std::optional<std::string> config_path;
    std::optional<double> frequency_ghz;
    std::optional<double> tx_power_dbm;
    std::optional<double> tx_gain_dbi;
    std::optional<double> rx_gain_dbi;
    std::optional<double> hpbw_deg;
    std::optional<double> d0_m;
    std::optional<double> temperature_c;
    std::optional<double> f10_sfu;
    std::optional<std::string> burst_policy;
    std::optional<double> bandwidth_hz;
    std::optional<std::string> output_dir;

    ToolConfig resolve() const
    {
        ToolConfig config;
        if (config_path)
            config = load_tool_config(*config_path);
        auto apply = [](const std::optional<double>& v, double& slot) {
            if (v)
                slot = *v;
        };
        apply(frequency_ghz, config.frequency_ghz);
        apply(tx_power_dbm, config.tx_power_dbm);
        apply(tx_gain_dbi, config.tx_gain_dbi);
        apply(rx_gain_dbi, config.rx_gain_dbi);
        apply(hpbw_deg, config.hpbw_deg);
        apply(d0_m, config.d0_m);
        apply(temperature_c, config.temperature_c);
        apply(f10_sfu, config.f10_sfu);
        apply(bandwidth_hz, config.bandwidth_hz);
        if (burst_policy)
            config.burst_policy = parse_burst_policy(*burst_policy);
        if (output_dir)
            config.output_dir = *output_dir;
        config.validate();
        return config;
    }
};

std::vector<double> parse_number_list(const std::string& text, const char* what)
{
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError(std::string(what) + ": '" + item + "' is not a number");
        }
    }
    return values;
}

void print_notes(const std::vector<std::string>& notes)
{
    for (std::size_t i = 0; i < notes.size(); ++i)
        std::cout << "[" << i + 1 << "] " << notes[i] << '\n';
}

int report_errors(const std::vector<std::string>& errors)
{
    for (const auto& e : errors)
        std::cerr << "error: " << e << '\n';
    return errors.empty() ? 0 : kExitData;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write '" + path.string() + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solar radio noise link budgets and path loss model fitting for mmWave links"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides ov;
    app.add_option("--config", ov.config_path, "Flat JSON config file");
    app.add_option("--frequency-ghz", ov.frequency_ghz, "Carrier frequency [GHz]");
    app.add_option("--tx-power-dbm", ov.tx_power_dbm, "Transmit power [dBm]");
    app.add_option("--tx-gain-dbi", ov.tx_gain_dbi, "TX antenna gain [dBi]");
    app.add_option("--rx-gain-dbi", ov.rx_gain_dbi, "RX antenna gain [dBi]");
    app.add_option("--hpbw-deg", ov.hpbw_deg, "Antenna half-power beamwidth [deg]");
    app.add_option("--d0-m", ov.d0_m, "Reference distance [m]");
    app.add_option("--temperature-c", ov.temperature_c, "System temperature [C]");
    app.add_option("--f10-sfu", ov.f10_sfu, "F10.7 solar activity index [SFU]");
    app.add_option("--burst-policy", ov.burst_policy,
                   "quiet | upper-bound-flare | burst flux in SFU");
    app.add_option("--bandwidth-hz", ov.bandwidth_hz, "Noise bandwidth [Hz]");
    app.add_option("--output-dir", ov.output_dir, "Directory for default output files");

    // flux
    auto* flux = app.add_subcommand("flux", "Solar flux components versus frequency (CSV)");
    double f_min = 1.0, f_max = 100.0, f_step = 1.0;
    std::optional<std::string> flux_out;
    flux->add_option("--f-min", f_min, "Lowest frequency [GHz]")->capture_default_str();
    flux->add_option("--f-max", f_max, "Highest frequency [GHz]")->capture_default_str();
    flux->add_option("--step", f_step, "Frequency step [GHz]")->capture_default_str();
    flux->add_option("--out", flux_out, "Output CSV (default <output-dir>/flux.csv)");

    // dcnr
    auto* dcnr = app.add_subcommand("dcnr", "CNR decrease versus A_e/T per frequency (CSV)");
    double aet_min = -80.0, aet_max = -30.0, aet_step = 1.0;
    std::string dcnr_freqs = "10,20,30,40,50,60";
    std::optional<std::string> dcnr_out;
    dcnr->add_option("--aet-min", aet_min, "Lowest A_e/T [dB m^2/K]")->capture_default_str();
    dcnr->add_option("--aet-max", aet_max, "Highest A_e/T [dB m^2/K]")->capture_default_str();
    dcnr->add_option("--step", aet_step, "A_e/T step [dB]")->capture_default_str();
    dcnr->add_option("--frequencies", dcnr_freqs, "Comma-separated carrier frequencies [GHz]")
        ->capture_default_str();
    dcnr->add_option("--out", dcnr_out, "Output CSV (default <output-dir>/dcnr.csv)");

    // budget
    auto* budget = app.add_subcommand("budget", "Distance-resolved CNR degradation table");
    double budget_ple = 2.0;
    std::string budget_distances = "1,10,20,50,100";
    std::optional<std::string> budget_out;
    budget->add_option("--ple", budget_ple, "Path loss exponent")->capture_default_str();
    budget->add_option("--distances", budget_distances, "Comma-separated distances [m]")
        ->capture_default_str();
    budget->add_option("--out", budget_out, "Also write the table to this file");

    // fit
    auto* fit = app.add_subcommand("fit", "Fit LDM/FIM path loss models to a campaign CSV");
    std::string fit_csv;
    std::string fit_model = "both";
    std::optional<std::string> fit_residuals;
    fit->add_option("csv", fit_csv, "Campaign CSV")->required();
    fit->add_option("--model", fit_model, "ldm | fim | both")->capture_default_str();
    fit->add_option("--residuals", fit_residuals,
                    "Residual series CSV (default <output-dir>/fit_residuals.csv)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Generate a synthetic campaign CSV");
    SimulateParams sp;
    std::string sim_link = "access", sim_los = "LOS", sim_solar = "off";
    std::optional<std::string> sim_out;
    std::optional<double> sim_temp, sim_dmax;
    sim->add_option("--scenario-id", sp.scenario_id)->capture_default_str();
    sim->add_option("--link-type", sim_link, "access | backhaul | d2d")->capture_default_str();
    sim->add_option("--environment", sp.environment)->capture_default_str();
    sim->add_option("--los", sim_los, "LOS | NLOS")->capture_default_str();
    sim->add_option("--tx-height", sp.tx_height_m, "[m]")->capture_default_str();
    sim->add_option("--rx-height", sp.rx_height_m, "[m]")->capture_default_str();
    sim->add_option("--n", sp.ple, "Night-time (base) path loss exponent")->capture_default_str();
    sim->add_option("--sigma", sp.sigma_db, "Shadow factor [dB]")->capture_default_str();
    sim->add_option("--count", sp.count, "Number of samples")->capture_default_str();
    sim->add_option("--seed", sp.seed, "Generator seed")->capture_default_str();
    sim->add_option("--solar", sim_solar, "on | off")->capture_default_str();
    sim->add_option("--temp-c", sim_temp, "Recorded temperature [C]");
    sim->add_option("--d-max", sim_dmax, "Largest distance [m]");
    sim->add_option("--out", sim_out, "Output CSV (default <output-dir>/campaign.csv)");

    // report
    auto* report = app.add_subcommand("report", "Day/night PLE comparison table");
    std::optional<std::string> day_csv, night_csv, report_out;
    bool fixture_mode = false;
    report->add_option("--day", day_csv, "Day-time campaign CSV");
    report->add_option("--night", night_csv, "Night-time campaign CSV");
    report->add_flag("--fixture", fixture_mode, "Re-derive the embedded reference percentages");
    report->add_option("--out", report_out, "Also write the table to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        const ToolConfig config = ov.resolve();
        const auto dir = config.output_dir;

        if (flux->parsed()) {
            const auto out = cmd_flux(config, f_min, f_max, f_step,
                                      flux_out ? std::filesystem::path(*flux_out) : dir / "flux.csv");
            std::cout << out.summary << "\nwrote " << out.path.string() << '\n';
            print_notes(out.notes);
            return 0;
        }
        if (dcnr->parsed()) {
            const auto freqs = parse_number_list(dcnr_freqs, "--frequencies");
            const auto out = cmd_dcnr(config, aet_min, aet_max, aet_step, freqs,
                                      dcnr_out ? std::filesystem::path(*dcnr_out) : dir / "dcnr.csv");
            std::cout << out.summary << "\nwrote " << out.path.string() << '\n';
            print_notes(out.notes);
            return 0;
        }
        if (budget->parsed()) {
            const auto distances = parse_number_list(budget_distances, "--distances");
            const auto out = cmd_budget(config, budget_ple, distances);
            const std::string text = out.table.render();
            std::cout << text;
            if (budget_out)
                write_text(*budget_out, text);
            return 0;
        }
        if (fit->parsed()) {
            const auto model = parse_fit_model(fit_model);
            if (!model)
                throw ConfigError("--model: expected ldm, fim or both, got '" + fit_model + "'");
            const auto out = cmd_fit(config, fit_csv, *model,
                                     fit_residuals ? std::filesystem::path(*fit_residuals)
                                                   : dir / "fit_residuals.csv");
            std::cout << out.table.render();
            return report_errors(out.errors);
        }
        if (sim->parsed()) {
            const auto link = parse_link_type(sim_link);
            if (!link)
                throw ConfigError("--link-type: expected access, backhaul or d2d");
            const auto los = parse_los(sim_los);
            if (!los)
                throw ConfigError("--los: expected LOS or NLOS");
            if (sim_solar != "on" && sim_solar != "off")
                throw ConfigError("--solar: expected on or off");
            sp.link_type = *link;
            sp.los = *los;
            sp.solar = sim_solar == "on";
            sp.temp_c = sim_temp;
            sp.d_max_m = sim_dmax;
            const auto out = cmd_simulate(config, sp,
                                          sim_out ? std::filesystem::path(*sim_out)
                                                  : dir / "campaign.csv");
            std::cout << "simulate: " << out.campaign.samples.size() << " samples, generating PLE "
                      << out.generating_ple << ", seed " << sp.seed << "\nwrote "
                      << out.path.string() << '\n';
            return 0;
        }
        if (report->parsed()) {
            std::string text;
            std::vector<std::string> errors;
            if (fixture_mode) {
                if (day_csv || night_csv)
                    throw ConfigError("--fixture cannot be combined with --day/--night");
                text = cmd_report_fixture().table.render();
            } else {
                if (!day_csv || !night_csv)
                    throw ConfigError("report needs --day and --night, or --fixture");
                const auto out = cmd_report(config, *day_csv, *night_csv);
                for (const auto& w : out.warnings)
                    std::cerr << "warning: " << w << '\n';
                text = out.table.render();
                errors = out.errors;
            }
            std::cout << text;
            if (report_out)
                write_text(*report_out, text);
            return report_errors(errors);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
