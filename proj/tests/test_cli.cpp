#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

struct Sandbox {
    fs::path dir;
    Sandbox()
    {
        std::random_device rd;
        dir = fs::temp_directory_path() / ("solarlink_cli_" + std::to_string(rd()));
        fs::create_directories(dir);
    }
    ~Sandbox() { fs::remove_all(dir); }

    Run run(const std::string& args) const
    {
        const fs::path log = dir / "stdout.txt";
        const std::string cmd = "cd '" + dir.string() + "' && '" SOLARLINK_CLI_PATH "' " + args +
                                " > '" + log.string() + "' 2>&1";
        const int status = std::system(cmd.c_str());
        std::ifstream in(log);
        std::ostringstream os;
        os << in.rdbuf();
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, os.str()};
    }

    void write(const std::string& name, const std::string& text) const
    {
        std::ofstream(dir / name) << text;
    }
};

bool contains(const std::string& s, const std::string& needle)
{
    return s.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("help and unknown subcommands")
{
    Sandbox sb;
    CHECK(sb.run("--help").code == 0);
    CHECK(sb.run("budget --help").code == 0);
    CHECK(sb.run("teleport").code == 1);
    CHECK(sb.run("").code != 0);
}

TEST_CASE("budget prints the profile")
{
    Sandbox sb;
    const auto r = sb.run("budget");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "9.66"));
    CHECK(contains(r.out, "123.6"));

    const auto csv = sb.run("budget --out budget.csv");
    CHECK(csv.code == 0);
    CHECK(fs::exists(sb.dir / "budget.csv"));

    CHECK(sb.run("budget --distances 10,5").code == 1);
}

TEST_CASE("flux and dcnr")
{
    Sandbox sb;
    CHECK(sb.run("flux --f-min 1 --f-max 100 --step 1 --out flux.csv").code == 0);
    CHECK(fs::exists(sb.dir / "flux.csv"));

    const auto bad = sb.run("flux --f-min 50 --f-max 10 --out inverted.csv");
    CHECK(bad.code == 1);
    CHECK_FALSE(fs::exists(sb.dir / "inverted.csv"));

    CHECK(sb.run("dcnr --out dcnr.csv").code == 0);
    CHECK(fs::exists(sb.dir / "dcnr.csv"));
    CHECK(sb.run("dcnr --frequencies '' --out none.csv").code == 1);
}

TEST_CASE("config file and overrides")
{
    Sandbox sb;
    sb.write("cfg.json", R"({"temperature_c": 25, "f10_sfu": 70})");
    const auto r = sb.run("--config cfg.json budget");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "25 C"));
    CHECK(contains(sb.run("budget --temperature-c 30").out, "30 C"));

    sb.write("bad.json", R"({"temprature_c": 25})");
    const auto bad = sb.run("--config bad.json budget");
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "temprature_c"));
    CHECK(sb.run("--config missing.json budget").code == 2);
    CHECK(sb.run("budget --burst-policy sometimes").code == 1);
}

TEST_CASE("simulate, fit and report")
{
    Sandbox sb;
    CHECK(sb.run("simulate --n 2 --sigma 2 --count 500 --seed 5 --out night.csv").code == 0);
    CHECK(sb.run("simulate --n 2 --sigma 2 --count 500 --seed 6 --solar on --out day.csv").code == 0);
    CHECK(sb.run("simulate --sigma -1 --out neg.csv").code == 1);

    const auto fit = sb.run("fit night.csv --residuals res.csv");
    CHECK(fit.code == 0);
    CHECK(contains(fit.out, "LDM"));
    CHECK(fs::exists(sb.dir / "res.csv"));

    const auto rep = sb.run("report --day day.csv --night night.csv");
    CHECK(rep.code == 0);
    CHECK(contains(rep.out, "% PLE increase"));

    const auto fx = sb.run("report --fixture");
    CHECK(fx.code == 0);
    CHECK(contains(fx.out, "14.3"));
    CHECK(contains(fx.out, "13.7"));
}

TEST_CASE("data errors exit nonzero")
{
    Sandbox sb;
    sb.write("one.csv", "scenario_id,link_type,environment,los,tx_height_m,rx_height_m,distance_m,"
                        "prec_dbm,temp_c,weather,visibility_km,timestamp_utc\n"
                        "s,access,x,LOS,14,2,5,-20,30,sunny,,\n");
    CHECK(sb.run("fit one.csv").code == 2);
    sb.write("empty.csv", "distance_m,prec_dbm\n");
    CHECK(sb.run("fit empty.csv").code == 2);
    CHECK(sb.run("fit absent.csv").code == 2);
}
