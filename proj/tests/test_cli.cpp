#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& suffix)
{
    static int counter = 0;
    const auto name = "eomt_cli_test_" + std::to_string(counter++) + suffix;
    return (std::filesystem::temp_directory_path() / name).string();
}

RunResult run_cli(const std::string& args)
{
    const std::string out = temp_path(".out");
    const std::string err = temp_path(".err");
    const std::string cmd = std::string("\"") + EOMT_CLI_PATH + "\" " + args + " >" + out + " 2>" + err;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

std::string write_config(const std::string& contents)
{
    const std::string path = temp_path(".json");
    std::ofstream f(path);
    f << contents;
    return path;
}

int count_lines(const std::string& text)
{
    int n = 0;
    for (char c : text)
        if (c == '\n')
            ++n;
    return n;
}

const std::string occ_config = write_config(
    R"({"conventions": {"occupancy_extra_two_pi": true}})");

} // namespace

TEST_CASE("efficiency prints the zero-frequency conversion efficiency")
{
    const auto r = run_cli("efficiency");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.empty());
    const auto j = nlohmann::json::parse(r.out);
    CHECK_THAT(j.at("r0").get<double>(), WithinRel(0.32680642866544400, 1e-12));
    CHECK_FALSE(j.contains("efficiency_at_omega"));

    const auto at = run_cli("efficiency --omega-hz 2.5e6");
    REQUIRE(at.exit_code == 0);
    const auto ja = nlohmann::json::parse(at.out);
    CHECK(ja.at("omega_hz").get<double>() == 2.5e6);
    CHECK_THAT(ja.at("efficiency_at_omega").get<double>(), WithinRel(2.2128920219787623e-7, 1e-10));
}

TEST_CASE("coeffs output is passive and oracle-consistent")
{
    const auto r = run_cli("coeffs --omega-hz 2.5e6");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_THAT(j.at("c2_re").get<double>(), WithinRel(-0.079638331395814663, 1e-10));
    CHECK_THAT(j.at("c2_im").get<double>(), WithinRel(-0.91999971608736514, 1e-10));
    CHECK_THAT(j.at("passivity_sum").get<double>(), WithinAbs(1.0, 1e-12));
    CHECK(j.at("oracle_max_rel_dev").get<double>() < 1e-10);
}

TEST_CASE("info reports profile, derived rates and drive detunings")
{
    const auto r = run_cli("info");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_THAT(j.at("G_o_hz").get<double>(), WithinRel(86053.471748674963, 1e-12));
    CHECK_THAT(j.at("G_e_hz").get<double>(), WithinRel(49545.938279540130, 1e-12));
    CHECK_THAT(j.at("Z_hz3").get<double>(), WithinRel(2.372583e16, 1e-9));
    CHECK_THAT(j.at("delta_drive_o_hz").get<double>(), WithinRel(1481120.7168069509, 1e-12));
    CHECK_THAT(j.at("delta_drive_e_hz").get<double>(), WithinRel(1477760.4127070323, 1e-12));
    CHECK(j.at("gamma_m_hz").get<double>() == 11.0);
    CHECK(j.at("occupancy_extra_two_pi").get<bool>() == false);
}

TEST_CASE("capacity honors config conventions")
{
    const auto r = run_cli("capacity --config " + occ_config);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_THAT(j.at("k1").get<double>(), WithinRel(1.1523656457009898, 1e-10));
    CHECK_THAT(j.at("p").get<double>(), WithinRel(0.30509731268624075, 1e-10));
    CHECK_THAT(j.at("p_noiseless").get<double>(), WithinRel(0.67849723944477663, 1e-10));
    CHECK(j.at("printed_rel_dev_k2").get<double>() < 1e-12);
    CHECK(j.at("printed_rel_dev_k4").get<double>() > 1e30);

    const auto phys = run_cli("capacity");
    REQUIRE(phys.exit_code == 0);
    CHECK(nlohmann::json::parse(phys.out).at("p").get<double>() == 0.0);
}

TEST_CASE("ln reports the converted-state entanglement")
{
    const auto r = run_cli("ln --ns 1 --config " + occ_config);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_THAT(j.at("ln_ctmg").get<double>(), WithinRel(0.24790590036277338, 1e-10));
    CHECK_THAT(j.at("ln_tmsv").get<double>(), WithinRel(1.7627471740390861, 1e-10));
    CHECK_THAT(j.at("surviving_ratio").get<double>(), WithinRel(0.14063610710249051, 1e-10));
    CHECK_THAT(j.at("xi_minus").get<double>(), WithinRel(0.39021668916032708, 1e-10));
    CHECK_THAT(j.at("xi_minus_analytic").get<double>(), WithinRel(0.39021668916032708, 1e-10));

    // off resonance the analytic zero-frequency value no longer applies
    const auto off = run_cli("ln --ns 1 --omega-hz 1e6 --config " + occ_config);
    REQUIRE(off.exit_code == 0);
    const auto jo = nlohmann::json::parse(off.out);
    CHECK_FALSE(jo.contains("xi_minus_analytic"));
    CHECK_THAT(jo.at("ln_ctmg").get<double>(), WithinRel(4.0290398018882011e-6, 1e-7));
}

TEST_CASE("sweep-ns emits deterministic csv with the requested row count")
{
    const std::string args = "sweep-ns --min 1e-2 --max 1e2 --points 5 --config " + occ_config;
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-identical reruns
    CHECK(a.out.find('\r') == std::string::npos);
    CHECK(count_lines(a.out) == 6); // header plus five rows
    CHECK(a.out.rfind("ns,ln_tmsv,ln_ctmg,ratio\n", 0) == 0);
    CHECK(a.out.back() == '\n');
}

TEST_CASE("sweep-loss json carries the full grid")
{
    const auto r = run_cli("sweep-loss --min 1e5 --max 1e7 --points 3 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto cols = j.at("columns");
    REQUIRE(cols.size() == 3);
    CHECK(cols[0] == "gamma_o_hz");
    CHECK(cols[1] == "gamma_e_hz");
    CHECK(cols[2] == "value");
    CHECK(j.at("data").size() == 9);
    CHECK(j.at("data")[0][0].get<double>() == 1e5);
    CHECK(j.at("data")[8][0].get<double>() == 1e7);

    const auto ln = run_cli("sweep-loss --min 1e5 --max 1e7 --points 2 --objective ln --ns 1 --format json --config " + occ_config);
    REQUIRE(ln.exit_code == 0);
    CHECK(nlohmann::json::parse(ln.out).at("data").size() == 4);
}

TEST_CASE("optimize-efficiency cross-checks the closed form")
{
    const auto r = run_cli("optimize-efficiency");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_THAT(j.at("gamma_o_closed_hz").get<double>(), WithinRel(32872433.645425368, 1e-12));
    CHECK_THAT(j.at("gamma_e_closed_hz").get<double>(), WithinRel(10890694.623501272, 1e-12));
    CHECK_THAT(j.at("r_closed").get<double>(), WithinRel(0.90701820045240270, 1e-12));
    CHECK(j.at("position_rel_dev").get<double>() < 1e-3);
    CHECK(j.at("converged").get<bool>());
}

TEST_CASE("out writes the payload to a file instead of stdout")
{
    const std::string out = temp_path(".json");
    const auto r = run_cli("efficiency --out " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK_THAT(j.at("r0").get<double>(), WithinRel(0.32680642866544400, 1e-12));
    std::remove(out.c_str());
}

TEST_CASE("usage errors exit with one")
{
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frequency").exit_code == 1);
    CHECK(run_cli("efficiency --format yaml").exit_code == 1);

    const auto csv = run_cli("efficiency --format csv");
    CHECK(csv.exit_code == 1);
    CHECK_THAT(csv.err, ContainsSubstring("error:"));
    CHECK_THAT(csv.err, ContainsSubstring("sweep"));

    const auto missing = run_cli("efficiency --config /nonexistent/params.json");
    CHECK(missing.exit_code == 1);
    CHECK_THAT(missing.err, ContainsSubstring("cannot open config file"));

    const std::string bad = write_config(R"({"gamma_m_hz": -1})");
    const auto invalid = run_cli("efficiency --config " + bad);
    CHECK(invalid.exit_code == 1);
    CHECK_THAT(invalid.err, ContainsSubstring("gamma_m_hz"));
    std::remove(bad.c_str());

    const auto grid = run_cli("sweep-ns --points 0");
    CHECK(grid.exit_code == 1);

    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("ln --help").exit_code == 0);
}

TEST_CASE("thin pump drive warns on stderr but still runs")
{
    const std::string low = write_config(R"({"n_pump_e": 500})");
    const auto r = run_cli("efficiency --config " + low);
    REQUIRE(r.exit_code == 0);
    CHECK_THAT(r.err, ContainsSubstring("warning:"));
    CHECK_THAT(r.err, ContainsSubstring("n_pump_e"));
    CHECK(nlohmann::json::parse(r.out).contains("r0"));
    std::remove(low.c_str());
}
