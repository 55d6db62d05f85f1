#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace projrigid;
using testutil::data_path;
using testutil::frozen;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::filesystem::path out = dir / ("cli_out_" + std::to_string(counter) + ".txt");
    std::filesystem::path err = dir / ("cli_err_" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = env_prefix + PROJRIGID_BIN + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int status = std::system(cmd.c_str());
    CliResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return res;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

nlohmann::json parse_report(const CliResult& res) {
    REQUIRE(res.code == 0);
    return nlohmann::json::parse(res.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p, std::ios::binary) << body;
    return p;
}

}  // namespace

TEST_CASE("rigidity verdict as JSON") {
    CliResult res = run_cli("rigidity " + quoted(data_path("figure8.json")) + " --json");
    nlohmann::json rep = parse_report(res);
    CHECK(rep.at("command") == "rigidity");
    CHECK(rep.at("version") == kToolVersion);
    CHECK(rep.at("input").at("hash") == file_hash(data_path("figure8.json")));
    const nlohmann::json& r = rep.at("results");
    CHECK(r.at("k") == 1);
    CHECK(r.at("h1_v") == 1);
    CHECK(r.at("h1_so31") == 2);
    CHECK(r.at("h1_sl4") == 3);
    CHECK(r.at("h1_su31_derived") == 3);
    CHECK(r.at("verdict") == "rigid");
    CHECK(r.at("weil_garland") == true);
}

TEST_CASE("a non-rigid verdict is data, not an error") {
    CliResult res = run_cli("rigidity " + quoted(data_path("torus.json")) + " --json");
    nlohmann::json rep = parse_report(res);
    CHECK(rep.at("results").at("verdict") == "non-rigid");
    CHECK(rep.at("results").at("weil_garland") == false);
}

TEST_CASE("global --json may come before or after the subcommand") {
    CliResult after = run_cli("rigidity " + quoted(data_path("figure8.json")) + " --json");
    CliResult before = run_cli("--json rigidity " + quoted(data_path("figure8.json")));
    CHECK(after.code == 0);
    CHECK(before.code == 0);
    CHECK(after.out == before.out);
}

TEST_CASE("human output lists the same verdict") {
    CliResult res = run_cli("rigidity " + quoted(data_path("figure8.json")));
    CHECK(res.code == 0);
    CHECK(res.out.find("verdict: rigid") != std::string::npos);
    CHECK(res.out.find("command: rigidity") != std::string::npos);
}

TEST_CASE("check accepts bundled inputs and reports shape") {
    CliResult res = run_cli("check " + quoted(data_path("whitehead.json")) + " --json");
    nlohmann::json rep = parse_report(res);
    CHECK(rep.at("results").at("ok") == true);
    CHECK(rep.at("results").at("generators") == 2);
    CHECK(rep.at("results").at("cusps") == 2);
}

TEST_CASE("malformed input exits with the parse failure code") {
    std::filesystem::path p = write_temp("cli_broken.json", "{ this is not json");
    CliResult res = run_cli("check " + quoted(p.string()));
    CHECK(res.code == 1);
    CHECK(res.err.find("error:") != std::string::npos);
    std::filesystem::remove(p);
}

TEST_CASE("a representation violating a relator exits with the precondition code") {
    nlohmann::json doc;
    {
        std::ifstream in(data_path("torus.json"));
        doc = nlohmann::json::parse(in);
    }
    doc["relators"] = {"m^2*l^3"};
    std::filesystem::path p = write_temp("cli_violated.json", doc.dump(1));
    CliResult res = run_cli("check " + quoted(p.string()));
    CHECK(res.code == 2);
    CHECK(res.err.find("error:") != std::string::npos);
    std::filesystem::remove(p);
}

TEST_CASE("non-coprime slopes exit with the precondition code") {
    CliResult res = run_cli("flexing " + quoted(data_path("whitehead.json")) +
                            " --slopes 2/4");
    CHECK(res.code == 2);
}

TEST_CASE("unknown flags exit with the usage code") {
    CliResult res = run_cli("rigidity " + quoted(data_path("figure8.json")) + " --frobnicate");
    CHECK(res.code == 1);
}

TEST_CASE("cohomology dimensions and basis through the CLI") {
    CliResult res = run_cli("cohomology " + quoted(data_path("figure8.json")) +
                            " --module v --h2 --json");
    nlohmann::json rep = parse_report(res);
    const nlohmann::json& r = rep.at("results");
    CHECK(r.at("module") == "v");
    CHECK(r.at("dims").at("h1") == 1);
    CHECK(r.at("dims").at("h2") == 1);
    CHECK(r.at("dims").at("h2_valid") == true);
    CHECK(r.at("h1_basis") == frozen().at("fig8_h1v_basis"));
}

TEST_CASE("invariant subspace through the CLI") {
    CliResult whole = run_cli("invariant " + quoted(data_path("figure8.json")) +
                              " --module v --json");
    CHECK(parse_report(whole).at("results").at("dim") == 9);
    CliResult fixed = run_cli("invariant " + quoted(data_path("figure8.json")) +
                              " --words x --module v --json");
    CHECK(parse_report(fixed).at("results").at("dim") == 3);
}

TEST_CASE("pairing certificate through the CLI") {
    CliResult res = run_cli(
        "pairing " + quoted(data_path("figure8.json")) + " --cocycle " +
        quoted(data_path("fig8_cocycle_h1gen.json")) + " --word " +
        quoted("y*x^-1*y^-1*x^2*y^-1*x^-1*y") + " --invariant " +
        quoted(data_path("fig8_invariant_a.json")) + " --json");
    nlohmann::json rep = parse_report(res);
    CHECK(rep.at("results").at("value") ==
          frozen().at("fig8_h1gen_pairing_at_l").get<std::string>());
    CHECK(rep.at("results").at("restriction_nontrivial") == true);
}

TEST_CASE("cup product through the CLI") {
    CliResult res = run_cli("cup " + quoted(data_path("torus.json")) + " --z1 " +
                            quoted(data_path("torus_cocycle_zm.json")) + " --z2 " +
                            quoted(data_path("torus_cocycle_zl.json")) + " --json");
    nlohmann::json rep = parse_report(res);
    CHECK(rep.at("results").at("class") == frozen().at("torus_cup_ml_class"));
    CHECK(rep.at("results").at("class_zero") == false);
}

TEST_CASE("pullback through the CLI") {
    CliResult res = run_cli("auto " + quoted(data_path("torus.json")) + " --phi " +
                            quoted(data_path("torus_phi0.json")) + " --intertwiner " +
                            quoted(data_path("torus_intertwiner_a0.json")) + " --cocycle " +
                            quoted(data_path("torus_cocycle_zm.json")) + " --json");
    nlohmann::json rep = parse_report(res);
    CHECK(rep.at("results").at("pullback").at("values").at("m") ==
          frozen().at("torus_pullback_zm_m"));
    CHECK(rep.at("results").at("is_cocycle") == true);
}

TEST_CASE("flexing scan with a filling prediction") {
    CliResult res = run_cli("flexing " + quoted(data_path("whitehead.json")) +
                            " --slopes 1/0,0/1,1/1 --predict 1/0 --line 5 --json");
    nlohmann::json rep = parse_report(res);
    const nlohmann::json& slopes = rep.at("results").at("slopes");
    REQUIRE(slopes.size() == 3);
    CHECK(slopes.at(0).at("flexing") == true);
    CHECK(slopes.at(0).at("certificate") ==
          frozen().at("wh_meridian_pairing_certificate").get<std::string>());
    CHECK(slopes.at(1).at("flexing") == false);
    CHECK(slopes.at(1).at("certificate").is_null());
    std::string prediction = rep.at("results").at("prediction").get<std::string>();
    CHECK(prediction.find("filling line: (0)*P + (-1)*Q = 5") != std::string::npos);
}

TEST_CASE("selftest command needs no input file") {
    CliResult res = run_cli("su31-selftest --json");
    nlohmann::json rep = parse_report(res);
    CHECK(rep.at("input").at("hash") == "0000000000000000");
    CHECK(rep.at("results").at("ok") == true);
    CHECK(rep.at("results").at("dims") == nlohmann::json({1, 4, 5, 4, 1}));
}

TEST_CASE("output is byte-identical across runs and thread budgets") {
    std::string args = "rigidity " + quoted(data_path("whitehead.json")) + " --json";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    CliResult serial = run_cli(args, "PROJRIGID_THREADS=1 ");
    CliResult wide = run_cli(args, "PROJRIGID_THREADS=8 ");
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == serial.out);
    CHECK(first.out == wide.out);
}
