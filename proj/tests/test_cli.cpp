#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PLANKTON_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

const std::string kModel41 = "--beta 2 --r 0.5 --c 2 --h 1";

} // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("fixed-points --beta 2 --r 0.5").code == 2); // missing required
    CHECK(run_cli("fixed-points " + kModel41 + " --theta 1.2 --h 3").code == 2);
    CHECK(run_cli("orbit " + kModel41 + " --theta 1.2 --u0 -0.5 --v0 1").code == 2);
    CHECK(run_cli("fixed-points --beta -2 --r 0.5 --c 2 --h 1 --theta 1.2").code == 2);
    CHECK(run_cli("orbit " + kModel41 + " --theta 1.2 --u0 0.2 --v0 1.1 --format xml").code == 2);
}

TEST_CASE("help exits cleanly") {
    const auto res = run_cli("--help");
    CHECK(res.code == 0);
    CHECK(res.out.find("fixed-points") != std::string::npos);
}

TEST_CASE("fixed-points report") {
    const auto res = run_cli("fixed-points " + kModel41 + " --theta 1.2012");
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("schema") == "fixed_points");
    const auto& data = j.at("data");
    CHECK(data.at("boundary").size() == 2);
    CHECK(data.at("boundary")[0].at("label") == "saddle");
    REQUIRE(data.at("interior").size() == 1);
    CHECK(std::abs(data.at("interior")[0].at("u").get<double>() - 0.3796) < 5e-4);
    CHECK(data.at("count") == 1);

    const auto res2 = run_cli("fixed-points --beta 3 --r 0.5 --c 1 --h 2 --theta 4.95");
    REQUIRE(res2.code == 0);
    const json j2 = json::parse(res2.out);
    CHECK(j2.at("data").at("count") == 3);
    CHECK(j2.at("data").at("case_label") == "ii.5");
    CHECK(j2.at("data").at("interior")[1].at("branch") == "E0");
}

TEST_CASE("classify report") {
    const auto res = run_cli("classify " + kModel41 + " --theta 1.205");
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("schema") == "classification");
    CHECK(j.at("data").at("interior")[0].at("label") == "attractive");
}

TEST_CASE("ns report and failure modes") {
    const auto res = run_cli("ns " + kModel41);
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("schema") == "ns_report");
    CHECK(std::abs(j.at("data").at("theta0").get<double>() - 1.2012096624900739) < 1e-9);
    CHECK(j.at("data").at("lambda1").at("im").get<double>() < 0.0);
    CHECK(j.at("data").at("curve_stability") == "attracting");
    // beta <= r violates a precondition
    CHECK(run_cli("ns --beta 0.4 --r 0.5 --c 1 --h 1").code == 2);
    // index past the solution list is a numerical failure
    CHECK(run_cli("ns " + kModel41 + " --index 5").code == 3);
}

TEST_CASE("orbit csv output") {
    const auto res = run_cli("orbit " + kModel41 +
                             " --theta 1.205 --u0 0.2 --v0 1.1 --steps 100 --transient 90");
    REQUIRE(res.code == 0);
    REQUIRE(res.out.rfind("step,u,v\n", 0) == 0);
    int lines = 0;
    for (char ch : res.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 11);
}

TEST_CASE("orbit json output and divergence exit code") {
    const auto res = run_cli("orbit " + kModel41 +
                             " --theta 1.205 --u0 0.2 --v0 1.1 --steps 50 --transient 40"
                             " --format json");
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("schema") == "orbit");
    CHECK(j.at("data").at("diverged") == false);
    CHECK(j.at("data").at("states").size() == 10);

    const auto div = run_cli("orbit --beta 4 --r 0.05 --c 0.1 --h 1 --theta 0.1"
                             " --u0 0.9 --v0 100000 --steps 200 --transient 0 --format json");
    CHECK(div.code == 3);
    CHECK(json::parse(div.out).at("data").at("diverged") == true);
}

TEST_CASE("mle output") {
    const auto res = run_cli("mle " + kModel41 + " --theta 1.5 --u0 0.2 --v0 1.1");
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("schema") == "mle");
    CHECK(j.at("data").at("value").get<double>() < 0.0);
}

TEST_CASE("regions output") {
    const auto res = run_cli("regions --beta 2 --r 0.5 --c 2 --h 1 --theta 5 --u0 0.5 --v0 0.5");
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j.at("schema") == "regions_report");
    CHECK(j.at("data").at("vupdate_nonneg").at("which") == "c");
    CHECK(j.at("data").at("m_invariant") == true);
    CHECK(j.at("data").at("prediction") == "boundary_u1");

    const auto res2 = run_cli("regions --beta 0.4 --r 0.5 --c 0.4 --h 2 --theta 1");
    REQUIRE(res2.code == 0);
    const json j2 = json::parse(res2.out);
    CHECK(j2.at("data").at("bernstein").at("holds") == true);
}

TEST_CASE("sweep csv shape") {
    const auto res = run_cli("sweep " + kModel41 +
                             " --theta-min 1.1 --theta-max 1.3 --grid 5 --keep 10"
                             " --u0 0.2 --v0 1.1 --steps 2000 --transient 1800");
    REQUIRE(res.code == 0);
    REQUIRE(res.out.rfind("theta,u,v,mle\n", 0) == 0);
    int lines = 0;
    for (char ch : res.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 5 * 10);
}

TEST_CASE("sweep output is byte-identical across runs") {
    const std::string cmd = "sweep " + kModel41 +
                            " --theta-min 1.1 --theta-max 1.3 --grid 7 --keep 5"
                            " --u0 0.2 --v0 1.1 --steps 1500 --transient 1400";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "cli_out_scratch.csv";
    const std::string cmd = "orbit " + kModel41 +
                            " --theta 1.205 --u0 0.2 --v0 1.1 --steps 100 --transient 95";
    const auto res = run_cli(cmd);
    REQUIRE(res.code == 0);
    REQUIRE(run_cli(cmd + " --out " + path).code == 0);
    std::ifstream f(path, std::ios::binary);
    std::string file_content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(file_content == res.out);
    std::remove(path.c_str());
}

TEST_CASE("config file supplies defaults, command line overrides") {
    const std::string path = "cli_cfg_scratch.cfg";
    write_file(path, "# model block\n"
                     "beta = 2\n"
                     "r = 0.5\n"
                     "c = 2\n"
                     "h = 1\n"
                     "theta = 1.205\n");
    const auto base = run_cli("classify --config " + path);
    REQUIRE(base.code == 0);
    CHECK(json::parse(base.out).at("data").at("interior")[0].at("label") == "attractive");
    // command-line --theta wins over the config value
    const auto over = run_cli("classify --config " + path + " --theta 1.12");
    REQUIRE(over.code == 0);
    CHECK(json::parse(over.out).at("data").at("interior")[0].at("label") == "repelling");
    std::remove(path.c_str());
}

TEST_CASE("config file errors exit with 2") {
    CHECK(run_cli("classify --config does_not_exist.cfg").code == 2);
    const std::string path = "cli_cfg_bad_scratch.cfg";
    write_file(path, "beta = 2\nbogus = 7\n");
    CHECK(run_cli("classify --config " + path).code == 2);
    write_file(path, "beta = 2\nnot a pair\n");
    CHECK(run_cli("classify --config " + path).code == 2);
    std::remove(path.c_str());
}
