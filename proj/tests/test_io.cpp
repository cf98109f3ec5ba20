#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "plankton/bifurcation.hpp"
#include "plankton/io.hpp"
#include "plankton/roots.hpp"

using namespace plankton;

TEST_CASE("format_double round-trips doubles exactly") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ud(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double x = ud(rng);
        CHECK(std::stod(io::format_double(x)) == x);
    }
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(std::stod(io::format_double(0.1)) == 0.1);
    CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("csv layout") {
    const std::string s = io::csv_string({"theta", "u", "v"}, {{1.5, 0.25, 0.75}, {2.0, 0.5, 1.0}});
    std::istringstream in(s);
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,u,v");
    std::getline(in, line);
    CHECK(line == "1.5,0.25,0.75");
    std::getline(in, line);
    CHECK(line == "2,0.5,1");
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("write_text writes bytes and fails loudly") {
    const std::string path = "io_test_scratch.txt";
    io::write_text(path, "a,b\n1,2\n");
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == "a,b\n1,2\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::write_text("no_such_dir_xyz/out.txt", "x"), NumericalError);
}

TEST_CASE("complex json representation") {
    const auto j = io::complex_to_json({1.25, -0.5});
    CHECK(j.at("re").get<double>() == 1.25);
    CHECK(j.at("im").get<double>() == -0.5);
    CHECK(io::complex_from_json(j) == std::complex<double>(1.25, -0.5));
}

TEST_CASE("document wrapper carries the schema tag") {
    const auto j = io::wrap("orbit", {{"n", 3}});
    CHECK(j.at("schema") == "orbit");
    CHECK(j.at("data").at("n") == 3);
}

TEST_CASE("NS report survives a json round trip bit for bit") {
    const auto rep = ns_report(2, 0.5, 2, 1);
    REQUIRE(rep.has_value());
    const auto j = io::ns_report_to_json(*rep);
    CHECK(j.at("schema") == "ns_report");
    // through text, as a file would see it
    const auto back = io::ns_report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.ns_point.theta0 == rep->ns_point.theta0);
    CHECK(back.ns_point.u_tilde == rep->ns_point.u_tilde);
    CHECK(back.ns_point.v_tilde == rep->ns_point.v_tilde);
    CHECK(back.lambda1 == rep->lambda1);
    CHECK(back.lambda2 == rep->lambda2);
    CHECK(back.d_modulus_dtheta == rep->d_modulus_dtheta);
    CHECK(back.L20 == rep->L20);
    CHECK(back.L11 == rep->L11);
    CHECK(back.L02 == rep->L02);
    CHECK(back.L21 == rep->L21);
    CHECK(back.L_quantity == rep->L_quantity);
    CHECK(back.curve_stability == rep->curve_stability);
}
