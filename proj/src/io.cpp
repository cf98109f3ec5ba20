#include "plankton/io.hpp"

#include <cstdio>
#include <fstream>

#include "plankton/roots.hpp"

namespace plankton::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_string(const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw NumericalError("cannot open output file: " + path);
    f << content;
    if (!f) throw NumericalError("write failed: " + path);
}

nlohmann::json complex_to_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

nlohmann::json wrap(const std::string& schema, nlohmann::json data) {
    return {{"schema", schema}, {"data", std::move(data)}};
}

nlohmann::json ns_report_to_json(const NSReport& rep) {
    nlohmann::json data{
        {"theta0", rep.ns_point.theta0},
        {"u_tilde", rep.ns_point.u_tilde},
        {"v_tilde", rep.ns_point.v_tilde},
        {"lambda1", complex_to_json(rep.lambda1)},
        {"lambda2", complex_to_json(rep.lambda2)},
        {"d_modulus_dtheta", rep.d_modulus_dtheta},
        {"L20", complex_to_json(rep.L20)},
        {"L11", complex_to_json(rep.L11)},
        {"L02", complex_to_json(rep.L02)},
        {"L21", complex_to_json(rep.L21)},
        {"L_quantity", rep.L_quantity},
        {"curve_stability",
         rep.curve_stability == CurveStability::attracting ? "attracting" : "repelling"},
    };
    return wrap("ns_report", std::move(data));
}

NSReport ns_report_from_json(const nlohmann::json& j) {
    const auto& d = j.at("data");
    NSReport rep;
    rep.ns_point = {d.at("theta0").get<double>(), d.at("u_tilde").get<double>(),
                    d.at("v_tilde").get<double>()};
    rep.lambda1 = complex_from_json(d.at("lambda1"));
    rep.lambda2 = complex_from_json(d.at("lambda2"));
    rep.d_modulus_dtheta = d.at("d_modulus_dtheta").get<double>();
    rep.L20 = complex_from_json(d.at("L20"));
    rep.L11 = complex_from_json(d.at("L11"));
    rep.L02 = complex_from_json(d.at("L02"));
    rep.L21 = complex_from_json(d.at("L21"));
    rep.L_quantity = d.at("L_quantity").get<double>();
    rep.curve_stability = d.at("curve_stability").get<std::string>() == "attracting"
                              ? CurveStability::attracting
                              : CurveStability::repelling;
    return rep;
}

} // namespace plankton::io
