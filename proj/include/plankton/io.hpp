#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "plankton/bifurcation.hpp"

namespace plankton::io {

// 17 significant digits: lossless round-trip of 64-bit values.
std::string format_double(double x);

std::string csv_string(const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows);

void write_text(const std::string& path, const std::string& content);

nlohmann::json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);

// Result documents carry {"schema": <kind>, "data": {...}}.
nlohmann::json wrap(const std::string& schema, nlohmann::json data);

nlohmann::json ns_report_to_json(const NSReport& rep);
NSReport ns_report_from_json(const nlohmann::json& j);

} // namespace plankton::io
