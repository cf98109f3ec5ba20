#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plankton/bifurcation.hpp"
#include "plankton/dynamics.hpp"
#include "plankton/fixed_points.hpp"
#include "plankton/io.hpp"
#include "plankton/model.hpp"
#include "plankton/regions.hpp"
#include "plankton/roots.hpp"
#include "plankton/stability.hpp"

namespace {

using nlohmann::json;
using namespace plankton;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

const std::set<std::string> kConfigKeys = {
    "beta", "r", "theta", "c", "h", "u0", "v0", "steps", "transient",
    "record-every", "keep", "theta-min", "theta-max", "grid", "index",
    "out", "format"};

// Flat key=value file; '#' starts a comment. Returns flag/value pairs or
// an error message naming the offending line.
bool parse_config_file(const std::string& path, std::vector<std::string>& flags,
                       std::string& error) {
    std::ifstream f(path);
    if (!f) {
        error = "config: cannot open file '" + path + "'";
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0) {
            error = "config: line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'";
            return false;
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        const auto ktrim = key.find_last_not_of(" \t");
        key = key.substr(0, ktrim == std::string::npos ? 0 : ktrim + 1);
        const auto vtrim = value.find_first_not_of(" \t");
        value = vtrim == std::string::npos ? "" : value.substr(vtrim);
        if (!kConfigKeys.count(key)) {
            error = "config: line " + std::to_string(lineno) + ": unknown key '" + key + "'";
            return false;
        }
        flags.push_back("--" + key);
        flags.push_back(value);
    }
    return true;
}

struct Options {
    double beta = 0, r = 0, theta = 0, c = 0;
    int h = 1;
    double u0 = 0.2, v0 = 1.1;
    int steps = 10000, transient = 9000, record_every = 1, keep = 200;
    double theta_min = 0, theta_max = 0;
    int grid = 0;
    int index = 0;
    std::string out;
    std::string format; // "csv" or "json"
};

CLI::Option* add_opt(CLI::App* cmd, const std::string& name, auto& target,
                     const std::string& desc, bool required) {
    auto* opt = cmd->add_option(name, target, desc);
    opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    if (required) opt->required();
    return opt;
}

void add_model_opts(CLI::App* cmd, Options& o, bool need_theta) {
    // frees the short -h so --h can name the Holling exponent
    cmd->set_help_flag("--help", "print help and exit");
    add_opt(cmd, "--beta", o.beta, "conversion efficiency (>0)", true);
    add_opt(cmd, "--r", o.r, "zooplankton mortality (>0)", true);
    add_opt(cmd, "--c", o.c, "saturation constant (>0)", true);
    add_opt(cmd, "--h", o.h, "Holling exponent", true)->check(CLI::IsMember({1, 2}));
    add_opt(cmd, "--theta", o.theta, "toxin liberation rate (>0)", need_theta);
}

// An empty o.format after parsing means "use the command's default";
// Options is shared across subcommands so the default cannot be preset.
void add_output_opts(CLI::App* cmd, Options& o) {
    add_opt(cmd, "--out", o.out, "output path (default: stdout)", false);
    add_opt(cmd, "--format", o.format, "output format", false)
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_orbit_opts(CLI::App* cmd, Options& o, bool with_record_every) {
    add_opt(cmd, "--u0", o.u0, "initial phytoplankton density", true);
    add_opt(cmd, "--v0", o.v0, "initial zooplankton density", true);
    add_opt(cmd, "--steps", o.steps, "total iteration count", false);
    add_opt(cmd, "--transient", o.transient, "discarded leading steps", false);
    if (with_record_every)
        add_opt(cmd, "--record-every", o.record_every, "recording stride", false);
}

void emit(const Options& o, const std::string& content) {
    if (o.out.empty())
        std::cout << content;
    else
        io::write_text(o.out, content);
}

json fixed_point_json(const ModelParams& params, const FixedPointRecord& rec) {
    json j{{"u", rec.point.u}, {"v", rec.point.v}, {"kind", to_string(rec.kind)}};
    if (rec.kind == FixedPointKind::interior) {
        j["branch"] = rec.branch;
        j["p"] = rec.char_p;
        j["q"] = rec.char_q;
        j["tangent"] = rec.tangent;
        j["label"] = to_string(classify_interior(params, rec));
    }
    return j;
}

int cmd_fixed_points(const Options& o) {
    const ModelParams params(o.beta, o.r, o.theta, o.c, o.h);
    const auto [origin_label, u1_label] = classify_boundary(params);
    const auto boundary = boundary_fixed_points();
    const auto interior = find_positive_fixed_points(params);

    json data;
    data["boundary"] = json::array();
    json jb0 = fixed_point_json(params, boundary[0]);
    jb0["label"] = to_string(origin_label);
    json jb1 = fixed_point_json(params, boundary[1]);
    jb1["label"] = to_string(u1_label);
    data["boundary"].push_back(jb0);
    data["boundary"].push_back(jb1);
    data["interior"] = json::array();
    for (const auto& rec : interior) data["interior"].push_back(fixed_point_json(params, rec));
    if (o.h == 2) {
        const auto count = count_positive_fixed_points(params);
        data["count"] = count.count;
        data["case_label"] = count.case_label;
    } else {
        data["count"] = static_cast<int>(interior.size());
    }
    emit(o, io::wrap("fixed_points", data).dump(2) + "\n");
    return kExitOk;
}

int cmd_classify(const Options& o) {
    const ModelParams params(o.beta, o.r, o.theta, o.c, o.h);
    const auto [origin_label, u1_label] = classify_boundary(params);
    json data{{"origin", to_string(origin_label)}, {"boundary_u1", to_string(u1_label)}};
    data["interior"] = json::array();
    for (const auto& rec : find_positive_fixed_points(params)) {
        data["interior"].push_back(json{{"u", rec.point.u},
                                        {"v", rec.point.v},
                                        {"branch", rec.branch},
                                        {"p", rec.char_p},
                                        {"q", rec.char_q},
                                        {"label", to_string(classify_interior(params, rec))}});
    }
    emit(o, io::wrap("classification", data).dump(2) + "\n");
    return kExitOk;
}

int cmd_ns(const Options& o) {
    const auto rep = ns_report(o.beta, o.r, o.c, o.h, o.index);
    if (!rep)
        throw NumericalError("ns: no Neimark-Sacker point found for these parameters");
    emit(o, io::ns_report_to_json(*rep).dump(2) + "\n");
    return kExitOk;
}

int cmd_orbit(const Options& o) {
    const ModelParams params(o.beta, o.r, o.theta, o.c, o.h);
    OrbitSpec spec{PlanktonState::checked(o.u0, o.v0), o.steps, o.transient, o.record_every};
    const OrbitResult orbit = iterate_orbit(params, spec);
    if (o.format != "json") {
        std::vector<std::vector<double>> rows;
        rows.reserve(orbit.states.size());
        for (size_t i = 0; i < orbit.states.size(); ++i) {
            const double step = spec.transient + 1.0 + static_cast<double>(i) * spec.record_every;
            rows.push_back({step, orbit.states[i].u, orbit.states[i].v});
        }
        emit(o, io::csv_string({"step", "u", "v"}, rows));
    } else {
        json data{{"diverged", orbit.diverged}, {"steps_done", orbit.steps_done}};
        data["states"] = json::array();
        for (const auto& s : orbit.states) data["states"].push_back(json{{"u", s.u}, {"v", s.v}});
        emit(o, io::wrap("orbit", data).dump(2) + "\n");
    }
    return orbit.diverged ? kExitNumerical : kExitOk;
}

int cmd_sweep(const Options& o) {
    const ModelParams base(o.beta, o.r, 1.0, o.c, o.h); // theta comes from the grid
    OrbitSpec spec{PlanktonState::checked(o.u0, o.v0), o.steps, o.transient, 1};
    const SweepResult sweep =
        bifurcation_sweep(base, o.theta_min, o.theta_max, o.grid, spec, o.keep);
    if (o.format != "json") {
        std::vector<std::vector<double>> rows;
        for (size_t i = 0; i < sweep.theta_grid.size(); ++i)
            for (const auto& s : sweep.samples[i])
                rows.push_back({sweep.theta_grid[i], s.u, s.v, sweep.mle[i]});
        emit(o, io::csv_string({"theta", "u", "v", "mle"}, rows));
    } else {
        json data;
        data["columns"] = json::array();
        for (size_t i = 0; i < sweep.theta_grid.size(); ++i) {
            json col{{"theta", sweep.theta_grid[i]},
                     {"mle", sweep.mle[i]},
                     {"diverged", static_cast<bool>(sweep.diverged[i])}};
            col["samples"] = json::array();
            for (const auto& s : sweep.samples[i])
                col["samples"].push_back(json{{"u", s.u}, {"v", s.v}});
            data["columns"].push_back(col);
        }
        emit(o, io::wrap("sweep", data).dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_mle(const Options& o) {
    const ModelParams params(o.beta, o.r, o.theta, o.c, o.h);
    OrbitSpec spec{PlanktonState::checked(o.u0, o.v0), o.steps, o.transient, 1};
    const double value = max_lyapunov_exponent(params, spec);
    if (o.format == "csv")
        emit(o, io::csv_string({"mle"}, {{value}}));
    else
        emit(o, io::wrap("mle", json{{"value", value}}).dump(2) + "\n");
    return kExitOk;
}

int cmd_regions(const Options& o) {
    const ModelParams params(o.beta, o.r, o.theta, o.c, o.h);
    json data;
    if (o.h == 1) {
        const auto nn = vupdate_nonneg_h1(params);
        json cond;
        cond["holds"] = nn.holds;
        if (nn.which) {
            const char* names[] = {"a", "b", "c"};
            cond["which"] = names[static_cast<int>(*nn.which)];
        }
        data["vupdate_nonneg"] = cond;
    } else {
        const auto [w, holds] = bernstein_coeffs_h2(params);
        data["bernstein"] = json{{"omega_0", w.omega_0},
                                 {"omega_1", w.omega_1},
                                 {"omega_2", w.omega_2},
                                 {"omega_3", w.omega_3},
                                 {"holds", holds}};
        if (!holds) data["bernstein"]["note"] = "inconclusive";
    }
    data["m_invariant"] = m_invariance_conditions(params);
    data["prediction"] =
        to_string(global_attractor_prediction(params, PlanktonState::checked(o.u0, o.v0)));
    emit(o, io::wrap("regions_report", data).dump(2) + "\n");
    return kExitOk;
}

} // namespace

int run(std::vector<std::string> args) {
    CLI::App app{"Analysis and simulation toolkit for a discrete plankton map with Holling-type toxin release"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    Options o;
    auto* fp = app.add_subcommand("fixed-points", "Locate and classify all fixed points");
    add_model_opts(fp, o, true);
    add_output_opts(fp, o);

    auto* cl = app.add_subcommand("classify", "Stability labels for boundary and interior fixed points");
    add_model_opts(cl, o, true);
    add_output_opts(cl, o);

    auto* ns = app.add_subcommand("ns", "Neimark-Sacker point, eigenvalues and normal-form report");
    add_model_opts(ns, o, false);
    add_opt(ns, "--index", o.index, "NS branch index (ascending u)", false);
    add_output_opts(ns, o);

    auto* orbit = app.add_subcommand("orbit", "Iterate an orbit and export the recorded states");
    add_model_opts(orbit, o, true);
    add_orbit_opts(orbit, o, true);
    add_output_opts(orbit, o);

    auto* sweep = app.add_subcommand("sweep", "Bifurcation-diagram sweep over theta");
    add_model_opts(sweep, o, false);
    add_orbit_opts(sweep, o, false);
    add_opt(sweep, "--theta-min", o.theta_min, "sweep lower bound", true);
    add_opt(sweep, "--theta-max", o.theta_max, "sweep upper bound", true);
    add_opt(sweep, "--grid", o.grid, "number of theta grid points", true);
    add_opt(sweep, "--keep", o.keep, "kept samples per theta", false);
    add_output_opts(sweep, o);

    auto* mle = app.add_subcommand("mle", "Maximum Lyapunov exponent along an orbit");
    add_model_opts(mle, o, true);
    add_orbit_opts(mle, o, false);
    add_output_opts(mle, o);

    auto* regions = app.add_subcommand("regions", "Nonnegativity, invariance and convergence report");
    add_model_opts(regions, o, true);
    add_opt(regions, "--u0", o.u0, "initial phytoplankton density", false);
    add_opt(regions, "--v0", o.v0, "initial zooplankton density", false);
    add_output_opts(regions, o);

    // Expand --config before parsing; flags given on the command line come
    // later in argv and override via TakeLast.
    std::string config_path;
    for (auto& cmd : {fp, cl, ns, orbit, sweep, mle, regions})
        add_opt(cmd, "--config", config_path, "key=value config file", false);

    std::vector<std::string> expanded;
    if (!args.empty()) expanded.push_back(args[0]);
    for (size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            std::vector<std::string> flags;
            std::string error;
            if (!parse_config_file(args[i + 1], flags, error)) {
                std::cerr << error << "\n";
                return kExitUsage;
            }
            // config values go right after the subcommand name
            expanded.insert(expanded.begin() + 1, flags.begin(), flags.end());
            ++i;
        } else {
            expanded.push_back(args[i]);
        }
    }

    std::vector<const char*> argv;
    argv.reserve(expanded.size() + 1);
    argv.push_back("plankton");
    for (const auto& a : expanded) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (fp->parsed()) return cmd_fixed_points(o);
        if (cl->parsed()) return cmd_classify(o);
        if (ns->parsed()) return cmd_ns(o);
        if (orbit->parsed()) return cmd_orbit(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (mle->parsed()) return cmd_mle(o);
        if (regions->parsed()) return cmd_regions(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args));
}
