// Command-line front end: open-loop simulation, hover solvers, spectra, and
// the cone-angle design study. Exit codes: 0 success, 2 bad input, 3 numeric
// failure (singularity or solver breakdown).

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conerotor/analysis.hpp"
#include "conerotor/errors.hpp"
#include "conerotor/simulator.hpp"
#include "conerotor/tradeoff.hpp"
#include "conerotor/trace_io.hpp"
#include "conerotor/version.hpp"

namespace {

using namespace conerotor;

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNumeric = 3;

// Angles are radians unless the token carries a "deg" suffix.
double parse_angle(const std::string& token) {
    std::string body = token;
    double scale = 1.0;
    if (body.size() > 3 && body.substr(body.size() - 3) == "deg") {
        body = body.substr(0, body.size() - 3);
        scale = kPi / 180.0;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad angle \"" + token + "\"");
    }
    if (used != body.size()) {
        throw std::invalid_argument("bad angle \"" + token + "\"");
    }
    return value * scale;
}

// "start:stop:count" with inclusive endpoints; each bound may use "deg".
std::vector<double> parse_angle_range(const std::string& token) {
    std::vector<std::string> parts;
    std::stringstream ss(token);
    std::string cell;
    while (std::getline(ss, cell, ':')) parts.push_back(cell);
    if (parts.size() != 3) {
        throw std::invalid_argument("range must be start:stop:count");
    }
    const double start = parse_angle(parts[0]);
    const double stop = parse_angle(parts[1]);
    long count = 0;
    try {
        count = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range count \"" + parts[2] + "\"");
    }
    if (count < 1) {
        throw std::invalid_argument("range count must be >= 1");
    }
    if (stop < start) {
        throw std::invalid_argument("range is empty (stop < start)");
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        values.push_back(start);
        return values;
    }
    for (long k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(count - 1);
        values.push_back(start + t * (stop - start));
    }
    return values;
}

struct AngleListOptions {
    std::vector<std::string> phis;
    std::string range;

    std::vector<double> resolve() const {
        std::vector<double> values;
        for (const std::string& p : phis) values.push_back(parse_angle(p));
        if (!range.empty()) {
            const auto swept = parse_angle_range(range);
            values.insert(values.end(), swept.begin(), swept.end());
        }
        if (values.empty()) {
            throw std::invalid_argument("no cone angles given (use --phi or --range)");
        }
        return values;
    }
};

void add_angle_options(CLI::App* cmd, AngleListOptions& opts) {
    cmd->add_option("--phi", opts.phis,
                    "cone angle (radians; append deg for degrees); repeatable");
    cmd->add_option("--range", opts.range,
                    "cone-angle sweep start:stop:count (inclusive)");
}

VehicleParams params_from(const std::string& config_path) {
    if (config_path.empty()) return VehicleParams{};
    return load_params_file(config_path);
}

// Lines go to the file when --out is set, otherwise to stdout. A manifest is
// written next to a file output.
void emit(const std::string& out_path, const std::string& content,
          const RunManifest& manifest) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << content;
    out.close();
    RunManifest m = manifest;
    m.outputs.push_back(out_path);
    write_manifest(m, out_path + ".manifest.json");
}

int run_simulate(const std::string& config_path,
                 const std::string& schedule_path,
                 const std::string& out_path) {
    const VehicleParams params = params_from(config_path);
    SimSetup setup = load_schedule_file(schedule_path);
    setup.config.params = params;

    const SimTrace trace = run(setup.config, setup.schedule);
    write_trace_csv(trace, out_path);

    RunManifest manifest;
    manifest.command = "simulate";
    manifest.params = params;
    manifest.args = {{"config", config_path.empty() ? "<defaults>" : config_path},
                     {"schedule", schedule_path},
                     {"step_size", format_double(setup.config.step_size)},
                     {"duration", format_double(setup.config.duration)},
                     {"decimation",
                      std::to_string(setup.config.record_decimation)}};
    manifest.outputs = {out_path};
    write_manifest(manifest, out_path + ".manifest.json");

    if (trace.aborted) {
        std::cerr << "aborted at t=" << format_double(trace.abort_time) << ": "
                  << trace.abort_reason << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int run_hover(const std::string& config_path, const AngleListOptions& angles,
              const std::string& out_path) {
    const VehicleParams params = params_from(config_path);
    std::string csv = "phi_rad,omega_13,omega_24,feasible\n";
    for (double phi : angles.resolve()) {
        const HoverSolution sol = symmetric_hover_rates(phi, params);
        csv += format_double(phi) + "," + format_double(sol.rate_13) + "," +
               format_double(sol.rate_24) + "," +
               (sol.feasible ? "1" : "0") + "\n";
    }
    RunManifest manifest;
    manifest.command = "hover";
    manifest.params = params;
    manifest.args = {{"config", config_path.empty() ? "<defaults>" : config_path},
                     {"range", angles.range}};
    emit(out_path, csv, manifest);
    return kExitOk;
}

int run_ft_hover(const std::string& config_path,
                 const AngleListOptions& angles, bool simulate,
                 const std::string& out_path) {
    const VehicleParams params = params_from(config_path);
    std::string csv = simulate
        ? "phi_rad,theta_dot_c,amp_mss,dominant_freq_hz,dominant_power_mss2\n"
        : "phi_rad,theta_dot_c,amp_mss\n";
    const std::vector<double> phis = angles.resolve();
    for (double phi : phis) {
        const FtHoverSolution sol = ft_hover_rate(phi, params);
        csv += format_double(phi) + "," + format_double(sol.spin_rate) + "," +
               format_double(sol.accel_amplitude);
        if (simulate) {
            const Scenario sc = ft_hover_scenario(phi, params);
            const SimTrace trace = run(sc.config, sc.schedule);
            if (trace.aborted) {
                throw std::runtime_error("simulation aborted at phi=" +
                                         format_double(phi) + ": " +
                                         trace.abort_reason);
            }
            // Drop the last sample so the window spans whole periods.
            std::vector<double> accel(trace.rows() - 1);
            for (std::size_t k = 0; k + 1 < trace.rows(); ++k) {
                accel[k] = trace.accelerations[k].z();
            }
            const Spectrum spec = periodogram(
                accel, 1.0 / (sc.config.step_size *
                              sc.config.record_decimation));
            const DominantTone tone = dominant_tone(spec);
            csv += "," + format_double(tone.frequency) + "," +
                   format_double(tone.power);
        }
        csv += "\n";
    }
    RunManifest manifest;
    manifest.command = "ft-hover";
    manifest.params = params;
    manifest.args = {{"config", config_path.empty() ? "<defaults>" : config_path},
                     {"range", angles.range},
                     {"simulate", simulate ? "true" : "false"}};
    emit(out_path, csv, manifest);
    return kExitOk;
}

int run_psd(const std::string& trace_path, const std::string& column,
            const std::string& out_path) {
    const CsvTable table = read_csv(trace_path);
    const std::vector<double>& times = table.column("time_s");
    const std::vector<double>& values = table.column(column);
    const Spectrum spec = periodogram(times, values);

    std::string csv = "frequency_hz,power\n";
    for (std::size_t k = 0; k < spec.size(); ++k) {
        csv += format_double(spec.frequency[k]) + "," +
               format_double(spec.power[k]) + "\n";
    }
    RunManifest manifest;
    manifest.command = "psd";
    manifest.params = VehicleParams{};
    manifest.args = {{"trace", trace_path}, {"column", column}};
    emit(out_path, csv, manifest);

    const DominantTone tone = dominant_tone(spec);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "dominant_frequency_hz=" << format_double(tone.frequency)
         << " dominant_power=" << format_double(tone.power) << "\n";
    return kExitOk;
}

int run_tradeoff(const std::string& config_path, std::size_t mu_points,
                 const std::string& out_path) {
    const VehicleParams params = params_from(config_path);
    const std::vector<double> weights = default_weight_grid(mu_points);
    const auto frontier = pareto_frontier_from_weights(weights, params);

    std::string csv = "mu,phi_rad,neg_range_m,centripetal_force_n,cost\n";
    for (const ParetoPoint& pt : frontier) {
        csv += format_double(pt.weight) + "," +
               format_double(pt.cone_angle) + "," +
               format_double(-pt.range) + "," +
               format_double(pt.centripetal_force) + "," +
               format_double(pt.cost) + "\n";
    }
    RunManifest manifest;
    manifest.command = "tradeoff";
    manifest.params = params;
    manifest.args = {{"config", config_path.empty() ? "<defaults>" : config_path},
                     {"mu_points", std::to_string(mu_points)}};
    emit(out_path, csv, manifest);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cone-rotor tilt quadrotor: simulation and analysis"};
    app.set_version_flag("--version", std::string(kToolName) + " " +
                                          std::string(kVersion));
    app.require_subcommand(1);

    int result = kExitOk;

    std::string sim_config, sim_schedule, sim_out;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "integrate an open-loop command schedule");
    simulate->add_option("--config", sim_config,
                         "vehicle parameter file (JSON); defaults if omitted");
    simulate->add_option("--schedule", sim_schedule, "schedule file (JSON)")
        ->required();
    simulate->add_option("--out", sim_out, "trace CSV path")->required();
    simulate->callback([&] {
        result = run_simulate(sim_config, sim_schedule, sim_out);
    });

    std::string hover_config, hover_out;
    AngleListOptions hover_angles;
    CLI::App* hover = app.add_subcommand(
        "hover", "rotor rates for the level two-pair hover");
    hover->add_option("--config", hover_config, "vehicle parameter file");
    add_angle_options(hover, hover_angles);
    hover->add_option("--out", hover_out, "CSV path (stdout if omitted)");
    hover->callback(
        [&] { result = run_hover(hover_config, hover_angles, hover_out); });

    std::string ft_config, ft_out;
    AngleListOptions ft_angles;
    bool ft_simulate = false;
    CLI::App* ft = app.add_subcommand(
        "ft-hover", "stopped-rotor hover rate and oscillation");
    ft->add_option("--config", ft_config, "vehicle parameter file");
    add_angle_options(ft, ft_angles);
    ft->add_flag("--simulate", ft_simulate,
                 "also fly each point and report the dominant spectral tone");
    ft->add_option("--out", ft_out, "CSV path (stdout if omitted)");
    ft->callback([&] {
        result = run_ft_hover(ft_config, ft_angles, ft_simulate, ft_out);
    });

    std::string psd_trace, psd_column, psd_out;
    CLI::App* psd = app.add_subcommand(
        "psd", "one-sided periodogram of a trace column");
    psd->add_option("--trace", psd_trace, "trace CSV path")->required();
    psd->add_option("--column", psd_column, "column name")->required();
    psd->add_option("--out", psd_out, "spectrum CSV path (stdout if omitted)");
    psd->callback(
        [&] { result = run_psd(psd_trace, psd_column, psd_out); });

    std::string tr_config, tr_out;
    std::size_t tr_points = 64;
    CLI::App* tradeoff = app.add_subcommand(
        "tradeoff", "cone-angle design frontier via weighted sweeps");
    tradeoff->add_option("--config", tr_config, "vehicle parameter file");
    tradeoff->add_option("--mu-points", tr_points, "number of weights")
        ->capture_default_str();
    tradeoff->add_option("--out", tr_out, "CSV path (stdout if omitted)");
    tradeoff->callback(
        [&] { result = run_tradeoff(tr_config, tr_points, tr_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    } catch (const SingularityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return result;
}
