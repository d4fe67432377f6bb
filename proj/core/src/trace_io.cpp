#include "conerotor/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "conerotor/version.hpp"

namespace conerotor {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // keep \n endings everywhere
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

Vec3 vec3_from(const json& j, const std::string& what) {
    require(j.is_array() && j.size() == 3, what + " must be [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec3_to(const Vec3& v) {
    return json::array({v.x(), v.y(), v.z()});
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<std::string> trace_columns() {
    std::vector<std::string> cols = {
        "time_s",
        "pos_x_m", "pos_y_m", "pos_z_m",
        "vel_x_mps", "vel_y_mps", "vel_z_mps",
        "roll_rad", "pitch_rad", "yaw_rad",
        "rate_p_radps", "rate_q_radps", "rate_r_radps",
    };
    for (int k = 1; k <= 4; ++k) {
        cols.push_back("cone_angle_" + std::to_string(k) + "_rad");
    }
    cols.insert(cols.end(), {"acc_x_mss", "acc_y_mss", "acc_z_mss"});
    for (int k = 1; k <= 4; ++k) {
        const std::string base = "thrust_" + std::to_string(k);
        cols.push_back(base + "_x_n");
        cols.push_back(base + "_y_n");
        cols.push_back(base + "_z_n");
    }
    for (int k = 1; k <= 4; ++k) {
        cols.push_back("z_rate_" + std::to_string(k) + "_radps");
    }
    for (int k = 1; k <= 4; ++k) {
        cols.push_back("hub_vel_" + std::to_string(k) + "_mps");
    }
    return cols;
}

void write_trace_csv(const SimTrace& trace, const std::string& path) {
    std::ofstream out = open_out(path);
    const auto cols = trace_columns();
    for (std::size_t k = 0; k < cols.size(); ++k) {
        out << (k ? "," : "") << cols[k];
    }
    out << "\n";
    for (std::size_t r = 0; r < trace.rows(); ++r) {
        const RigidState& s = trace.states[r];
        std::vector<double> row;
        row.reserve(cols.size());
        row.push_back(trace.time[r]);
        for (int k = 0; k < 3; ++k) row.push_back(s.position[k]);
        for (int k = 0; k < 3; ++k) row.push_back(s.velocity[k]);
        row.insert(row.end(),
                   {s.attitude.roll, s.attitude.pitch, s.attitude.yaw});
        for (int k = 0; k < 3; ++k) row.push_back(s.body_rates[k]);
        for (int k = 0; k < 4; ++k) row.push_back(s.cone_angles[k]);
        for (int k = 0; k < 3; ++k) row.push_back(trace.accelerations[r][k]);
        for (int a = 0; a < 4; ++a) {
            for (int k = 0; k < 3; ++k) {
                row.push_back(trace.thrusts[r][a][k]);
            }
        }
        for (int a = 0; a < 4; ++a) row.push_back(trace.z_rates[r][a]);
        for (int a = 0; a < 4; ++a) row.push_back(trace.hub_speeds[r][a]);
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << (k ? "," : "") << format_double(row[k]);
        }
        out << "\n";
    }
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] == name) return data[k];
    }
    throw std::invalid_argument("csv: no column named \"" + name + "\"");
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("csv: cannot open " + path);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("csv: " + path + " is empty");
    }
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) table.columns.push_back(cell);
    require(!table.columns.empty(), "csv: no header in " + path);
    table.data.resize(table.columns.size());

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream row(line);
        std::size_t k = 0;
        while (std::getline(row, cell, ',')) {
            require(k < table.columns.size(),
                    "csv: too many fields at line " + std::to_string(line_no));
            try {
                table.data[k].push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("csv: bad number \"" + cell +
                                            "\" at line " +
                                            std::to_string(line_no));
            }
            ++k;
        }
        require(k == table.columns.size(),
                "csv: short row at line " + std::to_string(line_no));
    }
    return table;
}

SimSetup load_schedule_file(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), "schedule: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("schedule: " + path + ": " + e.what());
    }
    require(j.is_object(), "schedule: " + path + ": not a JSON object");

    SimSetup setup;
    require(j.contains("duration") && j["duration"].is_number(),
            "schedule: duration (s) is required");
    setup.config.duration = j["duration"].get<double>();
    if (j.contains("step_size")) {
        setup.config.step_size = j["step_size"].get<double>();
    }
    if (j.contains("decimation")) {
        require(j["decimation"].is_number_integer(),
                "schedule: decimation must be an integer");
        setup.config.record_decimation = j["decimation"].get<int>();
    }
    if (j.contains("initial")) {
        const json& init = j["initial"];
        require(init.is_object(), "schedule: initial must be an object");
        RigidState& s = setup.config.initial;
        if (init.contains("position")) {
            s.position = vec3_from(init["position"], "initial.position");
        }
        if (init.contains("velocity")) {
            s.velocity = vec3_from(init["velocity"], "initial.velocity");
        }
        if (init.contains("attitude")) {
            const Vec3 att = vec3_from(init["attitude"], "initial.attitude");
            s.attitude = {att[0], att[1], att[2]};
        }
        if (init.contains("body_rates")) {
            s.body_rates = vec3_from(init["body_rates"], "initial.body_rates");
        }
        if (init.contains("cone_angles")) {
            const json& ca = init["cone_angles"];
            require(ca.is_array() && ca.size() == 4,
                    "schedule: initial.cone_angles must have 4 entries");
            for (int k = 0; k < 4; ++k) {
                s.cone_angles[k] = ca[k].get<double>();
            }
        }
    }

    require(j.contains("segments") && j["segments"].is_array() &&
                !j["segments"].empty(),
            "schedule: segments array is required");
    for (const json& seg : j["segments"]) {
        ScheduleSegment out;
        require(seg.is_object() && seg.contains("start_time") &&
                    seg.contains("arms"),
                "schedule: each segment needs start_time and arms");
        out.start_time = seg["start_time"].get<double>();
        const json& arms = seg["arms"];
        require(arms.is_array() && arms.size() == 4,
                "schedule: arms must list 4 commands");
        for (int k = 0; k < 4; ++k) {
            const json& a = arms[k];
            ArmCommand cmd;
            if (a.contains("cone_rate")) {
                cmd.cone_rate = a["cone_rate"].get<double>();
            }
            if (a.contains("rotor_rate")) {
                cmd.rotor_rate = a["rotor_rate"].get<double>();
            }
            if (a.contains("mode")) {
                const std::string mode = a["mode"].get<std::string>();
                if (mode == "normal") {
                    cmd.mode = CommandMode::kNormal;
                } else if (mode == "fault_tolerant") {
                    cmd.mode = CommandMode::kFaultTolerant;
                } else {
                    throw std::invalid_argument(
                        "schedule: mode must be normal or fault_tolerant");
                }
            }
            out.commands[k] = cmd;
        }
        setup.schedule.segments.push_back(out);
    }
    setup.schedule.validate();
    return setup;
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    json j;
    j["tool"] = std::string(kToolName);
    j["version"] = std::string(kVersion);
    j["command"] = manifest.command;
    json args = json::object();
    for (const auto& [key, value] : manifest.args) args[key] = value;
    j["args"] = args;
    const VehicleParams& p = manifest.params;
    j["params"] = {
        {"arm_length", p.arm_length},
        {"link_offset", p.link_offset},
        {"gravity", p.gravity},
        {"total_mass", p.total_mass},
        {"body_inertia", vec3_to(p.body_inertia)},
        {"cone_inertia", vec3_to(p.cone_inertia)},
        {"rotor_inertia", vec3_to(p.rotor_inertia)},
        {"drag_coeff", p.drag_coeff},
        {"thrust_coeff", p.thrust_coeff},
        {"cone_angle", p.cone_angle},
    };
    j["outputs"] = manifest.outputs;
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace conerotor
