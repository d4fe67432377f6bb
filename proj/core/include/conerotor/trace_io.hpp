#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conerotor/simulator.hpp"

namespace conerotor {

// All files are written with 17-significant-digit floats and \n endings so
// identical runs produce identical bytes.

std::string format_double(double value);

// Column-ordered CSV of a trace: time, state, world acceleration, per-arm
// thrust vectors, effective z-rates, hub speeds.
std::vector<std::string> trace_columns();
void write_trace_csv(const SimTrace& trace, const std::string& path);

// Generic numeric CSV reader for the tool side (spectra, traces).
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // column-major

    const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

// Simulation input file: step size, duration, decimation, optional initial
// state, and the command segments. Validated on load.
struct SimSetup {
    SimConfig config;  // params left at defaults; caller substitutes
    InputSchedule schedule;
};

SimSetup load_schedule_file(const std::string& path);

// Key/value provenance record written next to every produced file. The args
// are ordered name/value pairs; no timestamps, so identical runs match.
struct RunManifest {
    std::string command;
    VehicleParams params;
    std::vector<std::pair<std::string, std::string>> args;
    std::vector<std::string> outputs;
};

void write_manifest(const RunManifest& manifest, const std::string& path);

}  // namespace conerotor
