#pragma once

#include <array>
#include <string>
#include <vector>

#include "conerotor/dynamics.hpp"

namespace conerotor {

// Piecewise-constant open-loop input program. Segments must start at t = 0
// and be strictly ordered; each holds until the next begins.
struct ScheduleSegment {
    double start_time = 0.0;
    std::array<ArmCommand, 4> commands;
};

struct InputSchedule {
    std::vector<ScheduleSegment> segments;

    // Throws std::invalid_argument on an empty, unordered, or late-starting
    // schedule or any inadmissible command.
    void validate() const;
    const ScheduleSegment& active_at(double t) const;
    ActuatorInputs inputs_at(double t) const;
    double max_abs_cone_rate() const;
};

struct SimConfig {
    double step_size = 1e-4;  // s
    double duration = 1.0;    // s
    int record_decimation = 1;
    RigidState initial;
    VehicleParams params;

    // Also enforces the resolution guard: step_size * max cone rate < 0.1 rad.
    void validate(const InputSchedule& schedule) const;
};

// Recorded rows at steps 0, d, 2d, ... Derived quantities are evaluated at
// the recorded state with the inputs active at that time.
struct SimTrace {
    std::vector<double> time;
    std::vector<RigidState> states;
    std::vector<Vec3> accelerations;              // world v-dot
    std::vector<std::array<Vec3, 4>> thrusts;     // body-frame thrust vectors
    std::vector<std::array<double, 4>> z_rates;   // effective z-rates
    std::vector<std::array<double, 4>> hub_speeds;  // hub velocity x, rotor frame

    bool aborted = false;
    double abort_time = 0.0;
    std::string abort_reason;

    std::size_t rows() const { return time.size(); }
};

// One classical fourth-order step with the inputs held constant.
RigidState rk4_step(const RigidState& state, const ActuatorInputs& inputs,
                    const VehicleParams& params, double h);

// Fixed-step integration over [0, duration]. A singularity inside the run
// flags the trace aborted and returns the rows accumulated so far.
SimTrace run(const SimConfig& config, const InputSchedule& schedule);

struct Scenario {
    SimConfig config;
    InputSchedule schedule;
};

// Four-rotor hover with two arms folded to the opposite cone edge. Throws
// std::invalid_argument at cone_angle >= pi/4 where the folded pair cannot
// balance. Duration 2 s.
Scenario symmetric_hover_scenario(double cone_angle,
                                  const VehicleParams& params);

// Rotors stopped, all cone motors spinning at the fault-tolerant hover rate.
// Starts level and at rest with the given motor phases (synchronized by
// default). Throws std::invalid_argument at cone_angle <= 0 (no vertical
// force modulation) or > pi/4. Duration 16 spin periods.
Scenario ft_hover_scenario(
    double cone_angle, const VehicleParams& params,
    const std::array<double, 4>& initial_cone_angles = {0, 0, 0, 0});

}  // namespace conerotor
