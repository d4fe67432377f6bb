#include "conerotor/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conerotor/analysis.hpp"
#include "conerotor/errors.hpp"

namespace conerotor {

namespace {

constexpr double kPi = std::numbers::pi;

// Guard against a representation-boundary duration/step ratio flooring one
// step short.
long step_count(double duration, double h) {
    return static_cast<long>(std::floor(duration / h + 1e-9));
}

}  // namespace

void InputSchedule::validate() const {
    if (segments.empty()) {
        throw std::invalid_argument("schedule: needs at least one segment");
    }
    if (segments.front().start_time > 0.0) {
        throw std::invalid_argument(
            "schedule: first segment must start at t <= 0");
    }
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (!std::isfinite(segments[k].start_time)) {
            throw std::invalid_argument("schedule: non-finite start time");
        }
        if (k > 0 &&
            segments[k].start_time <= segments[k - 1].start_time) {
            throw std::invalid_argument(
                "schedule: segment start times must be strictly increasing");
        }
        for (const ArmIndex arm : kArms) {
            if (auto bad =
                    validate_command(segments[k].commands[arm.value() - 1])) {
                throw std::invalid_argument(
                    "schedule: segment " + std::to_string(k) + " arm " +
                    std::to_string(arm.value()) + ": " + bad->message);
            }
        }
    }
}

const ScheduleSegment& InputSchedule::active_at(double t) const {
    const ScheduleSegment* active = &segments.front();
    for (const auto& seg : segments) {
        if (seg.start_time <= t) {
            active = &seg;
        } else {
            break;
        }
    }
    return *active;
}

ActuatorInputs InputSchedule::inputs_at(double t) const {
    const ScheduleSegment& seg = active_at(t);
    ActuatorInputs inputs;
    for (int k = 0; k < 4; ++k) {
        inputs.arms[k].command = seg.commands[k];
    }
    return inputs;
}

double InputSchedule::max_abs_cone_rate() const {
    double m = 0.0;
    for (const auto& seg : segments) {
        for (const auto& cmd : seg.commands) {
            m = std::max(m, std::abs(cmd.cone_rate));
        }
    }
    return m;
}

void SimConfig::validate(const InputSchedule& schedule) const {
    if (!std::isfinite(step_size) || step_size <= 0) {
        throw std::invalid_argument("sim: step_size must be > 0");
    }
    if (!std::isfinite(duration) || duration < step_size) {
        throw std::invalid_argument("sim: duration must be >= step_size");
    }
    if (record_decimation < 1) {
        throw std::invalid_argument("sim: record_decimation must be >= 1");
    }
    params.validate();
    schedule.validate();
    if (step_size * schedule.max_abs_cone_rate() >= 0.1) {
        throw std::invalid_argument(
            "sim: step_size * max cone rate must stay below 0.1 rad per step");
    }
}

RigidState rk4_step(const RigidState& state, const ActuatorInputs& inputs,
                    const VehicleParams& params, double h) {
    using V = Eigen::Matrix<double, RigidState::kDim, 1>;
    const V y = state.to_vector();
    const V k1 = state_derivative(state, inputs, params).to_vector();
    const V k2 =
        state_derivative(RigidState::from_vector(y + 0.5 * h * k1), inputs,
                         params)
            .to_vector();
    const V k3 =
        state_derivative(RigidState::from_vector(y + 0.5 * h * k2), inputs,
                         params)
            .to_vector();
    const V k4 =
        state_derivative(RigidState::from_vector(y + h * k3), inputs, params)
            .to_vector();
    return RigidState::from_vector(y +
                                   h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

SimTrace run(const SimConfig& config, const InputSchedule& schedule) {
    config.validate(schedule);

    const long steps = step_count(config.duration, config.step_size);
    SimTrace trace;
    const std::size_t expect = static_cast<std::size_t>(
                                   steps / config.record_decimation) + 1;
    trace.time.reserve(expect);
    trace.states.reserve(expect);
    trace.accelerations.reserve(expect);
    trace.thrusts.reserve(expect);
    trace.z_rates.reserve(expect);
    trace.hub_speeds.reserve(expect);

    RigidState state = config.initial;
    for (long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * config.step_size;
        const ActuatorInputs inputs = schedule.inputs_at(t);
        try {
            if (k % config.record_decimation == 0) {
                trace.time.push_back(t);
                trace.states.push_back(state);
                trace.accelerations.push_back(
                    translational_acceleration(state, inputs, config.params));
                std::array<Vec3, 4> thrusts;
                std::array<double, 4> z_rates;
                std::array<double, 4> hub_speeds;
                for (const ArmIndex arm : kArms) {
                    const int j = arm.value() - 1;
                    const ArmCommand& cmd = inputs.arms[j].command;
                    thrusts[j] =
                        thrust_magnitude(arm, cmd, config.params) *
                        thrust_direction_body(arm, state.cone_angles[j],
                                              config.params.cone_angle);
                    z_rates[j] = effective_z_rate(arm, cmd, config.params);
                    hub_speeds[j] =
                        hub_velocity_body(arm, cmd, config.params).x();
                }
                trace.thrusts.push_back(thrusts);
                trace.z_rates.push_back(z_rates);
                trace.hub_speeds.push_back(hub_speeds);
            }
            if (k < steps) {
                state = rk4_step(state, inputs, config.params,
                                 config.step_size);
            }
        } catch (const SingularityError& e) {
            trace.aborted = true;
            trace.abort_time = t;
            trace.abort_reason = e.what();
            break;
        }
    }
    return trace;
}

Scenario symmetric_hover_scenario(double cone_angle,
                                  const VehicleParams& params) {
    const HoverSolution sol = symmetric_hover_rates(cone_angle, params);
    if (!sol.feasible) {
        throw std::invalid_argument(
            "symmetric hover is infeasible at cone_angle >= pi/4");
    }
    Scenario sc;
    sc.config.params = params;
    sc.config.params.cone_angle = cone_angle;
    sc.config.params.validate();
    sc.config.duration = 2.0;
    sc.config.initial.cone_angles = {0, kPi, 0, kPi};

    ScheduleSegment seg;
    for (const ArmIndex arm : kArms) {
        ArmCommand cmd;
        cmd.cone_rate = 0.0;
        cmd.rotor_rate = arm.value() % 2 == 1 ? sol.rate_13 : sol.rate_24;
        cmd.mode = CommandMode::kNormal;
        seg.commands[arm.value() - 1] = cmd;
    }
    sc.schedule.segments = {seg};
    return sc;
}

Scenario ft_hover_scenario(double cone_angle, const VehicleParams& params,
                           const std::array<double, 4>& initial_cone_angles) {
    const FtHoverSolution sol = ft_hover_rate(cone_angle, params);
    Scenario sc;
    sc.config.params = params;
    sc.config.params.cone_angle = cone_angle;
    sc.config.params.validate();
    sc.config.duration = 16.0 * 2.0 * kPi / sol.spin_rate;
    sc.config.initial.cone_angles = initial_cone_angles;

    ScheduleSegment seg;
    for (const ArmIndex arm : kArms) {
        ArmCommand cmd;
        cmd.cone_rate = sol.spin_rate;
        cmd.rotor_rate = 0.0;
        cmd.mode = CommandMode::kFaultTolerant;
        seg.commands[arm.value() - 1] = cmd;
    }
    sc.schedule.segments = {seg};
    return sc;
}

}  // namespace conerotor
