#include "conerotor/actuation.hpp"

#include <cmath>

namespace conerotor {

namespace {

std::optional<CommandViolation> violation(CommandViolation::Kind kind,
                                          std::string msg) {
    return CommandViolation{kind, std::move(msg)};
}

}  // namespace

std::optional<CommandViolation> validate_command(const ArmCommand& cmd) {
    if (!std::isfinite(cmd.cone_rate) || !std::isfinite(cmd.rotor_rate)) {
        return violation(CommandViolation::Kind::kNonFinite,
                         "command rates must be finite");
    }
    if (cmd.rotor_rate < 0) {
        return violation(CommandViolation::Kind::kNegativeRotorRate,
                         "rotor_rate must be >= 0");
    }
    if (cmd.mode == CommandMode::kFaultTolerant) {
        if (cmd.rotor_rate != 0.0) {
            return violation(CommandViolation::Kind::kRotorRateNotZero,
                             "fault-tolerant mode requires rotor_rate == 0");
        }
        return std::nullopt;
    }
    if (cmd.rotor_rate < kMinRateRatio * std::abs(cmd.cone_rate)) {
        return violation(
            CommandViolation::Kind::kRotorBelowRatio,
            "normal mode requires rotor_rate >= " +
                std::to_string(kMinRateRatio) + " * |cone_rate|");
    }
    return std::nullopt;
}

std::optional<CommandViolation> validate_rate_pair(double cone_rate,
                                                   double rotor_rate) {
    ArmCommand cmd{cone_rate, rotor_rate,
                   rotor_rate == 0.0 ? CommandMode::kFaultTolerant
                                     : CommandMode::kNormal};
    return validate_command(cmd);
}

Vec3 propeller_rate_body(ArmIndex arm, const ArmCommand& cmd,
                         const VehicleParams& params) {
    // Cone-motor spin mapped into the rotor frame, plus the rotor's own spin.
    // The spin lies on the cone-frame z-axis, so the motor angle drops out of
    // the map and any value (here 0) gives the same result.
    const Vec3 cone_spin{0, 0, arm.sign() * cmd.cone_rate};
    return cone_to_rotor(arm, 0.0, params.cone_angle).transpose() * cone_spin +
           Vec3{0, 0, arm.sign() * cmd.rotor_rate};
}

double effective_z_rate(ArmIndex arm, const ArmCommand& cmd,
                        const VehicleParams& params) {
    return arm.sign() *
           (cmd.cone_rate * std::cos(params.cone_angle) + cmd.rotor_rate);
}

double thrust_magnitude(ArmIndex arm, const ArmCommand& cmd,
                        const VehicleParams& params) {
    const double w = effective_z_rate(arm, cmd, params);
    return params.thrust_coeff * w * w;
}

double drag_moment_magnitude(ArmIndex arm, const ArmCommand& cmd,
                             const VehicleParams& params) {
    const double w = effective_z_rate(arm, cmd, params);
    return params.drag_coeff * w * w;
}

Vec3 hub_velocity_body(ArmIndex arm, const ArmCommand& cmd,
                       const VehicleParams& params) {
    return {arm.sign() * std::sin(params.cone_angle) * params.link_offset *
                cmd.cone_rate,
            0, 0};
}

Vec3 arm_position(ArmIndex arm, const VehicleParams& params) {
    static const Vec3 axes[4] = {Vec3::UnitX(), Vec3::UnitY(), -Vec3::UnitX(),
                                 -Vec3::UnitY()};
    return params.arm_length * axes[arm.value() - 1];
}

Vec3 drag_moment_body(ArmIndex arm, double cone_motor_angle,
                      const ArmCommand& cmd, const VehicleParams& params) {
    const double w = effective_z_rate(arm, cmd, params);
    const Vec3 axis =
        thrust_direction_body(arm, cone_motor_angle, params.cone_angle);
    // Opposes the spin: negative along the rotor axis for positive effective
    // rate, positive for negative.
    return -params.drag_coeff * w * std::abs(w) * axis;
}

ArmWrench arm_force_and_moment_body(ArmIndex arm, double cone_motor_angle,
                                    const ArmCommand& cmd,
                                    const VehicleParams& params) {
    const Vec3 axis =
        thrust_direction_body(arm, cone_motor_angle, params.cone_angle);
    const Vec3 force = thrust_magnitude(arm, cmd, params) * axis;
    const Vec3 moment = arm_position(arm, params).cross(force) +
                        drag_moment_body(arm, cone_motor_angle, cmd, params);
    return {force, moment};
}

}  // namespace conerotor
