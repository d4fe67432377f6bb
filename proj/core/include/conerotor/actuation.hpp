#pragma once

#include <optional>
#include <string>

#include "conerotor/frames.hpp"
#include "conerotor/params.hpp"

namespace conerotor {

enum class CommandMode { kNormal, kFaultTolerant };

// Per-arm input: cone-motor rate (signed) and rotor-motor rate (never
// negative). In normal mode the rotor must dominate the cone motor by
// kMinRateRatio; fault-tolerant mode stops the rotor entirely and flies on
// the cone motor alone.
struct ArmCommand {
    double cone_rate = 0.0;   // rad/s
    double rotor_rate = 0.0;  // rad/s, >= 0
    CommandMode mode = CommandMode::kNormal;
};

inline constexpr double kMinRateRatio = 10.0;

struct CommandViolation {
    enum class Kind {
        kNonFinite,
        kNegativeRotorRate,
        kRotorBelowRatio,     // normal mode: rotor_rate < kMinRateRatio * |cone_rate|
        kRotorRateNotZero,    // fault-tolerant mode requires rotor_rate == 0
    };
    Kind kind;
    std::string message;
};

// nullopt means the command is admissible for its mode.
std::optional<CommandViolation> validate_command(const ArmCommand& cmd);

// Mode-agnostic admissibility of a rate pair: accepted iff some mode accepts
// it, i.e. rotor_rate == 0 (fault-tolerant) or rotor_rate >= ratio * |cone_rate|
// with rotor_rate > 0 (normal).
std::optional<CommandViolation> validate_rate_pair(double cone_rate,
                                                   double rotor_rate);

// Angular rate of the propeller relative to the body, in the rotor frame.
// The cone motor contributes a tilted component; the rotor motor spins about
// the rotor z-axis. Both carry the arm's sign.
Vec3 propeller_rate_body(ArmIndex arm, const ArmCommand& cmd,
                         const VehicleParams& params);

// z-component of propeller_rate_body: the rate that generates thrust.
double effective_z_rate(ArmIndex arm, const ArmCommand& cmd,
                        const VehicleParams& params);

// Quadratic rate-to-force/-moment maps on the effective z-rate.
double thrust_magnitude(ArmIndex arm, const ArmCommand& cmd,
                        const VehicleParams& params);
double drag_moment_magnitude(ArmIndex arm, const ArmCommand& cmd,
                             const VehicleParams& params);

// Rotor hub translational velocity relative to the body, rotor frame. Driven
// by the cone motor sweeping the hub offset; logged for diagnostics, excluded
// from force generation.
Vec3 hub_velocity_body(ArmIndex arm, const ArmCommand& cmd,
                       const VehicleParams& params);

// Arm root position in the body frame: arms 1..4 at +x, +y, -x, -y.
Vec3 arm_position(ArmIndex arm, const VehicleParams& params);

struct ArmWrench {
    Vec3 force;   // body frame, N
    Vec3 moment;  // body frame about the origin, N m (thrust lever + drag)
};

// Thrust along the arm's current axis plus the aerodynamic drag moment. The
// drag always opposes the propeller spin, whichever sign the effective rate
// has.
ArmWrench arm_force_and_moment_body(ArmIndex arm, double cone_motor_angle,
                                    const ArmCommand& cmd,
                                    const VehicleParams& params);

// Drag reaction on the body as a vector (the moment part contributed by drag
// alone). Exposed separately because the rigid-body assembly needs it.
Vec3 drag_moment_body(ArmIndex arm, double cone_motor_angle,
                      const ArmCommand& cmd, const VehicleParams& params);

}  // namespace conerotor
