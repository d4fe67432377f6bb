#pragma once

#include <array>

#include "conerotor/actuation.hpp"
#include "conerotor/frames.hpp"
#include "conerotor/params.hpp"

namespace conerotor {

// Rigid-body state plus the four unwrapped cone motor angles.
struct RigidState {
    Vec3 position = Vec3::Zero();  // world, m
    Vec3 velocity = Vec3::Zero();  // world, m/s
    EulerAngles attitude;
    Vec3 body_rates = Vec3::Zero();  // p, q, r in body frame, rad/s
    std::array<double, 4> cone_angles{};  // rad, not wrapped

    static constexpr int kDim = 16;
    Eigen::Matrix<double, kDim, 1> to_vector() const;
    static RigidState from_vector(const Eigen::Matrix<double, kDim, 1>& v);
};

struct StateDerivative {
    Vec3 position_rate;
    Vec3 acceleration;          // world frame
    Vec3 attitude_rate;         // roll/pitch/yaw rates
    Vec3 angular_acceleration;  // body frame
    std::array<double, 4> cone_angle_rates;

    Eigen::Matrix<double, RigidState::kDim, 1> to_vector() const;
};

// One arm's command plus the rate-of-change of its inputs. Piecewise-constant
// schedules leave the accelerations at zero.
struct ArmInput {
    ArmCommand command;
    double cone_accel = 0.0;   // rad/s^2
    double rotor_accel = 0.0;  // rad/s^2
};

struct ActuatorInputs {
    std::array<ArmInput, 4> arms;
};

// Total angular rate of the propeller of arm i in the rotor frame: body rate
// mapped down the chain, cone-motor spin, rotor spin.
Vec3 propeller_inertial_rate(ArmIndex arm, const RigidState& state,
                             const ActuatorInputs& inputs,
                             const VehicleParams& params);

// Its time derivative under the closure used throughout: input rates and
// frame motion are kept, the body angular acceleration feedback is dropped
// (the sub-body inertias are orders below the body's).
Vec3 propeller_rate_derivative(ArmIndex arm, const RigidState& state,
                               const ActuatorInputs& inputs,
                               const VehicleParams& params);

// Angular rate of the cone assembly of arm i in the cone frame, and its
// derivative under the same closure. The cone frame is fixed in the body, so
// only the motor rate enters the derivative.
Vec3 cone_inertial_rate(ArmIndex arm, const RigidState& state,
                        const ActuatorInputs& inputs,
                        const VehicleParams& params);
Vec3 cone_rate_derivative(ArmIndex arm, const ActuatorInputs& inputs);

// Torque the cone structure must apply to the propeller (rotor frame):
// gyroscopic terms minus the aerodynamic drag torque.
Vec3 rotor_gyro_torque(ArmIndex arm, const RigidState& state,
                       const ActuatorInputs& inputs,
                       const VehicleParams& params);

// Torque the body must apply to the cone assembly (cone frame): its own
// gyroscopic terms plus the rotor torque mapped up one level.
Vec3 cone_reaction_torque(ArmIndex arm, const RigidState& state,
                          const ActuatorInputs& inputs,
                          const VehicleParams& params);

// Body angular acceleration. The applied torque is the summed arm wrench
// moment (thrust levers + drag); the sub-body chains feed back only their
// inertial part here, since the drag reaction already entered through the
// wrench.
Vec3 body_angular_acceleration(const RigidState& state,
                               const ActuatorInputs& inputs,
                               const VehicleParams& params);

// World-frame acceleration: rotated thrust sum over mass, minus gravity.
Vec3 translational_acceleration(const RigidState& state,
                                const ActuatorInputs& inputs,
                                const VehicleParams& params);

// Full derivative for integration. Throws SingularityError if pitch is inside
// the guard band and std::invalid_argument on inadmissible commands.
StateDerivative state_derivative(const RigidState& state,
                                 const ActuatorInputs& inputs,
                                 const VehicleParams& params);

}  // namespace conerotor
