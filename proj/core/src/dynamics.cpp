#include "conerotor/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "conerotor/errors.hpp"

namespace conerotor {

namespace {

Vec3 diag_mul(const Vec3& d, const Vec3& v) {
    return d.cwiseProduct(v);
}

const ArmInput& input_for(const ActuatorInputs& inputs, ArmIndex arm) {
    return inputs.arms[arm.value() - 1];
}

double cone_angle_of(const RigidState& state, ArmIndex arm) {
    return state.cone_angles[arm.value() - 1];
}

}  // namespace

Eigen::Matrix<double, RigidState::kDim, 1> RigidState::to_vector() const {
    Eigen::Matrix<double, kDim, 1> v;
    v << position, velocity, attitude.roll, attitude.pitch, attitude.yaw,
        body_rates, cone_angles[0], cone_angles[1], cone_angles[2],
        cone_angles[3];
    return v;
}

RigidState RigidState::from_vector(const Eigen::Matrix<double, kDim, 1>& v) {
    RigidState s;
    s.position = v.segment<3>(0);
    s.velocity = v.segment<3>(3);
    s.attitude = {v[6], v[7], v[8]};
    s.body_rates = v.segment<3>(9);
    s.cone_angles = {v[12], v[13], v[14], v[15]};
    return s;
}

Eigen::Matrix<double, RigidState::kDim, 1> StateDerivative::to_vector() const {
    Eigen::Matrix<double, RigidState::kDim, 1> v;
    v << position_rate, acceleration, attitude_rate, angular_acceleration,
        cone_angle_rates[0], cone_angle_rates[1], cone_angle_rates[2],
        cone_angle_rates[3];
    return v;
}

Vec3 propeller_inertial_rate(ArmIndex arm, const RigidState& state,
                             const ActuatorInputs& inputs,
                             const VehicleParams& params) {
    const ArmInput& in = input_for(inputs, arm);
    const Mat3 rotor_to_body =
        body_to_cone(arm, params.cone_angle) *
        cone_to_rotor(arm, cone_angle_of(state, arm), params.cone_angle);
    return rotor_to_body.transpose() * state.body_rates +
           propeller_rate_body(arm, in.command, params);
}

Vec3 propeller_rate_derivative(ArmIndex arm, const RigidState& state,
                               const ActuatorInputs& inputs,
                               const VehicleParams& params) {
    const ArmInput& in = input_for(inputs, arm);
    const Mat3 rotor_to_body =
        body_to_cone(arm, params.cone_angle) *
        cone_to_rotor(arm, cone_angle_of(state, arm), params.cone_angle);
    // The rotor frame turns relative to the body at the cone-motor spin, so
    // the body rate seen from it drifts by the transport term. The cone-spin
    // component keeps a fixed direction in the rotor frame; only its
    // magnitude rate survives.
    const double s = std::sin(params.cone_angle);
    const double c = std::cos(params.cone_angle);
    const Vec3 spin_axis{0, s, c};  // cone z-axis seen from the rotor frame
    const Vec3 rel_spin = arm.sign() * in.command.cone_rate * spin_axis;
    return -rel_spin.cross(rotor_to_body.transpose() * state.body_rates) +
           arm.sign() * in.cone_accel * spin_axis +
           Vec3{0, 0, arm.sign() * in.rotor_accel};
}

Vec3 cone_inertial_rate(ArmIndex arm, const RigidState& state,
                        const ActuatorInputs& inputs,
                        const VehicleParams& params) {
    const ArmInput& in = input_for(inputs, arm);
    return body_to_cone(arm, params.cone_angle).transpose() * state.body_rates +
           Vec3{0, 0, arm.sign() * in.command.cone_rate};
}

Vec3 cone_rate_derivative(ArmIndex arm, const ActuatorInputs& inputs) {
    return {0, 0, arm.sign() * input_for(inputs, arm).cone_accel};
}

Vec3 rotor_gyro_torque(ArmIndex arm, const RigidState& state,
                       const ActuatorInputs& inputs,
                       const VehicleParams& params) {
    const ArmInput& in = input_for(inputs, arm);
    const Vec3 w = propeller_inertial_rate(arm, state, inputs, params);
    const Vec3 w_dot = propeller_rate_derivative(arm, state, inputs, params);
    const double wz = effective_z_rate(arm, in.command, params);
    const Vec3 drag_on_rotor{0, 0, -params.drag_coeff * wz * std::abs(wz)};
    return diag_mul(params.rotor_inertia, w_dot) +
           w.cross(diag_mul(params.rotor_inertia, w)) - drag_on_rotor;
}

Vec3 cone_reaction_torque(ArmIndex arm, const RigidState& state,
                          const ActuatorInputs& inputs,
                          const VehicleParams& params) {
    const Vec3 w = cone_inertial_rate(arm, state, inputs, params);
    const Vec3 w_dot = cone_rate_derivative(arm, inputs);
    return diag_mul(params.cone_inertia, w_dot) +
           w.cross(diag_mul(params.cone_inertia, w)) +
           cone_to_rotor(arm, cone_angle_of(state, arm), params.cone_angle) *
               rotor_gyro_torque(arm, state, inputs, params);
}

Vec3 body_angular_acceleration(const RigidState& state,
                               const ActuatorInputs& inputs,
                               const VehicleParams& params) {
    Vec3 applied = Vec3::Zero();
    Vec3 chain = Vec3::Zero();
    for (const ArmIndex arm : kArms) {
        const ArmInput& in = input_for(inputs, arm);
        const double theta = cone_angle_of(state, arm);
        applied +=
            arm_force_and_moment_body(arm, theta, in.command, params).moment;
        // cone_reaction_torque carries the drag through the chain; the drag
        // reaction already sits in the applied wrench, so add it back here to
        // keep a single count.
        chain += body_to_cone(arm, params.cone_angle) *
                     cone_reaction_torque(arm, state, inputs, params) +
                 drag_moment_body(arm, theta, in.command, params);
    }
    const Vec3 gyro =
        state.body_rates.cross(diag_mul(params.body_inertia, state.body_rates));
    return (applied - gyro - chain).cwiseQuotient(params.body_inertia);
}

Vec3 translational_acceleration(const RigidState& state,
                                const ActuatorInputs& inputs,
                                const VehicleParams& params) {
    Vec3 thrust_body = Vec3::Zero();
    for (const ArmIndex arm : kArms) {
        const ArmInput& in = input_for(inputs, arm);
        thrust_body += thrust_magnitude(arm, in.command, params) *
                       thrust_direction_body(arm, cone_angle_of(state, arm),
                                             params.cone_angle);
    }
    return body_to_world(state.attitude) * thrust_body / params.total_mass +
           Vec3{0, 0, -params.gravity};
}

StateDerivative state_derivative(const RigidState& state,
                                 const ActuatorInputs& inputs,
                                 const VehicleParams& params) {
    for (const ArmIndex arm : kArms) {
        if (auto bad = validate_command(input_for(inputs, arm).command)) {
            throw std::invalid_argument("arm " + std::to_string(arm.value()) +
                                        ": " + bad->message);
        }
    }
    StateDerivative d;
    d.position_rate = state.velocity;
    d.acceleration = translational_acceleration(state, inputs, params);
    d.attitude_rate = euler_rates(state.attitude, state.body_rates);
    d.angular_acceleration = body_angular_acceleration(state, inputs, params);
    for (const ArmIndex arm : kArms) {
        d.cone_angle_rates[arm.value() - 1] =
            input_for(inputs, arm).command.cone_rate;
    }
    return d;
}

}  // namespace conerotor
