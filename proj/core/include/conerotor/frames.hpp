#pragma once

#include <array>

#include <Eigen/Dense>

namespace conerotor {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// ZYX Euler angles, radians. Roll about x, pitch about y, yaw about z.
struct EulerAngles {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
};

// Arm number 1..4. Arms 1 and 3 lie on +-x of the body, arms 2 and 4 on +-y.
// sign() is -1 for odd arms and +1 for even arms; it sets the handedness of
// both motors on that arm so that adjacent propellers counter-rotate.
class ArmIndex {
public:
    explicit ArmIndex(int value);
    int value() const noexcept { return value_; }
    double sign() const noexcept { return value_ % 2 == 0 ? 1.0 : -1.0; }

private:
    int value_;
};

inline const std::array<ArmIndex, 4> kArms{ArmIndex{1}, ArmIndex{2},
                                           ArmIndex{3}, ArmIndex{4}};

// Elementary right-handed rotations. Throw std::invalid_argument on a
// non-finite angle.
Mat3 rot_x(double angle);
Mat3 rot_y(double angle);
Mat3 rot_z(double angle);

// Fixed transform from the cone-motor frame of arm i to the body frame:
// a z rotation placing the arm, then an x rotation tilting the cone axis
// inward by the cone half-angle.
Mat3 body_to_cone(ArmIndex arm, double cone_angle);

// Transform from the rotor frame to the cone frame of arm i. The cone motor
// angle enters with the arm's sign; the trailing x rotation undoes the tilt
// so that at zero motor angle the rotor axis is body-vertical.
Mat3 cone_to_rotor(ArmIndex arm, double cone_motor_angle, double cone_angle);

// Unit thrust axis of arm i in the body frame. Sweeps a cone of half-angle
// 2 * cone_angle about body z as the cone motor turns.
Vec3 thrust_direction_body(ArmIndex arm, double cone_motor_angle,
                           double cone_angle);

// Angle between the thrust axis and body z as a function of the cone motor
// angle. Ranges over [0, 2 * cone_angle]; the half-turn position gives the
// maximum exactly.
double included_angle(double cone_motor_angle, double cone_angle);

// Half-width of the band around +-pi/2 pitch treated as singular.
inline constexpr double kPitchGuard = 1e-6;

// Euler-angle rates from body angular rates. Throws SingularityError when
// |pitch| >= pi/2 - kPitchGuard.
Vec3 euler_rates(const EulerAngles& attitude, const Vec3& body_rates);

// Rotation taking body-frame vectors to the world frame (yaw-pitch-roll).
Mat3 body_to_world(const EulerAngles& attitude);

}  // namespace conerotor
