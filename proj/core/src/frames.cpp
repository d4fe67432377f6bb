#include "conerotor/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "conerotor/errors.hpp"

namespace conerotor {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double angle, const char* what) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument(std::string(what) + ": non-finite angle");
    }
}

}  // namespace

SingularityError::SingularityError(double pitch_rad)
    : std::domain_error("pitch " + std::to_string(pitch_rad) +
                        " rad is inside the Euler singularity guard band"),
      pitch_(pitch_rad) {}

ArmIndex::ArmIndex(int value) : value_(value) {
    if (value < 1 || value > 4) {
        throw std::invalid_argument("arm index must be 1..4, got " +
                                    std::to_string(value));
    }
}

Mat3 rot_x(double angle) {
    require_finite(angle, "rot_x");
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r << 1, 0, 0,
         0, c, -s,
         0, s, c;
    return r;
}

Mat3 rot_y(double angle) {
    require_finite(angle, "rot_y");
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r << c, 0, s,
         0, 1, 0,
         -s, 0, c;
    return r;
}

Mat3 rot_z(double angle) {
    require_finite(angle, "rot_z");
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r << c, -s, 0,
         s, c, 0,
         0, 0, 1;
    return r;
}

Mat3 body_to_cone(ArmIndex arm, double cone_angle) {
    return rot_z(-kPi + kPi / 2.0 * arm.value()) * rot_x(-cone_angle);
}

Mat3 cone_to_rotor(ArmIndex arm, double cone_motor_angle, double cone_angle) {
    return rot_z(arm.sign() * cone_motor_angle) * rot_x(cone_angle);
}

Vec3 thrust_direction_body(ArmIndex arm, double cone_motor_angle,
                           double cone_angle) {
    return body_to_cone(arm, cone_angle) *
           cone_to_rotor(arm, cone_motor_angle, cone_angle) * Vec3::UnitZ();
}

double included_angle(double cone_motor_angle, double cone_angle) {
    const double s_phi = std::sin(cone_angle);
    const double s_half = std::sin(cone_motor_angle / 2.0);
    const double c = 1.0 - 2.0 * s_phi * s_phi * s_half * s_half;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

Vec3 euler_rates(const EulerAngles& attitude, const Vec3& body_rates) {
    if (std::abs(attitude.pitch) >= kPi / 2.0 - kPitchGuard) {
        throw SingularityError(attitude.pitch);
    }
    const double sr = std::sin(attitude.roll), cr = std::cos(attitude.roll);
    const double tp = std::tan(attitude.pitch);
    const double sec = 1.0 / std::cos(attitude.pitch);
    Mat3 m;
    m << 1, sr * tp, cr * tp,
         0, cr, -sr,
         0, sr * sec, cr * sec;
    return m * body_rates;
}

Mat3 body_to_world(const EulerAngles& attitude) {
    require_finite(attitude.roll, "body_to_world");
    require_finite(attitude.pitch, "body_to_world");
    require_finite(attitude.yaw, "body_to_world");
    return rot_z(attitude.yaw) * rot_y(attitude.pitch) * rot_x(attitude.roll);
}

}  // namespace conerotor
