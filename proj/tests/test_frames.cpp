#include <cmath>
#include <numbers>

#include <doctest.h>

#include "conerotor/errors.hpp"
#include "conerotor/frames.hpp"

#include "test_util.hpp"

using namespace conerotor;
using test_util::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("frames");

TEST_CASE("elementary rotations at zero are the identity") {
    CHECK(max_abs_diff(rot_x(0), Mat3::Identity()) == 0.0);
    CHECK(max_abs_diff(rot_y(0), Mat3::Identity()) == 0.0);
    CHECK(max_abs_diff(rot_z(0), Mat3::Identity()) == 0.0);
}

TEST_CASE("elementary rotations are right-handed") {
    CHECK(max_abs_diff(rot_x(kPi / 2) * Vec3::UnitY(), Vec3::UnitZ()) < 1e-15);
    CHECK(max_abs_diff(rot_y(kPi / 2) * Vec3::UnitZ(), Vec3::UnitX()) < 1e-15);
    CHECK(max_abs_diff(rot_z(kPi / 2) * Vec3::UnitX(), Vec3::UnitY()) < 1e-15);
}

TEST_CASE("elementary rotation entries match the standard forms") {
    const double a = 0.37;
    const double c = std::cos(a), s = std::sin(a);
    Mat3 x, y, z;
    x << 1, 0, 0, 0, c, -s, 0, s, c;
    y << c, 0, s, 0, 1, 0, -s, 0, c;
    z << c, -s, 0, s, c, 0, 0, 0, 1;
    CHECK(max_abs_diff(rot_x(a), x) == 0.0);
    CHECK(max_abs_diff(rot_y(a), y) == 0.0);
    CHECK(max_abs_diff(rot_z(a), z) == 0.0);
}

TEST_CASE("rotations are orthonormal with unit determinant") {
    auto gen = test_util::rng();
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int k = 0; k < 200; ++k) {
        const Mat3 r = rot_x(angle(gen)) * rot_y(angle(gen)) * rot_z(angle(gen));
        CHECK(max_abs_diff(r.transpose() * r, Mat3::Identity()) < 1e-14);
        CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("non-finite angles are rejected") {
    CHECK_THROWS_AS(rot_x(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(rot_y(INFINITY), std::invalid_argument);
    CHECK_THROWS_AS(rot_z(-INFINITY), std::invalid_argument);
}

TEST_CASE("arm indices carry alternating handedness") {
    CHECK(ArmIndex{1}.sign() == -1.0);
    CHECK(ArmIndex{2}.sign() == 1.0);
    CHECK(ArmIndex{3}.sign() == -1.0);
    CHECK(ArmIndex{4}.sign() == 1.0);
    CHECK_THROWS_AS(ArmIndex{0}, std::invalid_argument);
    CHECK_THROWS_AS(ArmIndex{5}, std::invalid_argument);
}

TEST_CASE("body_to_cone places the four arms") {
    const double phi = kPi / 6;
    // Arm 2 needs no z rotation; arm 4 at zero cone angle is a half turn.
    CHECK(max_abs_diff(body_to_cone(ArmIndex{2}, phi), rot_x(-phi)) < 1e-15);
    CHECK(max_abs_diff(body_to_cone(ArmIndex{4}, 0.0), rot_z(kPi)) < 1e-15);
    CHECK(max_abs_diff(body_to_cone(ArmIndex{1}, phi),
                       rot_z(-kPi / 2) * rot_x(-phi)) == 0.0);
    CHECK(max_abs_diff(body_to_cone(ArmIndex{3}, phi),
                       rot_z(kPi / 2) * rot_x(-phi)) == 0.0);
}

TEST_CASE("cone_to_rotor composes the signed motor angle with the tilt") {
    const double phi = 0.52;
    CHECK(max_abs_diff(cone_to_rotor(ArmIndex{3}, 0.0, phi), rot_x(phi)) ==
          0.0);
    // Odd arms turn the motor angle negative.
    CHECK(max_abs_diff(cone_to_rotor(ArmIndex{1}, kPi / 2, phi),
                       rot_z(-kPi / 2) * rot_x(phi)) == 0.0);
    // Half turn flips the y-component of the tilted z-axis.
    const Vec3 v = cone_to_rotor(ArmIndex{2}, kPi, phi) * Vec3::UnitZ();
    CHECK(max_abs_diff(v, Vec3{0, std::sin(phi), std::cos(phi)}) < 1e-15);
}

TEST_CASE("chain product equals its independent expansion") {
    auto gen = test_util::rng(7u);
    std::uniform_real_distribution<double> motor(-8.0, 8.0);
    std::uniform_real_distribution<double> cone(0.0, kPi / 4);
    for (int k = 0; k < 100; ++k) {
        const double theta = motor(gen);
        const double phi = cone(gen);
        for (const ArmIndex arm : kArms) {
            const Mat3 chain = body_to_cone(arm, phi) *
                               cone_to_rotor(arm, theta, phi);
            const Mat3 expanded = rot_z(-kPi + kPi / 2 * arm.value()) *
                                  rot_x(-phi) * rot_z(arm.sign() * theta) *
                                  rot_x(phi);
            CHECK(max_abs_diff(chain, expanded) < 1e-14);
        }
    }
}

TEST_CASE("thrust axis is vertical at zero motor angle") {
    for (const ArmIndex arm : kArms) {
        for (double phi : {0.0, 0.2, kPi / 4}) {
            CHECK(max_abs_diff(thrust_direction_body(arm, 0.0, phi),
                               Vec3::UnitZ()) < 1e-15);
        }
    }
}

TEST_CASE("half-turn thrust axes of the even arms mirror each other") {
    const double phi = 0.31;
    const double s2 = std::sin(2 * phi), c2 = std::cos(2 * phi);
    CHECK(max_abs_diff(thrust_direction_body(ArmIndex{2}, kPi, phi),
                       Vec3{0, s2, c2}) < 1e-15);
    CHECK(max_abs_diff(thrust_direction_body(ArmIndex{4}, kPi, phi),
                       Vec3{0, -s2, c2}) < 1e-15);
}

TEST_CASE("thrust axis stays unit length") {
    auto gen = test_util::rng(11u);
    std::uniform_real_distribution<double> motor(-20.0, 20.0);
    std::uniform_real_distribution<double> cone(0.0, kPi / 4);
    for (int k = 0; k < 500; ++k) {
        const double phi = cone(gen);
        for (const ArmIndex arm : kArms) {
            const double n =
                thrust_direction_body(arm, motor(gen), phi).norm();
            CHECK(std::abs(n - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("included angle endpoints and midpoint") {
    for (double phi : {0.05, 0.3, kPi / 4}) {
        CHECK(included_angle(0.0, phi) == 0.0);
        CHECK(std::abs(included_angle(kPi, phi) - 2 * phi) < 1e-12);
    }
    CHECK(included_angle(kPi / 2, kPi / 6) ==
          doctest::Approx(std::acos(0.75)).epsilon(1e-12));
}

TEST_CASE("included angle is even and turn-periodic in the motor angle") {
    auto gen = test_util::rng(13u);
    std::uniform_real_distribution<double> motor(0.0, 2 * kPi);
    std::uniform_real_distribution<double> cone(0.0, kPi / 4);
    for (int k = 0; k < 200; ++k) {
        const double theta = motor(gen);
        const double phi = cone(gen);
        const double kappa = included_angle(theta, phi);
        CHECK(kappa >= 0.0);
        CHECK(kappa <= 2 * phi + 1e-12);
        CHECK(included_angle(-theta, phi) == doctest::Approx(kappa));
        CHECK(included_angle(2 * kPi - theta, phi) ==
              doctest::Approx(kappa).epsilon(1e-12));
    }
}

TEST_CASE("included angle matches the measured thrust-axis deflection") {
    auto gen = test_util::rng(17u);
    std::uniform_real_distribution<double> motor(0.0, 2 * kPi);
    std::uniform_real_distribution<double> cone(0.01, kPi / 4);
    for (int k = 0; k < 300; ++k) {
        const double theta = motor(gen);
        const double phi = cone(gen);
        for (const ArmIndex arm : kArms) {
            const Vec3 axis = thrust_direction_body(arm, theta, phi);
            const double measured =
                std::acos(std::clamp(axis.dot(Vec3::UnitZ()), -1.0, 1.0));
            CHECK(std::abs(measured - included_angle(theta, phi)) < 1e-9);
        }
    }
}

TEST_CASE("euler rates reduce to body rates at level attitude") {
    const Vec3 rates{0.4, -0.2, 0.9};
    CHECK(max_abs_diff(euler_rates({}, rates), rates) == 0.0);
}

TEST_CASE("a quarter roll maps pitch-axis spin onto yaw") {
    const Vec3 out = euler_rates({kPi / 2, 0.0, 0.0}, {0.0, 0.7, 0.0});
    CHECK(std::abs(out[0]) < 1e-16);
    CHECK(std::abs(out[1]) < 1e-16);
    CHECK(out[2] == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("euler rates invert against the independent rate matrix") {
    auto gen = test_util::rng(19u);
    std::uniform_real_distribution<double> att(-1.2, 1.2);
    std::uniform_real_distribution<double> rate(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const EulerAngles e{att(gen), att(gen), att(gen)};
        const Vec3 w{rate(gen), rate(gen), rate(gen)};
        const double sr = std::sin(e.roll), cr = std::cos(e.roll);
        const double tp = std::tan(e.pitch), sec = 1.0 / std::cos(e.pitch);
        Mat3 m;
        m << 1, sr * tp, cr * tp, 0, cr, -sr, 0, sr * sec, cr * sec;
        const Vec3 reconstructed = m.inverse() * euler_rates(e, w);
        CHECK(max_abs_diff(reconstructed, w) < 1e-10);
    }
}

TEST_CASE("the pitch guard band rejects near-vertical pitch") {
    CHECK_THROWS_AS(euler_rates({0.0, kPi / 2 - 1e-9, 0.0}, Vec3::Zero()),
                    SingularityError);
    CHECK_THROWS_AS(euler_rates({0.0, -(kPi / 2 - 1e-7), 0.0}, Vec3::Zero()),
                    SingularityError);
    CHECK_NOTHROW(euler_rates({0.0, kPi / 2 - 2e-6, 0.0}, Vec3::Zero()));
}

TEST_CASE("body_to_world special attitudes") {
    CHECK(max_abs_diff(body_to_world({}), Mat3::Identity()) == 0.0);
    CHECK(max_abs_diff(body_to_world({0.0, 0.0, 0.8}), rot_z(0.8)) == 0.0);
    CHECK(max_abs_diff(body_to_world({kPi, 0.0, 0.0}),
                       Vec3{1, -1, -1}.asDiagonal().toDenseMatrix()) < 1e-15);
}

TEST_CASE("body_to_world matches the expanded yaw-pitch-roll entries") {
    auto gen = test_util::rng(23u);
    std::uniform_real_distribution<double> att(-1.5, 1.5);
    for (int k = 0; k < 100; ++k) {
        const EulerAngles e{att(gen), att(gen), att(gen)};
        const double sr = std::sin(e.roll), cr = std::cos(e.roll);
        const double sp = std::sin(e.pitch), cp = std::cos(e.pitch);
        const double sy = std::sin(e.yaw), cy = std::cos(e.yaw);
        Mat3 m;
        m << cp * cy, sr * sp * cy - cr * sy, cr * sp * cy + sr * sy,
             cp * sy, sr * sp * sy + cr * cy, cr * sp * sy - sr * cy,
             -sp, sr * cp, cr * cp;
        const Mat3 r = body_to_world(e);
        CHECK(max_abs_diff(r, m) < 1e-14);
        CHECK(max_abs_diff(r.transpose() * r, Mat3::Identity()) < 1e-14);
    }
}

TEST_SUITE_END();
