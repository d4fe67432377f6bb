#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "conerotor/actuation.hpp"
#include "conerotor/frames.hpp"
#include "conerotor/params.hpp"
#include "test_util.hpp"

using namespace conerotor;
using test_util::max_abs_diff;
using test_util::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;

ArmCommand normal_cmd(double cone_rate, double rotor_rate) {
    return ArmCommand{cone_rate, rotor_rate, CommandMode::kNormal};
}

ArmCommand ft_cmd(double cone_rate) {
    return ArmCommand{cone_rate, 0.0, CommandMode::kFaultTolerant};
}
}  // namespace

TEST_SUITE("actuation") {

TEST_CASE("default parameters pass validation") {
    VehicleParams params;
    CHECK_NOTHROW(params.validate());
    CHECK(params.total_mass == doctest::Approx(0.429));
    CHECK(params.thrust_coeff == doctest::Approx(8.048e-6));
    CHECK(params.drag_coeff == doctest::Approx(2.423e-7));
    CHECK(params.arm_length == doctest::Approx(0.1785));
    CHECK(params.link_offset == doctest::Approx(0.01));
    CHECK(params.gravity == doctest::Approx(9.8));
    CHECK(params.cone_angle == 0.0);
}

TEST_CASE("parameter validation rejects bad values") {
    VehicleParams params;
    params.total_mass = -1.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);

    params = VehicleParams{};
    params.thrust_coeff = 0.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);

    params = VehicleParams{};
    params.cone_angle = kPi / 4 + 0.01;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);

    params = VehicleParams{};
    params.body_inertia.y() = 0.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);

    // Zero gravity and zero sub-body inertias are legitimate configurations
    // (used by the conservation checks), so they must pass.
    params = VehicleParams{};
    params.gravity = 0.0;
    params.cone_inertia.setZero();
    params.rotor_inertia.setZero();
    CHECK_NOTHROW(params.validate());
}

TEST_CASE("command gate accepts the two admissible regimes") {
    CHECK_FALSE(validate_command(normal_cmd(0.0, 361.4)).has_value());
    CHECK_FALSE(validate_command(normal_cmd(5.0, 50.0)).has_value());
    CHECK_FALSE(validate_command(normal_cmd(-5.0, 50.0)).has_value());
    CHECK_FALSE(validate_command(ft_cmd(399.5)).has_value());
    CHECK_FALSE(validate_command(ft_cmd(-399.5)).has_value());
    // Boundary: rotor rate exactly ten times the cone rate.
    CHECK_FALSE(validate_command(normal_cmd(40.0, 400.0)).has_value());
}

TEST_CASE("command gate rejects the slow-rotor gap") {
    auto v = validate_command(normal_cmd(50.0, 400.0));
    REQUIRE(v.has_value());
    CHECK(v->kind == CommandViolation::Kind::kRotorBelowRatio);

    v = validate_command(normal_cmd(0.0, -10.0));
    REQUIRE(v.has_value());
    CHECK(v->kind == CommandViolation::Kind::kNegativeRotorRate);

    v = validate_command(normal_cmd(1.0, 0.0));
    REQUIRE(v.has_value());
    CHECK(v->kind == CommandViolation::Kind::kRotorBelowRatio);

    v = validate_command(ft_cmd(10.0));
    CHECK_FALSE(v.has_value());
    ArmCommand bad = ft_cmd(10.0);
    bad.rotor_rate = 1.0;
    v = validate_command(bad);
    REQUIRE(v.has_value());
    CHECK(v->kind == CommandViolation::Kind::kRotorRateNotZero);

    bad = normal_cmd(0.0, std::nan(""));
    v = validate_command(bad);
    REQUIRE(v.has_value());
    CHECK(v->kind == CommandViolation::Kind::kNonFinite);
}

TEST_CASE("mode-agnostic pair check matches the union of the two gates") {
    auto gen = test_util::rng();
    std::uniform_real_distribution<double> rate(-600.0, 600.0);
    for (int k = 0; k < 1000; ++k) {
        const double cone_rate = rate(gen);
        const double rotor_rate = rate(gen);
        const bool pair_ok = !validate_rate_pair(cone_rate, rotor_rate);
        const bool normal_ok =
            !validate_command(normal_cmd(cone_rate, rotor_rate));
        const bool ft_ok = !validate_command(
            ArmCommand{cone_rate, rotor_rate, CommandMode::kFaultTolerant});
        CHECK(pair_ok == (normal_ok || ft_ok));
    }
}

TEST_CASE("propeller body-relative rate: pure rotor spin") {
    VehicleParams params;
    params.cone_angle = kPi / 6;
    const Vec3 w = propeller_rate_body(ArmIndex(3),
                                       normal_cmd(0.0, 100.0), params);
    CHECK(max_abs_diff(w, Vec3(0.0, 0.0, -100.0)) < 1e-12);

    const Vec3 w4 = propeller_rate_body(ArmIndex(4),
                                        normal_cmd(0.0, 100.0), params);
    CHECK(max_abs_diff(w4, Vec3(0.0, 0.0, 100.0)) < 1e-12);
}

TEST_CASE("propeller body-relative rate: cone sweep splits on the tilt") {
    VehicleParams params;
    params.cone_angle = kPi / 6;
    const Vec3 w = propeller_rate_body(ArmIndex(2), ft_cmd(10.0), params);
    CHECK(max_abs_diff(w, Vec3(0.0, 5.0, 10.0 * std::cos(kPi / 6))) < 1e-12);
}

TEST_CASE("propeller rate is independent of the cone motor angle") {
    // The same vector must come out of the explicit frame-chain transport
    // at any motor angle.
    VehicleParams params;
    auto gen = test_util::rng();
    std::uniform_real_distribution<double> angle(-8.0, 8.0);
    std::uniform_real_distribution<double> cone(0.0, kPi / 4);
    std::uniform_real_distribution<double> rate(-20.0, 20.0);
    for (int k = 0; k < 200; ++k) {
        params.cone_angle = cone(gen);
        const double theta = angle(gen);
        const double theta_dot = rate(gen);
        const double rotor_rate = std::abs(rate(gen)) * 12.0;
        for (const ArmIndex arm : kArms) {
            const double s = arm.sign();
            const Mat3 to_rotor =
                cone_to_rotor(arm, theta, params.cone_angle);
            const Vec3 chain =
                to_rotor.transpose() * Vec3(0.0, 0.0, s * theta_dot) +
                Vec3(0.0, 0.0, s * rotor_rate);
            const Vec3 got = propeller_rate_body(
                arm, normal_cmd(theta_dot, rotor_rate), params);
            CHECK(max_abs_diff(got, chain) < 1e-12);
        }
    }
}

TEST_CASE("effective thrust-axis rate combines cone and rotor spin") {
    VehicleParams params;
    params.cone_angle = kPi / 6;
    const ArmCommand cmd = normal_cmd(10.0, 100.0);
    const double expected = 10.0 * std::cos(kPi / 6) + 100.0;
    CHECK(effective_z_rate(ArmIndex(2), cmd, params) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(effective_z_rate(ArmIndex(1), cmd, params) ==
          doctest::Approx(-expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(108.66).epsilon(1e-4));

    // Matches the z component of the full body-relative rate vector.
    for (const ArmIndex arm : kArms) {
        const Vec3 w = propeller_rate_body(arm, cmd, params);
        CHECK(w.z() ==
              doctest::Approx(effective_z_rate(arm, cmd, params))
                  .epsilon(1e-12));
    }
}

TEST_CASE("thrust magnitude at the level hover rate carries quarter weight") {
    VehicleParams params;
    const double rate = std::sqrt(params.total_mass * params.gravity /
                                  (4.0 * params.thrust_coeff));
    const double thrust =
        thrust_magnitude(ArmIndex(1), normal_cmd(0.0, rate), params);
    CHECK(rel_diff(thrust, params.total_mass * params.gravity / 4.0) < 1e-12);
    CHECK(thrust == doctest::Approx(1.0511).epsilon(1e-3));

    CHECK(thrust_magnitude(ArmIndex(2), normal_cmd(0.0, 0.0), params) == 0.0);

    // Quadratic in the spin rate.
    const double doubled =
        thrust_magnitude(ArmIndex(1), normal_cmd(0.0, 2.0 * rate), params);
    CHECK(rel_diff(doubled, 4.0 * thrust) < 1e-12);
}

TEST_CASE("drag moment tracks thrust through the coefficient ratio") {
    VehicleParams params;
    params.cone_angle = kPi / 10;
    auto gen = test_util::rng();
    std::uniform_real_distribution<double> rate(50.0, 500.0);
    for (int k = 0; k < 50; ++k) {
        const ArmCommand cmd = normal_cmd(0.0, rate(gen));
        for (const ArmIndex arm : kArms) {
            const double thrust = thrust_magnitude(arm, cmd, params);
            const double drag = drag_moment_magnitude(arm, cmd, params);
            CHECK(rel_diff(drag, thrust * params.drag_coeff /
                                     params.thrust_coeff) < 1e-12);
        }
    }
    const double drag361 =
        drag_moment_magnitude(ArmIndex(1), normal_cmd(0.0, 361.379), params);
    CHECK(drag361 == doctest::Approx(0.031643).epsilon(1e-4));
}

TEST_CASE("drag moment opposes the spin") {
    VehicleParams params;
    params.cone_angle = kPi / 8;
    const ArmCommand cmd = normal_cmd(0.0, 200.0);
    // Odd arms spin negative about the thrust axis, so the reaction on the
    // propeller points along +z; even arms the other way.
    const Vec3 d1 = drag_moment_body(ArmIndex(1), 0.4, cmd, params);
    const Vec3 d2 = drag_moment_body(ArmIndex(2), 0.4, cmd, params);
    const Vec3 axis1 = thrust_direction_body(ArmIndex(1), 0.4,
                                             params.cone_angle);
    CHECK(d1.dot(axis1) > 0.0);
    CHECK(d2.dot(thrust_direction_body(ArmIndex(2), 0.4,
                                       params.cone_angle)) < 0.0);
    CHECK(rel_diff(d1.norm(),
                   drag_moment_magnitude(ArmIndex(1), cmd, params)) < 1e-12);
}

TEST_CASE("hub velocity lies along the arm-normal body axis") {
    VehicleParams params;
    params.cone_angle = kPi / 6;
    const ArmCommand cmd = ft_cmd(100.0);
    const Vec3 v1 = hub_velocity_body(ArmIndex(1), cmd, params);
    const double mag = std::sin(kPi / 6) * params.link_offset * 100.0;
    CHECK(max_abs_diff(v1, Vec3(-mag, 0.0, 0.0)) < 1e-12);
    const Vec3 v2 = hub_velocity_body(ArmIndex(2), cmd, params);
    CHECK(max_abs_diff(v2, Vec3(mag, 0.0, 0.0)) < 1e-12);
    // No sweep, no hub motion.
    CHECK(hub_velocity_body(ArmIndex(3), normal_cmd(0.0, 300.0), params)
              .norm() == 0.0);
}

TEST_CASE("arm positions sit on the two body axes") {
    VehicleParams params;
    const double arm = params.arm_length;
    CHECK(max_abs_diff(arm_position(ArmIndex(1), params),
                       Vec3(arm, 0.0, 0.0)) == 0.0);
    CHECK(max_abs_diff(arm_position(ArmIndex(2), params),
                       Vec3(0.0, arm, 0.0)) == 0.0);
    CHECK(max_abs_diff(arm_position(ArmIndex(3), params),
                       Vec3(-arm, 0.0, 0.0)) == 0.0);
    CHECK(max_abs_diff(arm_position(ArmIndex(4), params),
                       Vec3(0.0, -arm, 0.0)) == 0.0);
}

TEST_CASE("single-arm wrench at hover rate") {
    VehicleParams params;
    const double rate = std::sqrt(params.total_mass * params.gravity /
                                  (4.0 * params.thrust_coeff));
    const ArmCommand cmd = normal_cmd(0.0, rate);
    const ArmWrench w =
        arm_force_and_moment_body(ArmIndex(1), 0.0, cmd, params);

    const double quarter = params.total_mass * params.gravity / 4.0;
    CHECK(max_abs_diff(w.force, Vec3(0.0, 0.0, quarter)) < 1e-12);

    // Thrust on the +x arm pitches nose down; the drag reaction adds +z yaw
    // for an odd arm.
    const double lever = -params.arm_length * quarter;
    const double drag = drag_moment_magnitude(ArmIndex(1), cmd, params);
    CHECK(max_abs_diff(w.moment, Vec3(0.0, lever, drag)) < 1e-12);
    CHECK(lever == doctest::Approx(-0.18762).epsilon(1e-4));

    const ArmWrench none = arm_force_and_moment_body(
        ArmIndex(2), 1.3, normal_cmd(0.0, 0.0), params);
    CHECK(none.force.norm() == 0.0);
    CHECK(none.moment.norm() == 0.0);
}

TEST_CASE("two-pair hover rates balance force and moment at any cone angle") {
    for (double phi : {0.0, 0.05, kPi / 12, kPi / 10, kPi / 8, kPi / 6,
                       0.7, kPi / 4 - 1e-3}) {
        VehicleParams params;
        params.cone_angle = phi;
        const double base = std::sqrt(params.total_mass * params.gravity /
                                      (4.0 * params.thrust_coeff));
        const double tilted = base / std::sqrt(std::cos(2.0 * phi));

        Vec3 force = Vec3::Zero();
        Vec3 moment = Vec3::Zero();
        for (const ArmIndex arm : kArms) {
            const bool upright = arm.value() % 2 == 1;
            const double rate = upright ? base : tilted;
            const double theta = upright ? 0.0 : kPi;
            const ArmWrench w = arm_force_and_moment_body(
                arm, theta, normal_cmd(0.0, rate), params);
            force += w.force;
            moment += w.moment;
        }
        const double weight = params.total_mass * params.gravity;
        CHECK(max_abs_diff(force, Vec3(0.0, 0.0, weight)) < 1e-9);
        CHECK(moment.norm() < 1e-9);
    }
}

TEST_CASE("total thrust points up when every rotor spins") {
    VehicleParams params;
    auto gen = test_util::rng();
    std::uniform_real_distribution<double> cone(0.0, kPi / 4);
    std::uniform_real_distribution<double> angle(-6.0, 6.0);
    std::uniform_real_distribution<double> rate(50.0, 500.0);
    for (int k = 0; k < 100; ++k) {
        params.cone_angle = cone(gen);
        Vec3 force = Vec3::Zero();
        for (const ArmIndex arm : kArms) {
            force += arm_force_and_moment_body(
                         arm, angle(gen), normal_cmd(0.0, rate(gen)), params)
                         .force;
        }
        CHECK(force.z() > 0.0);
    }
}

}  // TEST_SUITE
