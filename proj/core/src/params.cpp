#include "conerotor/params.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace conerotor {

namespace {

void check(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("params: ") + msg);
}

bool all_finite(const Vec3& v) {
    return v.allFinite();
}

}  // namespace

void VehicleParams::validate() const {
    check(std::isfinite(arm_length) && arm_length > 0, "arm_length must be > 0");
    check(std::isfinite(link_offset) && link_offset > 0,
          "link_offset must be > 0");
    check(std::isfinite(gravity) && gravity >= 0, "gravity must be >= 0");
    check(std::isfinite(total_mass) && total_mass > 0, "total_mass must be > 0");
    check(all_finite(body_inertia) && (body_inertia.array() > 0).all(),
          "body_inertia must be > 0");
    check(all_finite(cone_inertia) && (cone_inertia.array() >= 0).all(),
          "cone_inertia must be >= 0");
    check(all_finite(rotor_inertia) && (rotor_inertia.array() >= 0).all(),
          "rotor_inertia must be >= 0");
    check(std::isfinite(drag_coeff) && drag_coeff > 0, "drag_coeff must be > 0");
    check(std::isfinite(thrust_coeff) && thrust_coeff > 0,
          "thrust_coeff must be > 0");
    check(std::isfinite(cone_angle) && cone_angle >= 0 &&
              cone_angle <= std::numbers::pi / 4.0,
          "cone_angle must be in [0, pi/4]");
}

VehicleParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("params: cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("params: " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("params: " + path + ": not a JSON object");
    }

    VehicleParams p;
    const auto scalar = [&](const char* key, double& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number()) {
            throw std::invalid_argument(std::string("params: ") + key +
                                        " must be a number");
        }
        out = j[key].get<double>();
        j.erase(key);
    };
    const auto triple = [&](const char* key, Vec3& out) {
        if (!j.contains(key)) return;
        const auto& v = j[key];
        if (!v.is_array() || v.size() != 3 || !v[0].is_number() ||
            !v[1].is_number() || !v[2].is_number()) {
            throw std::invalid_argument(std::string("params: ") + key +
                                        " must be an array of 3 numbers");
        }
        out = Vec3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
        j.erase(key);
    };

    scalar("arm_length", p.arm_length);
    scalar("link_offset", p.link_offset);
    scalar("gravity", p.gravity);
    scalar("total_mass", p.total_mass);
    triple("body_inertia", p.body_inertia);
    triple("cone_inertia", p.cone_inertia);
    triple("rotor_inertia", p.rotor_inertia);
    scalar("drag_coeff", p.drag_coeff);
    scalar("thrust_coeff", p.thrust_coeff);
    scalar("cone_angle", p.cone_angle);

    if (!j.empty()) {
        throw std::invalid_argument("params: unknown key \"" +
                                    j.begin().key() + "\" in " + path);
    }
    p.validate();
    return p;
}

}  // namespace conerotor
