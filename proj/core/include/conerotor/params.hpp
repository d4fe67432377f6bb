#pragma once

#include <string>

#include "conerotor/frames.hpp"

namespace conerotor {

// Vehicle constants. Defaults describe the reference 0.429 kg build; inertias
// are principal-axis diagonals. Units: m, kg, N/kg, kg m^2, N s^2, N m s^2.
struct VehicleParams {
    double arm_length = 0.1785;
    double link_offset = 0.01;  // lateral offset of the rotor hub from the cone axis
    double gravity = 9.8;
    double total_mass = 0.429;
    Vec3 body_inertia{2.238e-3, 2.985e-3, 4.804e-3};
    Vec3 cone_inertia{1e-10, 1e-10, 2.030e-5};
    Vec3 rotor_inertia{1e-10, 1e-10, 2.030e-5};
    double drag_coeff = 2.423e-7;
    double thrust_coeff = 8.048e-6;
    double cone_angle = 0.0;  // rad, in [0, pi/4]

    // Throws std::invalid_argument on out-of-range values. Sub-body inertias
    // and gravity may be zero (useful for reduced models); everything else
    // must be strictly positive.
    void validate() const;
};

// Loads a JSON key/value file with the field names above (inertias as
// 3-arrays). Missing keys keep their defaults; unknown keys are an error.
// The result is validated.
VehicleParams load_params_file(const std::string& path);

}  // namespace conerotor
