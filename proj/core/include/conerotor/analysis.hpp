#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "conerotor/params.hpp"

namespace conerotor {

// Rotor rates that hold the vehicle level with arms 1/3 upright and arms 2/4
// folded to the far cone edge. Infeasible once the folded pair's vertical
// component vanishes (cone_angle >= pi/4); rates are NaN there.
struct HoverSolution {
    double cone_angle = 0.0;
    double rate_13 = 0.0;  // rad/s, upright pair
    double rate_24 = 0.0;  // rad/s, folded pair
    bool feasible = false;
};

HoverSolution symmetric_hover_rates(double cone_angle,
                                    const VehicleParams& params);

// Hover with rotors stopped and all cone motors spinning at spin_rate.
struct FtHoverSolution {
    double cone_angle = 0.0;
    double spin_rate = 0.0;         // rad/s, cone motor rate
    double accel_amplitude = 0.0;   // m/s^2, vertical oscillation about zero
    double oscillation_rate = 0.0;  // rad/s, equals spin_rate
};

// Closed form from period-averaging the vertical force. Throws
// std::invalid_argument for cone_angle outside (0, pi/4].
FtHoverSolution ft_hover_rate(double cone_angle, const VehicleParams& params);

// Independent route: bisection on the net per-period vertical impulse,
// evaluated by nested quadrature. Agrees with the closed form to ~1e-9.
double ft_hover_rate_numeric(double cone_angle, const VehicleParams& params);

// Vertical acceleration at time t during a cone-spun hover started at zero
// motor angle: peak at t = 0, trough half a turn later, period-mean zero at
// the hover rate.
double vertical_accel_profile(double t, double spin_rate, double cone_angle,
                              const VehicleParams& params);

// One-sided mean-removed periodogram. power[k] is the bin's contribution to
// the signal variance (sum over bins recovers the variance; a pure tone of
// amplitude A on a bin carries A^2/2). Bin 0 is the removed mean and stays 0.
struct Spectrum {
    std::vector<double> frequency;  // Hz
    std::vector<double> power;      // input units squared
    double bin_width = 0.0;         // Hz

    std::size_t size() const { return frequency.size(); }
};

// Rectangular window, no taper; sized for integer-period windows. Throws
// std::invalid_argument on fewer than 2 samples or a non-positive rate.
Spectrum periodogram(std::span<const double> samples, double sample_rate);

// Convenience over a sampled series; validates uniform spacing.
Spectrum periodogram(std::span<const double> times,
                     std::span<const double> values);

struct DominantTone {
    std::size_t bin = 0;
    double frequency = 0.0;  // Hz
    double power = 0.0;
};

// Largest bin excluding the (empty) mean bin.
DominantTone dominant_tone(const Spectrum& spectrum);

// Simulated oscillation strength across cone angles: for each angle, fly the
// cone-spun hover, take the periodogram of vertical acceleration, keep the
// dominant tone. Failures are recorded per point and the sweep continues.
struct OscillationPowerPoint {
    double cone_angle = 0.0;
    double spin_rate = 0.0;  // rad/s
    double power = 0.0;      // (m/s^2)^2
    bool ok = false;
    std::string error;
};

std::vector<OscillationPowerPoint> oscillation_power_curve(
    std::span<const double> cone_angles, const VehicleParams& params);

}  // namespace conerotor
