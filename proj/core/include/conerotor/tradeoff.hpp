#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conerotor/params.hpp"

namespace conerotor {

// Design study over the cone half-angle: wider cones buy thrust-vectoring
// range but cost cone-motor load in the stopped-rotor hover.

// Circumferential sweep range of the rotor hub per motor turn, m.
double range_metric(double cone_angle, const VehicleParams& params);

// Centripetal load on the cone motor while hovering on the spinning cones, N.
// Strictly increasing in the cone angle.
double centripetal_force(double cone_angle, const VehicleParams& params);

// Scalarized objective: -range + weight * centripetal load.
double weighted_cost(double cone_angle, double weight,
                     const VehicleParams& params);

// Global minimizer of weighted_cost on [0, pi/4] by golden-section search
// (tolerance 1e-8) with an endpoint check, so boundary optima land exactly on
// 0 or pi/4.
double minimize_weighted_cost(double weight, const VehicleParams& params);

// Log-spaced weights covering both boundary regimes (the objectives sit about
// five decades apart in scale).
std::vector<double> default_weight_grid(std::size_t n = 64);

struct ParetoPoint {
    double cone_angle = 0.0;
    double range = 0.0;              // m
    double centripetal_force = 0.0;  // N
    double weight = 0.0;
    double cost = 0.0;
};

// Frontier via the weighted-sum sweep; points sorted by cone angle.
std::vector<ParetoPoint> pareto_frontier_from_weights(
    std::span<const double> weights, const VehicleParams& params);

// Frontier sampled directly in the design variable. Both objectives increase
// together, so every angle in [0, pi/4] is non-dominated; each point carries
// the weight at which it would win the scalarized problem.
std::vector<ParetoPoint> pareto_frontier_from_angles(
    std::span<const double> cone_angles, const VehicleParams& params);

// Stationarity inverse: the weight whose scalarized minimum lands on the
// given angle.
double matching_weight(double cone_angle, const VehicleParams& params);

}  // namespace conerotor
