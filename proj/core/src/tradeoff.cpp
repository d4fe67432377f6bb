#include "conerotor/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conerotor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoldenTol = 1e-8;

void require_angle(double cone_angle) {
    if (!std::isfinite(cone_angle) || cone_angle < 0 ||
        cone_angle > kPi / 4.0) {
        throw std::invalid_argument("cone_angle must be in [0, pi/4]");
    }
}

double force_prefactor(const VehicleParams& p) {
    return p.total_mass * p.total_mass * p.gravity * p.link_offset /
           (4.0 * p.thrust_coeff);
}

}  // namespace

double range_metric(double cone_angle, const VehicleParams& params) {
    require_angle(cone_angle);
    return 2.0 * kPi * params.link_offset * std::sin(cone_angle);
}

double centripetal_force(double cone_angle, const VehicleParams& params) {
    require_angle(cone_angle);
    const double c = std::cos(cone_angle);
    return force_prefactor(params) * std::sin(cone_angle) / (c * c * c);
}

double weighted_cost(double cone_angle, double weight,
                     const VehicleParams& params) {
    if (!std::isfinite(weight) || weight < 0) {
        throw std::invalid_argument("weight must be >= 0");
    }
    return -range_metric(cone_angle, params) +
           weight * centripetal_force(cone_angle, params);
}

double minimize_weighted_cost(double weight, const VehicleParams& params) {
    const auto cost = [&](double phi) {
        return weighted_cost(phi, weight, params);
    };
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = kPi / 4.0;
    double x1 = b - inv_golden * (b - a);
    double x2 = a + inv_golden * (b - a);
    double f1 = cost(x1), f2 = cost(x2);
    while (b - a > kGoldenTol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_golden * (b - a);
            f1 = cost(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_golden * (b - a);
            f2 = cost(x2);
        }
    }
    double best = 0.5 * (a + b);
    double best_cost = cost(best);
    // The optimum often sits on an interval end; snap there when it wins.
    for (double edge : {0.0, kPi / 4.0}) {
        const double edge_cost = cost(edge);
        if (edge_cost <= best_cost) {
            best = edge;
            best_cost = edge_cost;
        }
    }
    return best;
}

std::vector<double> default_weight_grid(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("weight grid needs at least 2 points");
    }
    const double lo = 1e-7, hi = 1e-2;
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n - 1);
        grid[k] = lo * std::pow(hi / lo, t);
    }
    return grid;
}

std::vector<ParetoPoint> pareto_frontier_from_weights(
    std::span<const double> weights, const VehicleParams& params) {
    std::vector<ParetoPoint> points;
    points.reserve(weights.size());
    for (double w : weights) {
        ParetoPoint pt;
        pt.weight = w;
        pt.cone_angle = minimize_weighted_cost(w, params);
        pt.range = range_metric(pt.cone_angle, params);
        pt.centripetal_force = centripetal_force(pt.cone_angle, params);
        pt.cost = weighted_cost(pt.cone_angle, w, params);
        points.push_back(pt);
    }
    std::sort(points.begin(), points.end(),
              [](const ParetoPoint& a, const ParetoPoint& b) {
                  return a.cone_angle < b.cone_angle;
              });
    return points;
}

double matching_weight(double cone_angle, const VehicleParams& params) {
    require_angle(cone_angle);
    const double c = std::cos(cone_angle);
    const double s = std::sin(cone_angle);
    // d(range)/d(phi) = 2 pi d cos(phi);
    // d(force)/d(phi) = prefactor (1 + 2 sin^2 phi)/cos^4 phi.
    const double c4 = c * c * c * c;
    return 2.0 * kPi * params.link_offset * c * c4 /
           (force_prefactor(params) * (1.0 + 2.0 * s * s));
}

std::vector<ParetoPoint> pareto_frontier_from_angles(
    std::span<const double> cone_angles, const VehicleParams& params) {
    std::vector<ParetoPoint> points;
    points.reserve(cone_angles.size());
    for (double phi : cone_angles) {
        ParetoPoint pt;
        pt.cone_angle = phi;
        pt.range = range_metric(phi, params);
        pt.centripetal_force = centripetal_force(phi, params);
        pt.weight = matching_weight(phi, params);
        pt.cost = weighted_cost(phi, pt.weight, params);
        points.push_back(pt);
    }
    std::sort(points.begin(), points.end(),
              [](const ParetoPoint& a, const ParetoPoint& b) {
                  return a.cone_angle < b.cone_angle;
              });
    return points;
}

}  // namespace conerotor
