#include "conerotor/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conerotor/simulator.hpp"

namespace conerotor {

namespace {

constexpr double kPi = std::numbers::pi;

double base_hover_rate(const VehicleParams& p) {
    return std::sqrt(p.total_mass * p.gravity / (4.0 * p.thrust_coeff));
}

void require_ft_angle(double cone_angle) {
    if (!(cone_angle > 0.0) || cone_angle > kPi / 4.0) {
        throw std::invalid_argument(
            "cone-spun hover needs cone_angle in (0, pi/4]");
    }
}

// Composite Simpson on a uniform grid.
template <typename F>
double simpson(const F& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int k = 1; k < n; ++k) {
        acc += f(a + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

}  // namespace

HoverSolution symmetric_hover_rates(double cone_angle,
                                    const VehicleParams& params) {
    if (!std::isfinite(cone_angle) || cone_angle < 0 ||
        cone_angle > kPi / 4.0) {
        throw std::invalid_argument("cone_angle must be in [0, pi/4]");
    }
    HoverSolution sol;
    sol.cone_angle = cone_angle;
    // cos(2 * cone_angle) stays marginally positive at the representable
    // pi/4, so gate on the angle itself as well.
    const double c2 = std::cos(2.0 * cone_angle);
    if (cone_angle >= kPi / 4.0 || c2 <= 0.0) {
        sol.rate_13 = sol.rate_24 = std::nan("");
        sol.feasible = false;
        return sol;
    }
    sol.rate_13 = base_hover_rate(params);
    sol.rate_24 = std::sqrt(params.total_mass * params.gravity /
                            (4.0 * params.thrust_coeff * c2));
    sol.feasible = true;
    return sol;
}

FtHoverSolution ft_hover_rate(double cone_angle, const VehicleParams& params) {
    require_ft_angle(cone_angle);
    const double c = std::cos(cone_angle);
    const double s = std::sin(cone_angle);
    FtHoverSolution sol;
    sol.cone_angle = cone_angle;
    sol.spin_rate = base_hover_rate(params) / (c * c);
    sol.accel_amplitude = 4.0 * params.thrust_coeff / params.total_mass *
                          sol.spin_rate * sol.spin_rate * c * c * s * s;
    sol.oscillation_rate = sol.spin_rate;
    return sol;
}

double vertical_accel_profile(double t, double spin_rate, double cone_angle,
                              const VehicleParams& params) {
    const double c = std::cos(cone_angle);
    const double s = std::sin(cone_angle);
    const double sh = std::sin(spin_rate * t / 2.0);
    return 4.0 * params.thrust_coeff / params.total_mass * spin_rate *
               spin_rate * c * c * (1.0 - 2.0 * s * s * sh * sh) -
           params.gravity;
}

double ft_hover_rate_numeric(double cone_angle, const VehicleParams& params) {
    require_ft_angle(cone_angle);
    const double c = std::cos(cone_angle);
    const double s = std::sin(cone_angle);
    const double quarter_weight = params.total_mass / 4.0;

    // Net vertical impulse of the per-rotor force over one motor turn,
    // integrated twice so the sign tells whether the craft climbs or sinks
    // over the period.
    const auto net_displacement_measure = [&](double rate) {
        const double period = 2.0 * kPi / rate;
        const auto force = [&](double tau) {
            const double sh = std::sin(rate * tau / 2.0);
            return params.thrust_coeff * rate * rate * c * c *
                       (1.0 - 2.0 * s * s * sh * sh) -
                   quarter_weight * params.gravity;
        };
        const auto impulse = [&](double t) {
            if (t == 0.0) return 0.0;
            return simpson(force, 0.0, t, 256);
        };
        return simpson(impulse, 0.0, period, 256);
    };

    double lo = 0.25 * base_hover_rate(params);
    double hi = 8.0 * base_hover_rate(params);
    double flo = net_displacement_measure(lo);
    double fhi = net_displacement_measure(hi);
    for (int k = 0; k < 60 && flo * fhi > 0; ++k) {
        lo *= 0.5;
        hi *= 2.0;
        flo = net_displacement_measure(lo);
        fhi = net_displacement_measure(hi);
    }
    if (flo * fhi > 0) {
        throw std::runtime_error(
            "cone-spun hover rate: no sign change in bracket");
    }
    for (int k = 0; k < 200 && (hi - lo) > 1e-10 * hi; ++k) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = net_displacement_measure(mid);
        if ((flo <= 0) == (fmid <= 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Spectrum periodogram(std::span<const double> samples, double sample_rate) {
    const std::size_t n = samples.size();
    if (n < 2) {
        throw std::invalid_argument("periodogram: needs at least 2 samples");
    }
    if (!std::isfinite(sample_rate) || sample_rate <= 0) {
        throw std::invalid_argument("periodogram: sample_rate must be > 0");
    }
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= static_cast<double>(n);

    Spectrum spec;
    spec.bin_width = sample_rate / static_cast<double>(n);
    const std::size_t bins = n / 2 + 1;
    spec.frequency.resize(bins);
    spec.power.resize(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        spec.frequency[k] = spec.bin_width * static_cast<double>(k);
        double re = 0.0, im = 0.0;
        const double w = -2.0 * kPi * static_cast<double>(k) /
                         static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = samples[j] - mean;
            const double a = w * static_cast<double>(j);
            re += x * std::cos(a);
            im += x * std::sin(a);
        }
        // Bin power normalized so the one-sided sum returns the variance.
        double p = (re * re + im * im) / (static_cast<double>(n) *
                                          static_cast<double>(n));
        const bool interior = k > 0 && (n % 2 != 0 || k < bins - 1);
        if (interior) p *= 2.0;
        spec.power[k] = p;
    }
    return spec;
}

Spectrum periodogram(std::span<const double> times,
                     std::span<const double> values) {
    if (times.size() != values.size()) {
        throw std::invalid_argument(
            "periodogram: time and value lengths differ");
    }
    if (times.size() < 2) {
        throw std::invalid_argument("periodogram: needs at least 2 samples");
    }
    const double dt = times[1] - times[0];
    if (!(dt > 0)) {
        throw std::invalid_argument("periodogram: times must increase");
    }
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (std::abs(times[k] - times[k - 1] - dt) > 1e-9 * dt + 1e-15) {
            throw std::invalid_argument(
                "periodogram: sampling must be uniform");
        }
    }
    return periodogram(values, 1.0 / dt);
}

DominantTone dominant_tone(const Spectrum& spectrum) {
    if (spectrum.size() < 2) {
        throw std::invalid_argument("dominant_tone: spectrum too short");
    }
    DominantTone tone;
    tone.bin = 1;
    for (std::size_t k = 1; k < spectrum.size(); ++k) {
        if (spectrum.power[k] > spectrum.power[tone.bin]) tone.bin = k;
    }
    tone.frequency = spectrum.frequency[tone.bin];
    tone.power = spectrum.power[tone.bin];
    return tone;
}

std::vector<OscillationPowerPoint> oscillation_power_curve(
    std::span<const double> cone_angles, const VehicleParams& params) {
    std::vector<OscillationPowerPoint> curve;
    curve.reserve(cone_angles.size());
    for (double angle : cone_angles) {
        OscillationPowerPoint point;
        point.cone_angle = angle;
        try {
            const FtHoverSolution sol = ft_hover_rate(angle, params);
            point.spin_rate = sol.spin_rate;
            const Scenario sc = ft_hover_scenario(angle, params);
            const SimTrace trace = run(sc.config, sc.schedule);
            if (trace.aborted) {
                throw std::runtime_error("simulation aborted: " +
                                         trace.abort_reason);
            }
            // Drop the final sample so the window is an integer number of
            // periods (half-open).
            std::vector<double> accel(trace.rows() - 1);
            for (std::size_t k = 0; k + 1 < trace.rows(); ++k) {
                accel[k] = trace.accelerations[k].z();
            }
            const Spectrum spec =
                periodogram(accel, 1.0 / (sc.config.step_size *
                                          sc.config.record_decimation));
            point.power = dominant_tone(spec).power;
            point.ok = true;
        } catch (const std::exception& e) {
            point.ok = false;
            point.error = e.what();
        }
        curve.push_back(point);
    }
    return curve;
}

}  // namespace conerotor
