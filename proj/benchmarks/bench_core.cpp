#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "conerotor/analysis.hpp"
#include "conerotor/dynamics.hpp"
#include "conerotor/simulator.hpp"
#include "conerotor/tradeoff.hpp"

namespace {

using namespace conerotor;

constexpr double kPi = std::numbers::pi;

VehicleParams bench_params() {
    VehicleParams p;
    p.cone_angle = kPi / 10;
    return p;
}

ActuatorInputs sweep_inputs(const VehicleParams& params) {
    const double spin = ft_hover_rate(params.cone_angle, params).spin_rate;
    ActuatorInputs inputs;
    for (auto& arm : inputs.arms) {
        arm.command = ArmCommand{spin, 0.0, CommandMode::kFaultTolerant};
    }
    return inputs;
}

void BM_StateDerivative(benchmark::State& state) {
    const VehicleParams params = bench_params();
    const ActuatorInputs inputs = sweep_inputs(params);
    RigidState x;
    x.cone_angles = {0.1, 0.2, 0.3, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(state_derivative(x, inputs, params));
    }
}
BENCHMARK(BM_StateDerivative);

void BM_Rk4Step(benchmark::State& state) {
    const VehicleParams params = bench_params();
    const ActuatorInputs inputs = sweep_inputs(params);
    RigidState x;
    for (auto _ : state) {
        x = rk4_step(x, inputs, params, 1e-4);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Rk4Step);

// One sweep period of the stopped-rotor hover, recording every step.
void BM_SweepHoverPeriod(benchmark::State& state) {
    const VehicleParams params = bench_params();
    Scenario sc = ft_hover_scenario(params.cone_angle, params);
    const double spin = sc.schedule.segments[0].commands[0].cone_rate;
    sc.config.duration = 2.0 * kPi / spin;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(sc.config, sc.schedule));
    }
}
BENCHMARK(BM_SweepHoverPeriod);

void BM_FtHoverRateNumeric(benchmark::State& state) {
    const VehicleParams params = bench_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ft_hover_rate_numeric(params.cone_angle, params));
    }
}
BENCHMARK(BM_FtHoverRateNumeric);

void BM_Periodogram(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<double> samples(n);
    for (std::size_t k = 0; k < n; ++k) {
        samples[k] = 2.5 * std::cos(2.0 * kPi * 50.0 * k / 1000.0) + 7.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(periodogram(samples, 1000.0));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_Periodogram)->Range(256, 4096)->Complexity();

void BM_ParetoFrontier(benchmark::State& state) {
    const VehicleParams params = bench_params();
    const std::vector<double> weights = default_weight_grid(64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pareto_frontier_from_weights(weights, params));
    }
}
BENCHMARK(BM_ParetoFrontier);

}  // namespace

BENCHMARK_MAIN();
