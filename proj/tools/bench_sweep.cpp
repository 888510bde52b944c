// Timing comparison of the serial reference sweep kernel against the
// OpenMP-parallel one, on an example2-sized workload.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "fracmech/experiments.hpp"

using namespace fracmech;
using clock_type = std::chrono::steady_clock;

static double run_once(const ExperimentConfig& cfg, ExecutionPolicy policy,
                       std::vector<ResultRow>& rows) {
    const auto t0 = clock_type::now();
    rows = run_example2(cfg, policy);
    const auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

int main(int argc, char** argv) {
    ExperimentConfig cfg;
    cfg.motion_id = MotionId::Exponential;
    cfg.alpha_values = {0.3, 0.5, 0.7, 0.9};
    cfg.ell_values = {0.5, 0.05};
    cfg.anisotropy_ratios = {1.0, 3.0, 9.0};
    cfg.x_min = 0.5;
    cfg.x_max = 1.5;
    cfg.x_count = 41;
    cfg.m = (argc > 1) ? std::atoi(argv[1]) : 400;
    cfg.strain_families = {StrainFamily::FracMaterialBased, StrainFamily::AlphaBased};
    cfg.box_min = -20.0;
    cfg.box_max = 60.0;

    std::vector<ResultRow> serial_rows, parallel_rows;
    const double ts = run_once(cfg, ExecutionPolicy::Serial, serial_rows);
    const double tp = run_once(cfg, ExecutionPolicy::Parallel, parallel_rows);

    double max_diff = 0.0;
    for (std::size_t i = 0; i < serial_rows.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(serial_rows[i].E11 - parallel_rows[i].E11));
    }

    std::printf("rows          : %zu (m = %d)\n", serial_rows.size(), cfg.m);
    std::printf("serial        : %.3f s\n", ts);
    std::printf("parallel      : %.3f s\n", tp);
    std::printf("speedup       : %.2fx\n", ts / tp);
    std::printf("max |dE11|    : %.3e\n", max_diff);
    return max_diff == 0.0 ? 0 : 1;
}
