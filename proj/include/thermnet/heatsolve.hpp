#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thermnet/geometry.hpp"
#include "thermnet/response.hpp"

namespace thermnet::heat {

struct SolverConfig {
    double ambient_K = 300.0;
    double cg_tol = 1e-8;        // relative residual target
    int cg_max_iter = 20000;
    int picard_max_iter = 10;    // outer loop when any material has k(T)
    double picard_tol_K = 1e-3;
    double t_start_s = 1e-13;    // transient sampling window, log spaced
    double t_stop_s = 1e-5;
    int points_per_decade = 20;

    void validate() const;
};

struct SteadyResult {
    std::vector<double> delta_T;     // temperature rise per voxel, K
    int cg_iterations = 0;
    double residual = 0.0;           // final relative CG residual
    double energy_balance = 0.0;     // (heat out through sinks - P) / P
    double max_delta_T = 0.0;
    double mean_heater_delta_T = 0.0;
};

/// Steady conduction with power spread uniformly over the heater voxels,
/// isothermal sinks on the bottom and top z faces, adiabatic sides.
/// Materials with a nonzero k exponent are iterated to self-consistency.
SteadyResult steady_state(const geometry::VoxelGrid& grid,
                          const std::vector<std::size_t>& heater,
                          double power_W, const SolverConfig& cfg);

/// Backward-Euler step response on a log-spaced time grid. The returned
/// curve is the monitor-averaged rise per watt; conductivities are lagged
/// one step when temperature dependent.
ThermalStepResponse step_response(const geometry::VoxelGrid& grid,
                                  const std::vector<std::size_t>& heater,
                                  const std::vector<std::size_t>& monitor,
                                  double power_W, const SolverConfig& cfg,
                                  const std::string& heater_name,
                                  const std::string& monitor_name);

double mean_over(const std::vector<double>& field,
                 const std::vector<std::size_t>& voxels);

} // namespace thermnet::heat
