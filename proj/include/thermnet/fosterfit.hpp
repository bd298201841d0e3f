#pragma once

#include <cstdint>
#include <vector>

namespace thermnet::foster {

/// One R-C rung of a Foster ladder. tau() = r * c.
struct Stage {
    double r = 0.0;  // K/W
    double c = 0.0;  // J/K

    double tau() const { return r * c; }
};

/// Series chain of parallel R||C thermal stages. Step response is
/// sum_i r_i * (1 - exp(-t / tau_i)); stages are kept sorted by
/// ascending time constant.
struct FosterNetwork {
    std::vector<Stage> stages;

    double rth_total() const;
    void sort_stages();
    void validate() const;  // r, c > 0; sorted by tau
};

/// Build a network from (r_i, tau_i) pairs; c_i = tau_i / r_i.
FosterNetwork from_r_tau(const std::vector<double>& r, const std::vector<double>& tau);

/// Step response of the ladder at the given times.
std::vector<double> foster_eval(const FosterNetwork& net, const std::vector<double>& times);
double foster_eval(const FosterNetwork& net, double t);

struct GaConfig {
    int population = 100;
    int generations = 500;
    int tournament_size = 3;
    double blend_alpha = 0.5;
    double mutation_sigma_frac = 0.05;
    double mutation_prob = 0.2;
    int elitism = 2;
    std::uint64_t seed = 1;
    int stall_generations = 50;
};

struct FitResult {
    FosterNetwork network;
    double rmse = 0.0;                  // RMS of relative error
    std::vector<double> best_per_gen;   // best fitness trace (for diagnostics)
};

/// Fitness used by the GA and reported as rmse: RMS of the relative error
/// at the target's sample times. Targets below 0.1% of the steady-state
/// value are floored in the denominator so the earliest samples cannot
/// dominate.
double fit_rmse(const FosterNetwork& net,
                const std::vector<double>& times,
                const std::vector<double>& zth);

/// Real-coded GA over genes {ln r_i, ln tau_i} followed by a downhill
/// simplex polish of the best individual. Deterministic for a given seed.
FitResult ga_fit(const std::vector<double>& times,
                 const std::vector<double>& zth,
                 int order,
                 const GaConfig& cfg);

} // namespace thermnet::foster
