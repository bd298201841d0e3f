#pragma once

#include <array>
#include <string>
#include <vector>

#include "thermnet/fosterfit.hpp"
#include "thermnet/response.hpp"

namespace thermnet::xnet {

/// Four-ladder thermal model of one N/P device pair. Ladder z_ab maps
/// power dissipated in device a to the temperature rise seen at device b,
/// so z_nn/z_pp are the self-heating ladders and z_np/z_pn the crosstalk
/// ladders. Immutable after assembly.
struct DevicePairThermalModel {
    double t0_K = 300.0;
    foster::FosterNetwork z_nn, z_np, z_pn, z_pp;

    /// cross-ladder steady resistance must not exceed either self ladder
    void validate() const;
    std::string to_json() const;
    static DevicePairThermalModel from_json(const std::string& text);
};

/// Per-stage temperature states (K above ambient), one vector per ladder.
/// Owned by a single simulation thread.
struct ThermalState {
    std::vector<double> nn, np, pn, pp;

    static ThermalState zero(const DevicePairThermalModel& model);
};

struct PairTemperatures {
    double t_n = 0.0;
    double t_p = 0.0;
};

/// Fits the four step responses (order: nn, np, pn, pp) and assembles the
/// pair model. Seeds are derived per ladder from cfg.seed so the four fits
/// are independently reproducible.
DevicePairThermalModel assemble(const std::array<ThermalStepResponse, 4>& responses,
                                const std::array<int, 4>& orders,
                                const foster::GaConfig& cfg);

/// Advances every stage by dt with the device powers held constant over
/// the step (exact exponential update) and returns the device temperatures
/// at the end of the step.
PairTemperatures advance(ThermalState& state, const DevicePairThermalModel& model,
                         double p_n_W, double p_p_W, double dt_s);

PairTemperatures temperatures(const ThermalState& state,
                              const DevicePairThermalModel& model);

struct CrosstalkReport {
    double dT_pn_K = 0.0;  // PFET heating -> NFET rise
    double dT_np_K = 0.0;  // NFET heating -> PFET rise
    double dT_jp_K = 0.0;  // PFET self rise
    double dT_jn_K = 0.0;  // NFET self rise
    double p_p_W = 0.0;
    double p_n_W = 0.0;
    double rho = 0.0;

    std::string to_json() const;
};

/// rho = (dT_pn/P_p + dT_np/P_n) / (dT_jp/P_p + dT_jn/P_n)
double crosstalk_coefficient(double dT_pn_K, double dT_np_K, double dT_jp_K,
                             double dT_jn_K, double p_p_W, double p_n_W);

/// Steady-state report for the given pair model and per-device powers.
CrosstalkReport steady_crosstalk(const DevicePairThermalModel& model, double p_n_W,
                                 double p_p_W);

} // namespace thermnet::xnet
