#pragma once

#include <string>
#include <vector>

namespace thermnet {

/// Sampled thermal step response Zth(t) = dT_monitor(t) / power for a
/// unit power step in `heater`. Times are log-spaced and strictly
/// increasing; zth is non-negative and non-decreasing for pure
/// conduction.
struct ThermalStepResponse {
    std::vector<double> times;  // s
    std::vector<double> zth;    // K/W
    std::string heater;         // device id, e.g. "n"
    std::string monitor;
    double power = 0.0;         // W used to produce the curve

    void validate() const;
};

/// CSV round trip, header `t_s,zth_K_per_W`; '#' comment rows pass through.
ThermalStepResponse read_zth_csv(const std::string& path);
void write_zth_csv(const std::string& path, const ThermalStepResponse& resp,
                   const std::vector<std::string>& comments = {});

} // namespace thermnet
