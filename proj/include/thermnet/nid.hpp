#pragma once

#include "thermnet/response.hpp"

#include <vector>

namespace thermnet::nid {

/// Density R(zeta) over zeta = ln(tau / 1 s). The log-time derivative of
/// Zth is the convolution of this density with w(x) = exp(x - e^x).
struct TimeConstantSpectrum {
    std::vector<double> zeta;
    std::vector<double> density;  // K/W per unit zeta
    double bin_width = 0.0;

    double mass() const;  // integral of the density, equals Rth at steady state
};

struct DeconvConfig {
    int grid_points_per_decade = 40;
    int iterations = 1000;
    int smoothing_window = 9;
    double peak_threshold_frac = 0.05;
    double min_peak_separation = 1.0;
};

/// Zth resampled to a uniform z = ln(t) grid and differentiated:
/// a(z) = dZth/dz after local-quadratic smoothing. Small negative values
/// from the differencing are clipped to zero.
struct LogDerivative {
    std::vector<double> z;
    std::vector<double> a;
    double dz = 0.0;
};

LogDerivative log_derivative(const ThermalStepResponse& resp, const DeconvConfig& cfg);

struct DeconvResult {
    TimeConstantSpectrum spectrum;
    std::vector<double> residual_rms;  // ||a - R*w|| per iteration
};

/// Iterative Bayes (Richardson-Lucy) inversion of a = R * w. The update
/// preserves non-negativity by construction; an identically zero input
/// yields a zero spectrum.
DeconvResult bayes_deconvolve(const LogDerivative& deriv, const DeconvConfig& cfg);

struct Peak {
    double zeta = 0.0;
    double tau_s = 0.0;
    double height = 0.0;
};

struct OrderReport {
    int order = 0;
    std::vector<Peak> peaks;  // ascending zeta
};

/// Local maxima above peak_threshold_frac * max, with maxima closer than
/// min_peak_separation merged into the taller one. The count is the
/// thermal network order.
OrderReport detect_order(const TimeConstantSpectrum& spectrum, const DeconvConfig& cfg);

} // namespace thermnet::nid
