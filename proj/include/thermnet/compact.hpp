#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thermnet/fosterfit.hpp"
#include "thermnet/io.hpp"

namespace thermnet::xnet {
struct DevicePairThermalModel;
}

namespace thermnet::compact {

enum class Polarity { Nfet, Pfet };

const char* to_string(Polarity p);
Polarity polarity_from_string(const std::string& s);

/// Smooth single-expression drain-current surrogate. One formula covers
/// subthreshold through saturation:
///
///   v_t     = kB * temp / q
///   vth_eff = vth0 + alpha_vt * (temp - t0) - dibl * v_ds
///   q_i     = n_ss * v_t * ln(1 + exp((v_gs - vth_eff) / (n_ss * v_t)))
///   v_dse   = v_ds / (1 + (v_ds / q_i)^4)^(1/4)
///   i_ds    = k_gain * (temp / t0)^(-beta_mu) * q_i * v_dse * (1 + lambda * v_ds)
///
/// The saturation smoothing clamps v_dse to min(v_ds, q_i), so in deep
/// subthreshold (q_i << v_ds) the current goes as q_i^2 and the swing is
/// ln(10) * n_ss * v_t / 2 per decade. PFET devices evaluate the same
/// core at mirrored biases: i_p(v_gs, v_ds) = -i_core(-v_gs, -v_ds).
struct DeviceParams {
    Polarity polarity = Polarity::Nfet;
    double vth0 = 0.25;       // V, threshold at t0 and v_ds = 0
    double n_ss = 2.2;        // subthreshold ideality (dimensionless)
    double k_gain = 3.3e-4;   // A/V^2, drive strength at t0
    double dibl = 0.05;       // V/V, drain-induced threshold shift
    double lambda = 0.1;      // 1/V, output-conductance slope
    double alpha_vt = -7e-4;  // V/K, threshold drift with temperature
    double beta_mu = 1.3;     // mobility power-law exponent (temp/t0)^-beta_mu
    double t0 = 300.0;        // K, reference temperature
    double c_gs = 1e-17;      // F, fixed gate-source capacitance
    double c_gd = 1e-17;      // F, fixed gate-drain capacitance

    void validate() const;  // k_gain > 0, n_ss >= 1, beta_mu > 0, t0 > 0
};

/// Current and its bias derivatives at one operating point. All values
/// follow the device's own sign convention (PFET currents are negative
/// for negative v_ds).
struct IdsResult {
    double i = 0.0;        // A
    double di_dvgs = 0.0;  // S
    double di_dvds = 0.0;  // S
};

/// Evaluate the surrogate with analytic derivatives. temp must be > 0.
IdsResult ids(const DeviceParams& p, double v_gs, double v_ds, double temp_K);

/// Model card serialization; shmod records whether the card is meant to
/// be simulated with self-heating (1) or pinned at ambient (0).
std::string card_to_json(const DeviceParams& p, int shmod);
std::pair<DeviceParams, int> card_from_json(const std::string& text);

/// Built-in cards: drive strengths chosen so the on-state current at
/// v_gs = v_ds = 0.7 V, 300 K hits the reference drive for each flavor
/// (80 / 72.1 uA side-by-side, 136.3 / 123.7 uA stacked).
DeviceParams default_card(const std::string& flavor, Polarity pol);

/// One measured (or synthesized) bias point. self_heated marks rows whose
/// temperature column read "she": the device temperature is unknown and
/// set by the device's own dissipation.
struct IvPoint {
    double v_gs = 0.0;
    double v_ds = 0.0;
    double temp_K = 300.0;  // ambient for self-heated rows
    bool self_heated = false;
    double i_ds = 0.0;
};

/// A set of I-V samples plus the context the CSV itself does not carry.
struct IvCurveSet {
    std::vector<IvPoint> points;
    std::string device = "nfet";  // free-form label for messages
    Polarity polarity = Polarity::Nfet;
    double v_dd = 0.7;

    void validate() const;
};

/// CSV columns: v_gs,v_ds,temp_K,i_ds_A; temp_K is either a number or the
/// literal "she" for self-heated rows.
IvCurveSet read_iv_csv(const std::string& path);
void write_iv_csv(const std::string& path, const IvCurveSet& set, const Provenance& prov);

/// Synthesize a reference sweep from a card: a v_gs grid at each v_ds in
/// vds_values, isothermal at temp_K. If rth_self > 0 the rows are marked
/// "she" and the currents solve the self-consistent temperature
/// T = temp_K + rth_self * i * v_ds.
IvCurveSet synth_iv(const DeviceParams& p, const std::vector<double>& vgs_grid,
                    const std::vector<double>& vds_values, double temp_K,
                    double rth_self = 0.0);

struct ExtractionResult {
    DeviceParams params;
    double rmse = 0.0;  // RMS relative error over the fitted points
};

/// Fit the five isothermal parameters (vth0, n_ss, k_gain, dibl, lambda)
/// to isothermal curves. Staged closed-form seeds (subthreshold slope,
/// constant-current threshold, strong-inversion gain, threshold shift
/// across v_ds, saturation slope) are polished by a derivative-free
/// refinement. seed supplies everything the fit does not touch
/// (polarity, t0, thermal terms, capacitances). Curves must reach at
/// least a decade below moderate inversion or the fit is rejected.
ExtractionResult extract_isothermal(const IvCurveSet& curves, const DeviceParams& seed);

/// Fit (alpha_vt, beta_mu) to self-heated curves given the already
/// extracted isothermal card and the device's self-heating ladder taken
/// from the pair thermal model (z_nn for NFET, z_pp for PFET). Each model
/// evaluation solves the fixed point T = ambient + rth_ss * i * v_ds by a
/// damped iteration (tolerance 1e-3 K, at most 100 sweeps) and an
/// unconverged point is reported with its bias. A ladder with (near) zero
/// thermal resistance cannot identify the thermal terms and is rejected.
ExtractionResult extract_thermal(const IvCurveSet& she_curves, const DeviceParams& iso,
                                 const thermnet::xnet::DevicePairThermalModel& pair_model);

/// Device temperature at one self-heated bias: the fixed point of
/// T = ambient + rth_ss * i(T) * v_ds (same iteration as extract_thermal).
double self_heated_temp(const DeviceParams& p, double v_gs, double v_ds,
                        double ambient_K, double rth_ss);

/// Gate bias (magnitude) where the drain current is insensitive to
/// temperature, located by bisection on the finite difference
/// i(t0 + 1 K) - i(t0) over |v_gs| in [0, v_dd]. Throws when the
/// difference does not change sign in the range (e.g. beta_mu too small
/// to offset the threshold drift).
double ztc_point(const DeviceParams& p, double v_ds, double v_dd);

} // namespace thermnet::compact
