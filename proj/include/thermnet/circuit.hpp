#pragma once

#include <map>
#include <string>
#include <vector>

#include "thermnet/compact.hpp"
#include "thermnet/io.hpp"
#include "thermnet/xnet.hpp"

namespace thermnet::circuit {

/// Piecewise-linear waveform. Before the first point the value holds at
/// v.front(), after the last at v.back(); with period > 0 the time axis
/// folds modulo the period instead.
struct Pwl {
    std::vector<double> t;  // s, strictly increasing
    std::vector<double> v;  // V
    double period = 0.0;    // s; 0 means aperiodic

    static Pwl dc(double volts);
    double at(double time) const;
    void validate() const;
};

/// Four-terminal device reference: terminals by node label, electrical
/// behavior by card name, thermal attribution by device-pair id (which
/// side of the pair it heats follows from the card's polarity).
struct Mosfet {
    std::string drain, gate, source;
    std::string card;
    std::string pair_id;
};

struct Capacitor {
    std::string a, b;
    double farad = 0.0;
};

struct Resistor {
    std::string a, b;
    double ohm = 0.0;
};

/// Ideal voltage source from node to ground.
struct Vsource {
    std::string node;
    Pwl wave;
};

using CardLibrary = std::map<std::string, compact::DeviceParams>;
using PairLibrary = std::map<std::string, xnet::DevicePairThermalModel>;

/// Flat transistor-level circuit. Node "0" is always ground; labels in
/// `grounds` are additional nodes pinned to 0 V. input_node/output_node
/// mark the signals measure() works on; ring marks a free-running
/// oscillator (no input). initial_offsets are volts added to the t = 0
/// operating point before the transient starts (oscillator kick).
struct Netlist {
    std::vector<Mosfet> mosfets;
    std::vector<Capacitor> capacitors;
    std::vector<Resistor> resistors;
    std::vector<Vsource> sources;
    std::vector<std::string> grounds;
    std::string input_node, output_node;
    bool ring = false;
    std::map<std::string, double> initial_offsets;

    /// Every node label in appearance order, ground first.
    std::vector<std::string> node_names() const;
    /// Structural checks plus card resolution; every node must be
    /// reachable from a source or ground through element terminals.
    void validate(const CardLibrary& cards) const;
    std::string to_json() const;
    static Netlist from_json(const std::string& text);
};

struct SimOptions {
    int shmod = 0;               // 1 couples the thermal ladders, 0 pins ambient
    double t_stop = 0.0;         // s
    double dt = 1e-13;           // s, fixed reporting step
    double newton_tol_v = 1e-6;  // V, max update for convergence
    double newton_tol_i = 1e-9;  // A, max KCL residual for convergence
    int max_newton = 50;
    double ambient_K = 300.0;
    int record_stride = 1;  // store every Nth sample (peaks tracked at full rate)

    void validate() const;
};

/// Uniformly sampled transient with per-device thermals. Devices are the
/// pair sides that appear in the netlist, labelled "<pair>_n"/"<pair>_p";
/// power is the instantaneous channel dissipation summed over the
/// transistors of that side.
struct TranResult {
    std::vector<double> time;
    std::vector<std::string> node_names;
    std::vector<std::vector<double>> v;  // [node][sample]
    std::vector<std::string> device_names;
    std::vector<std::vector<double>> temp;   // K, [device][sample]
    std::vector<std::vector<double>> power;  // W, [device][sample]
    std::vector<double> peak_rise_K;         // per device, tracked at full step rate
    std::string input_node, output_node;
    bool ring = false;
    double ambient_K = 300.0;

    std::size_t node_index(const std::string& name) const;
    std::size_t device_index(const std::string& name) const;
};

/// Fixed-step trapezoidal transient (backward-Euler first step) with a
/// damped Newton solve per step using the device model's analytic
/// derivatives. Electro-thermal coupling is loose: temperatures are held
/// during a step's Newton loop, then each pair's ladder state advances
/// with the step-average powers (thermal time constants dwarf dt). A step
/// that fails to converge is retried at dt/2, dt/4, dt/8 before giving up
/// with the timestamp. shmod=0 pins every device at ambient; shmod=1
/// requires a thermal model for every referenced pair id.
TranResult tran(const Netlist& netlist, const CardLibrary& cards, const PairLibrary& pairs,
                const SimOptions& options);

/// Operating point with all sources at their t = 0 values and
/// capacitors open. Returns every node voltage, grounds included.
std::map<std::string, double> dc_solve(const Netlist& netlist, const CardLibrary& cards,
                                       double ambient_K = 300.0);

/// Input drive shared by the cell library: square wave between 0 and
/// v_dd with linear edges.
struct StimulusSpec {
    double v_dd = 0.7;     // V
    double period = 1e-8;  // s
    double edge = 1e-12;   // s

    void validate() const;
};

/// Fixed transistor-level cells: INV (2T), NAND2/NOR2 (4T series/
/// parallel), TG (pass pair with tied complementary gates behind a
/// driving inverter), XOR2/XNOR2 (8T complementary network fed by two
/// input inverters). Cards are referenced as "nfet"/"pfet"; inputs are
/// "a" (and "b"), output "out" loaded by c_load. Drive policy: NAND2 and
/// NOR2 switch both inputs together so the series and parallel banks
/// carry their full current; XOR2/XNOR2 hold b low so the output follows
/// a through the pass networks. Truth tables are exercised at DC by
/// overriding the source waves.
Netlist cell(const std::string& name, double c_load, const StimulusSpec& stim);

/// Odd-length inverter ring, every stage loaded with c_per_stage, started
/// by an initial-condition offset on node "n1". The measured node is "n1".
Netlist ring_oscillator(int stages, double c_per_stage, const StimulusSpec& stim);

/// Delay and edge metrics, NaN where a metric does not apply (cells have
/// no ro_freq, rings have no input-referred delays).
struct Metrics {
    double t_phl = 0.0, t_plh = 0.0, t_p = 0.0;  // s, 50% input to 50% output
    double t_r = 0.0, t_f = 0.0;                 // s, 10% <-> 90% of v_dd
    double ro_period = 0.0;                      // s
    double ro_freq = 0.0;                        // Hz
};

/// Averages over all full cycles after the first; linear interpolation
/// between samples at every threshold crossing. A signal that never
/// crosses a needed threshold is reported by name.
Metrics measure(const TranResult& result, double v_dd);

/// Stop time budgeting ~50 estimated oscillation periods from the
/// single-stage RC estimate, floored at 10 time steps per half period.
double ring_t_stop_estimate(int stages, double c_per_stage_F, const StimulusSpec& stim,
                            const compact::DeviceParams& nfet,
                            const compact::DeviceParams& pfet, double ambient_K,
                            double dt);

/// One (cell | ring) x flavor x load x shmod sweep.
struct ScenarioCellSweep {
    std::string cell;
    std::vector<double> loads_fF;
};

struct ScenarioSpec {
    std::vector<ScenarioCellSweep> cells;
    std::vector<int> ro_stages;  // empty = no ring runs
    double ro_load_fF = 20.0;
    std::vector<std::string> flavors;  // keys into the models map
    std::vector<int> shmods = {0, 1};
    StimulusSpec stim;
    double dt = 1e-13;
    double ambient_K = 300.0;
    int cycles = 3;  // cell simulation length in input periods

    void validate() const;
    std::string to_json() const;
    static ScenarioSpec from_json(const std::string& text);
};

/// Everything a flavor needs to simulate: the two device cards and the
/// pair thermal model shared by every pair instance of that flavor.
struct FlavorModels {
    compact::DeviceParams nfet, pfet;
    xnet::DevicePairThermalModel pair;
};

struct MetricsRow {
    std::string cell;    // cell name or "RO"
    std::string flavor;
    double c_load_fF = 0.0;
    int stages = 0;  // 0 for cells
    int shmod = 0;
    Metrics metrics;
    double dT_n_K = 0.0;  // peak rise over ambient across the run
    double dT_p_K = 0.0;
    double delta_pct = 0.0;  // vs the matching shmod=0 row; NaN on shmod=0 rows
};

/// Runs every combination in the spec. Independent runs may execute
/// concurrently; rows come back in enumeration order regardless.
/// delta_pct on shmod=1 rows compares t_p (cells) or ro_freq (rings)
/// against the matching shmod=0 row.
std::vector<MetricsRow> scenario_run(const ScenarioSpec& spec,
                                     const std::map<std::string, FlavorModels>& models,
                                     bool parallel = true);

/// cell,flavor,c_load_fF,stages,shmod,t_p_s,t_r_s,t_f_s,ro_freq_Hz,
/// dT_n_K,dT_p_K,delta_pct
void write_metrics_csv(const std::string& path, const std::vector<MetricsRow>& rows,
                       const Provenance& prov);

/// t_s,<node>...,T_<device>_K with an optional sample stride (>= 1).
void write_waveforms_csv(const std::string& path, const TranResult& result,
                         const Provenance& prov, int stride = 1);

} // namespace thermnet::circuit
