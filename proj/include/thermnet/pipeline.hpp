#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thermnet/circuit.hpp"
#include "thermnet/compact.hpp"
#include "thermnet/fosterfit.hpp"
#include "thermnet/geometry.hpp"
#include "thermnet/heatsolve.hpp"
#include "thermnet/io.hpp"
#include "thermnet/nid.hpp"
#include "thermnet/xnet.hpp"

namespace thermnet::pipeline {

/// One flavor's geometry-stage inputs: the structure, the material table
/// and the voxel pitch, all read from a single JSON file with top-level
/// keys `geometry`, `materials`, `voxel_size_nm`.
struct GeometryConfig {
    geometry::DeviceGeometry geom;
    geometry::MaterialTable materials;
    double voxel_size_nm = 2.0;
};

GeometryConfig load_geometry_config(const std::string& path);

/// Reads the `materials` array of a JSON file.
geometry::MaterialTable load_materials(const std::string& path);

/// Everything the pipeline knows about one device flavor.
struct FlavorConfig {
    std::string name;                 // "nsfet" | "cfet"
    std::string geometry_path;        // resolved against the config directory
    double power_n_W = 0.0;           // operating powers used to probe the
    double power_p_W = 0.0;           // thermal responses and report rho
    compact::DeviceParams nfet, pfet;
    /// Optional pre-fitted pair model; empty means
    /// <output_dir>/<name>/pair_model.json (the assemble stage's output).
    std::string pair_model_path;
};

/// Top-level run description. A single JSON file wires every stage so a
/// rerun needs nothing but the file and the seed embedded in it.
struct ProjectConfig {
    std::uint64_t seed = 1;
    std::string output_dir = "out";
    std::string materials_path;       // optional override of per-flavor materials
    double voxel_size_nm = 0.0;       // optional override when > 0
    heat::SolverConfig solver;
    nid::DeconvConfig deconv;
    foster::GaConfig ga;              // seed field is ignored; derived per stage
    int max_ladder_order = 3;         // cap when the order is auto-detected
    std::vector<FlavorConfig> flavors;
    circuit::ScenarioSpec scenario;

    std::string base_dir;             // directory of the config file
    Provenance prov;                  // hash of the config bytes + global seed

    /// Parses and validates; `THERMNET_OUT`, when set, overrides
    /// output_dir. Relative paths inside the file resolve against the
    /// file's own directory.
    static ProjectConfig load(const std::string& path);

    void validate() const;
    const FlavorConfig& flavor(const std::string& name) const;
    std::string resolve(const std::string& path) const;
    std::string flavor_dir(const std::string& name) const;
    std::string pair_model_file(const FlavorConfig& f) const;

    /// Per-stage seed derived from the global seed by a fixed per-flavor
    /// offset, so the only stochastic stage (the GA fit) is independently
    /// reproducible. Extraction and deconvolution are deterministic.
    std::uint64_t ga_seed(const std::string& flavor_name) const;
};

// --- stage runners -------------------------------------------------------
// Each writes its artifacts under the project's output directory (or the
// caller-supplied one for the artifact-input commands), stamps them with
// the provenance, and returns the written paths.

struct GeomArtifacts {
    std::string scene_json;
    std::string grid_json;
};
GeomArtifacts run_geom_build(const ProjectConfig& cfg, const std::string& flavor);

/// Four step responses in ladder order nn, np, pn, pp; heater power is the
/// flavor's operating power of the heated device.
struct RespondArtifacts {
    std::array<std::string, 4> zth_csv;
};
RespondArtifacts run_heat_respond(const ProjectConfig& cfg, const std::string& flavor);

struct SpectrumArtifacts {
    std::string spectrum_csv;
    std::string order_json;
};
SpectrumArtifacts run_nid_spectrum(const std::string& zth_path,
                                   const nid::DeconvConfig& cfg,
                                   const std::string& out_dir, const Provenance& prov);

std::string run_fit_foster(const std::string& zth_path, int order,
                           const foster::GaConfig& ga, const std::string& out_dir,
                           const Provenance& prov);

/// Fits the four ladders and writes <flavor>/pair_model.json. orders[i] <= 0
/// means detect via the time-constant spectrum (capped at max_ladder_order).
std::string run_xnet_assemble(const ProjectConfig& cfg, const std::string& flavor,
                              const std::array<std::string, 4>& zth_paths,
                              std::array<int, 4> orders);

/// Steady crosstalk report for the flavor's fitted pair model at its
/// operating powers; writes <flavor>/rho.json.
std::string run_xnet_rho(const ProjectConfig& cfg, const std::string& flavor);

std::string run_extract_iso(const std::string& iv_path, const std::string& out_dir,
                            const Provenance& prov);

std::string run_extract_she(const std::string& iv_path, const std::string& iso_card_path,
                            const std::string& pair_model_path,
                            const std::string& out_dir, const Provenance& prov);

/// Loads the flavor's cards plus its pair model. When require_pair is
/// false a missing pair-model file leaves the thermal model empty, which
/// is fine for isothermal-only runs.
circuit::FlavorModels models_for(const ProjectConfig& cfg, const std::string& flavor,
                                 bool require_pair = true);

struct SingleSimRequest {
    bool ring = false;
    std::string cell = "INV";     // ignored for rings
    int stages = 9;               // rings only
    double load_fF = 5.0;
    std::string flavor = "nsfet";
    int shmod = 0;
};

struct SimArtifacts {
    std::string metrics_csv;
    std::string waveforms_csv;
};
SimArtifacts run_sim_single(const ProjectConfig& cfg, const SingleSimRequest& req);

/// Full scenario sweep -> <output_dir>/metrics.csv.
std::string run_sim_sweep(const ProjectConfig& cfg, bool parallel = true);

/// Reads <output_dir>/metrics.csv and writes report.csv pairing shmod 0/1
/// rows side by side; returns {report path, human-readable table}.
struct ReportArtifacts {
    std::string report_csv;
    std::string table_text;
};
ReportArtifacts run_report_compare(const ProjectConfig& cfg);

/// Simple polyline SVG used by the optional --svg flag: one series per
/// column of ys, log-x when requested.
void write_svg_lines(const std::string& path, const std::vector<double>& x,
                     const std::vector<std::vector<double>>& ys,
                     const std::vector<std::string>& labels, const std::string& title,
                     bool log_x);

} // namespace thermnet::pipeline
