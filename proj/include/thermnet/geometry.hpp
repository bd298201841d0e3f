#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace thermnet::geometry {

enum class Arrangement { SideBySide, Stacked };

/// Structural parameters of one N/P device pair. Lengths in nm.
struct DeviceGeometry {
    double gate_length = 12.0;
    double nanosheet_width = 12.0;
    double nanosheet_thickness = 5.0;
    double sd_length = 10.0;
    double bpr_height = 70.0;
    double gate_oxide = 0.5;
    double high_k = 1.5;
    int sheet_count = 3;
    double sheet_vertical_pitch = 10.0;
    Arrangement arrangement = Arrangement::SideBySide;
    double np_spacing = 20.0;          // edge-to-edge laterally, gap vertically
    double substrate_thickness = 150.0;
    double beol_thickness = 50.0;      // oxide slab up to the top heat sink
    bool shared_gate = true;           // continuous gate electrode across the pair
    double contact_via_width = 0.0;    // S/D pillars to the top sink (0 = none)
    bool drain_interconnect = false;   // stacked pair: metal joining the two drains

    // doping metadata (cm^-3); carried for bookkeeping, the conduction
    // solver sees only the effective conductivities of the material table
    double doping_ch_n = 1e16, doping_ch_p = 1e16;
    double doping_sd_n = 5e20, doping_sd_p = 5e20;

    void validate() const;
};

/// Side-by-side pair, 12 nm sheets.
DeviceGeometry nsfet_default();
/// Vertically stacked pair (NFET on top), 25 nm sheets.
DeviceGeometry cfet_default();

struct MaterialProps {
    std::string name;
    double k300 = 0.0;     // W/(K m)
    double cp = 0.0;       // J/(kg K)
    double density = 0.0;  // kg/m^3
    double k_exponent = 0.0;  // k(T) = k300 * (T/300)^(-k_exponent)

    double k_at(double temp_K) const;
    void validate() const;
};

using MaterialTable = std::vector<MaterialProps>;

/// Effective 300 K properties for every region of the pair.
MaterialTable default_materials();
int material_index(const MaterialTable& table, const std::string& name);

enum class Role {
    Substrate, Bpr, BprIsolation, Channel, GateOxide, HighK,
    Gate, SourceDrain, Contact, Filler
};

constexpr int kDeviceNone = -1;
constexpr int kDeviceN = 0;
constexpr int kDeviceP = 1;

struct Box {
    std::array<double, 3> lo{};  // nm
    std::array<double, 3> hi{};
    int material = -1;
    Role role = Role::Filler;
    std::string label;
    int device = kDeviceNone;

    bool overlaps(const Box& other) const;
    double volume() const;
};

/// Axis-aligned, mutually disjoint boxes plus the lateral/vertical domain
/// the voxelizer should cover. Space not claimed by a box is filled with
/// `background_material` (oxide).
struct Scene {
    std::vector<Box> boxes;
    MaterialTable materials;
    int background_material = -1;
    std::array<double, 3> domain_lo{};
    std::array<double, 3> domain_hi{};
    double min_feature = std::numeric_limits<double>::infinity();

    /// Appends after checking for overlap with every existing box of a
    /// different material; throws InvariantError naming both boxes.
    void add(Box box);

    std::string to_json() const;
};

/// Deterministic box list for the pair: substrate, BPR rails with oxide
/// isolation, per-sheet channel + gate-oxide + high-k + metal-gate wrap,
/// S/D blocks with wrap-around contacts, devices placed per arrangement.
Scene build_pair(const DeviceGeometry& geom, const MaterialTable& materials);

struct VoxelGrid {
    int nx = 0, ny = 0, nz = 0;
    double voxel = 0.0;                // nm, cubic voxels
    std::array<double, 3> origin{};    // nm, grid corner
    std::vector<std::int32_t> region;  // material index per voxel
    std::vector<std::uint8_t> device_mask;  // 0 none, 1 N channel, 2 P channel
    MaterialTable materials;

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny * nz; }
    std::size_t index(int x, int y, int z) const {
        return (static_cast<std::size_t>(z) * ny + y) * nx + x;
    }
    /// Channel voxels of a device: these are both the heater mask and the
    /// temperature monitor region.
    std::vector<std::size_t> channel_voxels(int device) const;
    void validate() const;
};

/// Majority-material voxelization. The grid covers the scene domain with
/// two voxels of lateral margin; voxel centers inside no box get the
/// background material.
VoxelGrid voxelize(const Scene& scene, double voxel_size_nm);

} // namespace thermnet::geometry
