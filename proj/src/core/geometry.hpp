#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/rng.hpp"

namespace ncrsim {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Vec3& a, double s);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
double horizontal_distance(const Vec3& a, const Vec3& b);

/// Axis-aligned rectangle on the ground plane, [x0,x1] x [y0,y1].
struct Rect {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;

    bool contains(double x, double y) const {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
};

// Madrid-grid layout: nine 120 m blocks in a 3x3 arrangement separated by
// 20 m corridors (3 m sidewalk + 14 m street + 3 m sidewalk). The crowded
// street runs along the north edge of the top block row; its two sidewalks
// are the only region UEs occupy. x runs along that street, z is up.
struct MadridGrid {
    std::vector<Rect> blocks;
    std::vector<Rect> sidewalks;
    std::vector<Rect> streets;
    double block_size = 120.0;
    double sidewalk_width = 3.0;
    double street_width = 14.0;
    double building_height = 30.0;

    /// The two sidewalks of the top street (south strip, north strip).
    std::array<Rect, 2> top_street_sidewalks() const;
    /// y-coordinate of the top street's centerline.
    double top_street_center_y() const;
};

MadridGrid build_grid();

enum class NodeKind : uint8_t { Gnb, Ncr, Ue };
enum class BlockGroup : uint8_t { Central, Side, None };

struct NetworkNode {
    uint32_t id = 0;
    NodeKind kind = NodeKind::Ue;
    Vec3 pos;                  // pos.z is the antenna height
    double tx_power_dbm = 0.0;
    BlockGroup group = BlockGroup::None;
};

// Entity constants (heights in m, powers in dBm).
inline constexpr double kGnbHeight = 25.0;
inline constexpr double kNcrHeight = 10.0;
inline constexpr double kUeHeight = 1.5;
inline constexpr double kGnbPowerDbm = 35.0;
inline constexpr double kNcrPowerDbm = 33.0;
inline constexpr double kUePowerDbm = 24.0;
inline constexpr double kUeSpeedMps = 3.0 / 3.6; // 3 km/h

inline constexpr uint32_t kGnbId = 0;
inline constexpr uint32_t kNcrIdBase = 1;
inline constexpr uint32_t kUeIdBase = 1000;

// Access and backhaul panels on one NCR must be mounted at least this far
// apart to keep inter-panel coupling negligible.
inline constexpr double kMinPanelSeparationDeg = 120.0;

enum class ScenarioId { S1, S2, S3, S4, S5 };

bool parse_scenario_id(const std::string& name, ScenarioId& out);
std::string scenario_name(ScenarioId id);

/// Mounting direction of one panel: azimuth CCW from +x, elevation from
/// horizontal (negative = downtilt).
struct PanelSpec {
    double az_deg = 0.0;
    double el_deg = 0.0;
};

struct NcrPlacement {
    Vec3 pos;
    PanelSpec backhaul;
    std::vector<PanelSpec> access; // 1 or 2 panels
};

struct Deployment {
    NetworkNode gnb;
    std::vector<NcrPlacement> ncrs;
};

/// gNB plus the scenario's NCR placements. Access-panel azimuths are aimed
/// at the street point fronting the target block and rotated just enough,
/// when needed, to keep the mounting separation from the backhaul panel at
/// kMinPanelSeparationDeg.
Deployment place_nodes(ScenarioId scenario, const MadridGrid& grid);

/// Builds a deployment from explicit NCR placements (custom scenarios).
/// Throws std::invalid_argument if a placement violates the panel
/// separation rule or panel count bounds.
Deployment make_deployment(const MadridGrid& grid, const std::vector<NcrPlacement>& ncrs);

/// 3D angle in degrees between two (az, el) pointing directions.
double angular_separation_deg(const PanelSpec& a, const PanelSpec& b);

Vec3 unit_from_angles(double az_deg, double el_deg);

/// Block group of a UE standing at street coordinate x: UEs fronting the
/// middle block column are "central", the rest "side" (split at the
/// vertical street midlines).
BlockGroup block_group_for_x(double x, const MadridGrid& grid);

/// Drops `count` UEs uniformly over the two top-street sidewalks.
std::vector<NetworkNode> drop_ues(uint32_t count, const MadridGrid& grid, uint64_t seed);

// Waypoint walk at constant 3 km/h inside a sidewalk rectangle. Each UE
// stays in the sidewalk it was dropped on.
class MobilityState {
  public:
    MobilityState(const std::vector<NetworkNode>& ues, const MadridGrid& grid, uint64_t seed);

    /// Advances every UE by exactly speed*dt (chaining waypoints).
    void step(double dt_s);

    const Vec3& position(size_t ue_index) const { return positions_[ue_index]; }
    size_t size() const { return positions_.size(); }

  private:
    std::vector<Vec3> positions_;
    std::vector<Vec3> waypoints_;
    std::vector<Rect> regions_;
    std::vector<RngStream> streams_;

    void draw_waypoint(size_t i);
};

/// True iff the open 3D segment a-b penetrates the interior of any block
/// (blocks extruded to grid.building_height). Grazing along a block face
/// does not count as blockage. Symmetric in (a, b).
bool los_blocked(const Vec3& a, const Vec3& b, const MadridGrid& grid);

} // namespace ncrsim
