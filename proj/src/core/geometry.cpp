#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncrsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kRadToDeg = 180.0 / kPi;
constexpr double kAccessDowntiltDeg = 12.0;

double wrap_deg(double a) {
    while (a > 180.0) a -= 360.0;
    while (a < -180.0) a += 360.0;
    return a;
}

} // namespace

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double horizontal_distance(const Vec3& a, const Vec3& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::array<Rect, 2> MadridGrid::top_street_sidewalks() const {
    const double grid_w = 3.0 * block_size + 2.0 * (2.0 * sidewalk_width + street_width);
    const double y0 = grid_w; // north edge of the top block row
    return {Rect{0.0, y0, grid_w, y0 + sidewalk_width},
            Rect{0.0, y0 + sidewalk_width + street_width, grid_w,
                 y0 + 2.0 * sidewalk_width + street_width}};
}

double MadridGrid::top_street_center_y() const {
    const double grid_w = 3.0 * block_size + 2.0 * (2.0 * sidewalk_width + street_width);
    return grid_w + sidewalk_width + 0.5 * street_width;
}

MadridGrid build_grid() {
    MadridGrid g;
    const double b = g.block_size;
    const double gap = 2.0 * g.sidewalk_width + g.street_width; // 20 m corridor
    const double pitch = b + gap;
    const double w = 3.0 * b + 2.0 * gap; // 400 m footprint

    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) {
            const double x0 = col * pitch;
            const double y0 = row * pitch;
            g.blocks.push_back({x0, y0, x0 + b, y0 + b});
        }
    }

    // Interior corridors between block columns / rows.
    for (int i = 0; i < 2; ++i) {
        const double c0 = b + i * pitch; // corridor start (120 or 260)
        g.sidewalks.push_back({c0, 0.0, c0 + g.sidewalk_width, w});
        g.sidewalks.push_back({c0 + g.sidewalk_width + g.street_width, 0.0, c0 + gap, w});
        g.streets.push_back({c0 + g.sidewalk_width, 0.0, c0 + g.sidewalk_width + g.street_width, w});
        g.sidewalks.push_back({0.0, c0, w, c0 + g.sidewalk_width});
        g.sidewalks.push_back({0.0, c0 + g.sidewalk_width + g.street_width, w, c0 + gap});
        g.streets.push_back({0.0, c0 + g.sidewalk_width, w, c0 + g.sidewalk_width + g.street_width});
    }

    // The crowded top street along the north edge of the grid.
    g.sidewalks.push_back({0.0, w, w, w + g.sidewalk_width});
    g.streets.push_back({0.0, w + g.sidewalk_width, w, w + g.sidewalk_width + g.street_width});
    g.sidewalks.push_back({0.0, w + g.sidewalk_width + g.street_width, w, w + gap});
    return g;
}

bool parse_scenario_id(const std::string& name, ScenarioId& out) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "s1") { out = ScenarioId::S1; return true; }
    if (s == "s2") { out = ScenarioId::S2; return true; }
    if (s == "s3") { out = ScenarioId::S3; return true; }
    if (s == "s4") { out = ScenarioId::S4; return true; }
    if (s == "s5") { out = ScenarioId::S5; return true; }
    return false;
}

std::string scenario_name(ScenarioId id) {
    switch (id) {
        case ScenarioId::S1: return "s1";
        case ScenarioId::S2: return "s2";
        case ScenarioId::S3: return "s3";
        case ScenarioId::S4: return "s4";
        case ScenarioId::S5: return "s5";
    }
    return "s?";
}

Vec3 unit_from_angles(double az_deg, double el_deg) {
    const double az = az_deg * kDegToRad;
    const double el = el_deg * kDegToRad;
    return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
}

double angular_separation_deg(const PanelSpec& a, const PanelSpec& b) {
    const double c = dot(unit_from_angles(a.az_deg, a.el_deg), unit_from_angles(b.az_deg, b.el_deg));
    return std::acos(std::clamp(c, -1.0, 1.0)) * kRadToDeg;
}

BlockGroup block_group_for_x(double x, const MadridGrid& grid) {
    const double gap = 2.0 * grid.sidewalk_width + grid.street_width;
    const double lo = grid.block_size + 0.5 * gap;              // 130: midline of the west street
    const double hi = grid.block_size + gap + grid.block_size + 0.5 * gap; // 270
    return (x >= lo && x < hi) ? BlockGroup::Central : BlockGroup::Side;
}

namespace {

PanelSpec backhaul_toward(const Vec3& ncr_pos, const Vec3& gnb_pos) {
    const double az = std::atan2(gnb_pos.y - ncr_pos.y, gnb_pos.x - ncr_pos.x) * kRadToDeg;
    const double el = std::atan2(gnb_pos.z - ncr_pos.z, horizontal_distance(gnb_pos, ncr_pos)) * kRadToDeg;
    return {az, el};
}

// Access panel pointed at `aim`, rotated in azimuth by the minimum amount
// needed to keep the 3D mounting separation from the backhaul panel.
PanelSpec access_toward(const Vec3& ncr_pos, const Vec3& aim, const PanelSpec& backhaul) {
    PanelSpec acc;
    acc.az_deg = std::atan2(aim.y - ncr_pos.y, aim.x - ncr_pos.x) * kRadToDeg;
    acc.el_deg = -kAccessDowntiltDeg;
    if (angular_separation_deg(acc, backhaul) >= kMinPanelSeparationDeg) {
        return acc;
    }
    const double ea = acc.el_deg * kDegToRad;
    const double eb = backhaul.el_deg * kDegToRad;
    const double c = (std::cos(kMinPanelSeparationDeg * kDegToRad) - std::sin(ea) * std::sin(eb)) /
                     (std::cos(ea) * std::cos(eb));
    const double need =
        std::acos(std::clamp(c, -1.0, 1.0)) * kRadToDeg + 1e-6; // margin for the >= test
    const double cand1 = backhaul.az_deg + need;
    const double cand2 = backhaul.az_deg - need;
    acc.az_deg = std::abs(wrap_deg(cand1 - acc.az_deg)) <= std::abs(wrap_deg(cand2 - acc.az_deg))
                     ? wrap_deg(cand1)
                     : wrap_deg(cand2);
    return acc;
}

} // namespace

Deployment place_nodes(ScenarioId scenario, const MadridGrid& grid) {
    const double pitch = grid.block_size + 2.0 * grid.sidewalk_width + grid.street_width;
    const double w = 3.0 * grid.block_size + 2.0 * (2.0 * grid.sidewalk_width + grid.street_width);

    Deployment d;
    // gNB on the top edge of the middle bottom block, facing the top street.
    d.gnb.id = kGnbId;
    d.gnb.kind = NodeKind::Gnb;
    d.gnb.pos = {pitch + 0.5 * grid.block_size, grid.block_size, kGnbHeight};
    d.gnb.tx_power_dbm = kGnbPowerDbm;
    d.gnb.group = BlockGroup::None;

    const double street_y = grid.top_street_center_y();
    // Street points fronting the centroids of the top-row blocks.
    const Vec3 aim_west{0.5 * grid.block_size, street_y, kUeHeight};
    const Vec3 aim_center{pitch + 0.5 * grid.block_size, street_y, kUeHeight};
    const Vec3 aim_east{2.0 * pitch + 0.5 * grid.block_size, street_y, kUeHeight};

    auto add_ncr = [&](const Vec3& pos, std::vector<Vec3> aims) {
        NcrPlacement p;
        p.pos = pos;
        p.backhaul = backhaul_toward(pos, d.gnb.pos);
        for (const Vec3& aim : aims) {
            p.access.push_back(access_toward(pos, aim, p.backhaul));
        }
        d.ncrs.push_back(std::move(p));
    };

    switch (scenario) {
        case ScenarioId::S1:
            break;
        case ScenarioId::S2:
            // Middle of the top block's street face, panel across the street.
            add_ncr({pitch + 0.5 * grid.block_size, w, kNcrHeight}, {aim_center});
            break;
        case ScenarioId::S3:
            add_ncr({pitch + 0.5 * grid.block_size, w, kNcrHeight}, {aim_west, aim_east});
            break;
        case ScenarioId::S4:
            // Street-side corners of the middle top block.
            add_ncr({pitch, w, kNcrHeight}, {aim_west});
            add_ncr({pitch + grid.block_size, w, kNcrHeight}, {aim_east});
            break;
        case ScenarioId::S5:
            // Street-side corners of the side top blocks, nearest the
            // center; same mounting as S4 but over the side blocks.
            add_ncr({grid.block_size, w, kNcrHeight}, {aim_west});
            add_ncr({2.0 * pitch, w, kNcrHeight}, {aim_east});
            break;
    }
    return d;
}

Deployment make_deployment(const MadridGrid& grid, const std::vector<NcrPlacement>& ncrs) {
    Deployment d = place_nodes(ScenarioId::S1, grid);
    for (const NcrPlacement& p : ncrs) {
        if (p.access.empty() || p.access.size() > 2) {
            throw std::invalid_argument("NCR must have 1 or 2 access panels");
        }
        for (const PanelSpec& a : p.access) {
            if (angular_separation_deg(a, p.backhaul) < kMinPanelSeparationDeg - 1e-9) {
                throw std::invalid_argument(
                    "access/backhaul panel separation below 120 degrees");
            }
        }
        d.ncrs.push_back(p);
    }
    return d;
}

std::vector<NetworkNode> drop_ues(uint32_t count, const MadridGrid& grid, uint64_t seed) {
    if (count == 0) {
        throw std::invalid_argument("UE count must be positive");
    }
    const auto walks = grid.top_street_sidewalks();
    const double a0 = walks[0].area();
    const double a1 = walks[1].area();
    RngStream rng(derive_seed(seed, "ue-drop"));
    std::vector<NetworkNode> ues;
    ues.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        const Rect& r = rng.uniform() * (a0 + a1) < a0 ? walks[0] : walks[1];
        NetworkNode ue;
        ue.id = kUeIdBase + i;
        ue.kind = NodeKind::Ue;
        ue.pos = {r.x0 + rng.uniform() * r.width(), r.y0 + rng.uniform() * r.height(), kUeHeight};
        ue.tx_power_dbm = kUePowerDbm;
        ue.group = block_group_for_x(ue.pos.x, grid);
        ues.push_back(ue);
    }
    return ues;
}

MobilityState::MobilityState(const std::vector<NetworkNode>& ues, const MadridGrid& grid,
                             uint64_t seed) {
    const auto walks = grid.top_street_sidewalks();
    positions_.reserve(ues.size());
    for (const NetworkNode& ue : ues) {
        positions_.push_back(ue.pos);
        regions_.push_back(walks[0].contains(ue.pos.x, ue.pos.y) ? walks[0] : walks[1]);
        streams_.emplace_back(derive_seed(seed, "mobility", ue.id));
        waypoints_.push_back({});
        draw_waypoint(waypoints_.size() - 1);
    }
}

void MobilityState::draw_waypoint(size_t i) {
    const Rect& r = regions_[i];
    Vec3 w;
    do {
        w = {r.x0 + streams_[i].uniform() * r.width(), r.y0 + streams_[i].uniform() * r.height(),
             kUeHeight};
    } while (horizontal_distance(w, positions_[i]) < 1e-9);
    waypoints_[i] = w;
}

void MobilityState::step(double dt_s) {
    for (size_t i = 0; i < positions_.size(); ++i) {
        double remaining = kUeSpeedMps * dt_s;
        while (remaining > 0.0) {
            const Vec3 d = waypoints_[i] - positions_[i];
            const double dist = std::hypot(d.x, d.y);
            if (dist <= remaining) {
                positions_[i] = waypoints_[i];
                remaining -= dist;
                draw_waypoint(i);
            } else {
                const double s = remaining / dist;
                positions_[i].x += d.x * s;
                positions_[i].y += d.y * s;
                remaining = 0.0;
            }
        }
    }
}

namespace {

// Parameter interval of segment a+t*(b-a) inside the open box slab [lo, hi].
bool clip_axis(double o, double d, double lo, double hi, double& t0, double& t1) {
    if (std::abs(d) < 1e-12) {
        return o > lo + 1e-9 && o < hi - 1e-9;
    }
    double ta = (lo - o) / d;
    double tb = (hi - o) / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    return t0 < t1;
}

} // namespace

bool los_blocked(const Vec3& a, const Vec3& b, const MadridGrid& grid) {
    const Vec3 d = b - a;
    for (const Rect& r : grid.blocks) {
        double t0 = 0.0;
        double t1 = 1.0;
        if (!clip_axis(a.x, d.x, r.x0, r.x1, t0, t1)) continue;
        if (!clip_axis(a.y, d.y, r.y0, r.y1, t0, t1)) continue;
        if (!clip_axis(a.z, d.z, 0.0, grid.building_height, t0, t1)) continue;
        if (t1 - t0 > 1e-9) {
            return true;
        }
    }
    return false;
}

} // namespace ncrsim
