#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace ncrsim {

struct CustomNcr {
    Vec3 pos;
    std::vector<PanelSpec> access;
    std::optional<PanelSpec> backhaul; // absent = aligned with the gNB
};

/// Full run configuration. Defaults reproduce the reference setup: 28 GHz,
/// 50 MHz / 66 RBs at 60 kHz subcarriers, 72 pedestrian UEs on the top
/// street, 0.25 ms slots.
struct SimConfig {
    std::string scenario = "s1"; // s1..s5 | all | custom
    std::vector<uint64_t> seeds = {1};
    uint64_t slots = 4000;
    uint32_t num_ues = 72;
    double traffic_mbps = 2.0; // per UE per direction

    uint64_t t_access_slots = 80;    // 20 ms
    uint64_t t_backhaul_slots = 4000; // 1 s
    double ncr_gain_max_db = 70.0;
    bool ncr_forwarding = true;

    double carrier_ghz = 28.0;
    double noise_figure_db = 9.0;
    double building_height_m = 30.0;
    double shadow_corr_m = 13.0;
    double delay_spread_ns = 100.0;
    double rician_k_db = 10.0;
    uint64_t warmup_slots = 100;

    std::string bler_curves_path; // empty = built-in table
    std::string dump_assoc_csv;
    std::string dump_channel_csv;
    std::string out_dir;

    std::vector<CustomNcr> custom_ncrs;

    /// Scenario names this config requests ("all" expands to s1..s5).
    std::vector<std::string> scenario_list() const;
};

/// Parses "a..b" ranges and comma lists of seeds.
std::vector<uint64_t> parse_seed_spec(const std::string& spec);

/// Applies one key/value pair; throws std::invalid_argument on unknown
/// keys or malformed values.
void apply_config_kv(SimConfig& cfg, const std::string& key, const std::string& value);

/// Loads `key = value` lines ('#' starts a comment).
SimConfig parse_config_file(const std::string& path);

/// Every validation problem in the config, empty when runnable.
std::vector<std::string> validate_config(const SimConfig& cfg);

/// Turns a custom NCR entry into a placement; an absent backhaul spec
/// aligns the panel with the gNB.
NcrPlacement resolve_custom_ncr(const CustomNcr& c, const Vec3& gnb_pos);

} // namespace ncrsim
