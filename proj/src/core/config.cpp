#include "core/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ncrsim {

std::vector<std::string> SimConfig::scenario_list() const {
    if (scenario == "all") {
        return {"s1", "s2", "s3", "s4", "s5"};
    }
    return {scenario};
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value for " + key + ": '" + v + "'");
    }
    if (pos != v.size()) {
        throw std::invalid_argument("bad numeric value for " + key + ": '" + v + "'");
    }
    return out;
}

uint64_t parse_u64(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    if (d < 0 || d != static_cast<double>(static_cast<uint64_t>(d))) {
        throw std::invalid_argument("expected a non-negative integer for " + key);
    }
    return static_cast<uint64_t>(d);
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw std::invalid_argument("expected on/off for " + key);
}

std::vector<double> parse_csv_doubles(const std::string& key, const std::string& v,
                                      size_t expect) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(key, trim(item)));
    }
    if (out.size() != expect) {
        throw std::invalid_argument(key + " expects " + std::to_string(expect) +
                                    " comma-separated numbers");
    }
    return out;
}

// ncr.<i>.pos / ncr.<i>.backhaul / ncr.<i>.access.<j>
bool apply_custom_ncr_key(SimConfig& cfg, const std::string& key, const std::string& value) {
    if (key.rfind("ncr.", 0) != 0) {
        return false;
    }
    std::stringstream ss(key.substr(4));
    std::string idx_s, field, sub;
    std::getline(ss, idx_s, '.');
    std::getline(ss, field, '.');
    std::getline(ss, sub, '.');
    size_t idx = 0;
    try {
        idx = std::stoul(idx_s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad NCR index in key: " + key);
    }
    if (idx >= 16) {
        throw std::invalid_argument("NCR index out of range in key: " + key);
    }
    if (cfg.custom_ncrs.size() <= idx) {
        cfg.custom_ncrs.resize(idx + 1);
    }
    CustomNcr& ncr = cfg.custom_ncrs[idx];
    if (field == "pos") {
        const auto v = parse_csv_doubles(key, value, 3);
        ncr.pos = {v[0], v[1], v[2]};
    } else if (field == "backhaul") {
        const auto v = parse_csv_doubles(key, value, 2);
        ncr.backhaul = PanelSpec{v[0], v[1]};
    } else if (field == "access") {
        size_t j = 0;
        try {
            j = std::stoul(sub);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad access panel index in key: " + key);
        }
        if (ncr.access.size() <= j) {
            ncr.access.resize(j + 1);
        }
        const auto v = parse_csv_doubles(key, value, 2);
        ncr.access[j] = PanelSpec{v[0], v[1]};
    } else {
        throw std::invalid_argument("unknown NCR field in key: " + key);
    }
    return true;
}

} // namespace

std::vector<uint64_t> parse_seed_spec(const std::string& spec) {
    std::vector<uint64_t> seeds;
    const auto range = spec.find("..");
    if (range != std::string::npos) {
        const uint64_t a = parse_u64("seeds", trim(spec.substr(0, range)));
        const uint64_t b = parse_u64("seeds", trim(spec.substr(range + 2)));
        if (b < a) {
            throw std::invalid_argument("seed range end below start: " + spec);
        }
        for (uint64_t s = a; s <= b; ++s) {
            seeds.push_back(s);
        }
        return seeds;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        seeds.push_back(parse_u64("seeds", trim(item)));
    }
    if (seeds.empty()) {
        throw std::invalid_argument("empty seed list");
    }
    return seeds;
}

void apply_config_kv(SimConfig& cfg, const std::string& key, const std::string& value) {
    if (apply_custom_ncr_key(cfg, key, value)) return;
    if (key == "scenario") cfg.scenario = value;
    else if (key == "seeds") cfg.seeds = parse_seed_spec(value);
    else if (key == "slots") cfg.slots = parse_u64(key, value);
    else if (key == "ues") cfg.num_ues = static_cast<uint32_t>(parse_u64(key, value));
    else if (key == "traffic_mbps") cfg.traffic_mbps = parse_double(key, value);
    else if (key == "t_access_slots") cfg.t_access_slots = parse_u64(key, value);
    else if (key == "t_backhaul_slots") cfg.t_backhaul_slots = parse_u64(key, value);
    else if (key == "ncr_gain_max_db") cfg.ncr_gain_max_db = parse_double(key, value);
    else if (key == "ncr_forwarding") cfg.ncr_forwarding = parse_bool(key, value);
    else if (key == "carrier_ghz") cfg.carrier_ghz = parse_double(key, value);
    else if (key == "noise_figure_db") cfg.noise_figure_db = parse_double(key, value);
    else if (key == "building_height_m") cfg.building_height_m = parse_double(key, value);
    else if (key == "shadow_corr_m") cfg.shadow_corr_m = parse_double(key, value);
    else if (key == "delay_spread_ns") cfg.delay_spread_ns = parse_double(key, value);
    else if (key == "rician_k_db") cfg.rician_k_db = parse_double(key, value);
    else if (key == "warmup_slots") cfg.warmup_slots = parse_u64(key, value);
    else if (key == "bler_curves") cfg.bler_curves_path = value;
    else if (key == "dump_assoc_csv") cfg.dump_assoc_csv = value;
    else if (key == "dump_channel_csv") cfg.dump_channel_csv = value;
    else if (key == "out_dir") cfg.out_dir = value;
    else throw std::invalid_argument("unknown config key: " + key);
}

SimConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    SimConfig cfg;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'key = value'");
        }
        apply_config_kv(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

std::vector<std::string> validate_config(const SimConfig& cfg) {
    std::vector<std::string> errs;
    ScenarioId id;
    if (cfg.scenario != "all" && cfg.scenario != "custom" &&
        !parse_scenario_id(cfg.scenario, id)) {
        errs.push_back("unknown scenario: " + cfg.scenario);
    }
    if (cfg.slots == 0) errs.push_back("slots must be positive");
    if (cfg.num_ues == 0) errs.push_back("ues must be positive");
    if (cfg.seeds.empty()) errs.push_back("at least one seed required");
    if (cfg.traffic_mbps <= 0.0) errs.push_back("traffic_mbps must be positive");
    if (cfg.t_access_slots == 0 || cfg.t_backhaul_slots == 0) {
        errs.push_back("sweep periods must be positive");
    } else if (cfg.t_backhaul_slots < cfg.t_access_slots) {
        errs.push_back("t_backhaul_slots must be >= t_access_slots");
    }
    if (cfg.carrier_ghz <= 0.0) errs.push_back("carrier_ghz must be positive");
    if (cfg.warmup_slots >= cfg.slots) errs.push_back("warmup_slots must be below slots");
    if (cfg.scenario == "custom") {
        const MadridGrid grid = build_grid();
        const Deployment base = place_nodes(ScenarioId::S1, grid);
        for (size_t i = 0; i < cfg.custom_ncrs.size(); ++i) {
            try {
                make_deployment(grid, {resolve_custom_ncr(cfg.custom_ncrs[i], base.gnb.pos)});
            } catch (const std::exception& e) {
                errs.push_back("ncr." + std::to_string(i) + ": " + e.what());
            }
        }
    }
    return errs;
}

NcrPlacement resolve_custom_ncr(const CustomNcr& c, const Vec3& gnb_pos) {
    NcrPlacement p;
    p.pos = c.pos;
    p.access = c.access;
    if (c.backhaul) {
        p.backhaul = *c.backhaul;
    } else {
        p.backhaul.az_deg =
            std::atan2(gnb_pos.y - c.pos.y, gnb_pos.x - c.pos.x) * 180.0 / M_PI;
        p.backhaul.el_deg =
            std::atan2(gnb_pos.z - c.pos.z, horizontal_distance(gnb_pos, c.pos)) * 180.0 / M_PI;
    }
    return p;
}

} // namespace ncrsim
