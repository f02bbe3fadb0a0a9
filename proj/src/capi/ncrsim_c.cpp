#include "ncrsim.h"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/engine.hpp"
#include "core/metrics.hpp"

struct ncrsim_config {
    ncrsim::SimConfig cfg;
};

struct ncrsim_result {
    std::string scenario;
    std::vector<ncrsim::SinrSample> samples;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(NCRSIM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(NCRSIM_ERR_RUNTIME, e.what());
    }
}

std::vector<std::pair<std::string, std::vector<ncrsim::SinrSample>>> collect(
    const ncrsim_result* const* results, size_t count) {
    std::vector<std::pair<std::string, std::vector<ncrsim::SinrSample>>> out;
    for (size_t i = 0; i < count; ++i) {
        out.emplace_back(results[i]->scenario, results[i]->samples);
    }
    return out;
}

int check_filters(int direction, int group) {
    if (direction != NCRSIM_DIR_DL && direction != NCRSIM_DIR_UL) {
        return fail(NCRSIM_ERR_INVALID_ARGUMENT, "bad direction filter");
    }
    if (group < NCRSIM_GROUP_ALL || group > NCRSIM_GROUP_SIDE) {
        return fail(NCRSIM_ERR_INVALID_ARGUMENT, "bad group filter");
    }
    return NCRSIM_OK;
}

} // namespace

extern "C" {

const char* ncrsim_version(void) {
    return "1.0.0";
}

const char* ncrsim_last_error(void) {
    return g_last_error.c_str();
}

ncrsim_config* ncrsim_config_create(void) {
    return new (std::nothrow) ncrsim_config();
}

void ncrsim_config_destroy(ncrsim_config* cfg) {
    delete cfg;
}

int ncrsim_config_load_file(ncrsim_config* cfg, const char* path) {
    if (!cfg || !path) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        cfg->cfg = ncrsim::parse_config_file(path);
        return NCRSIM_OK;
    });
}

int ncrsim_config_set(ncrsim_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ncrsim::apply_config_kv(cfg->cfg, key, value);
        return NCRSIM_OK;
    });
}

int ncrsim_config_validate(const ncrsim_config* cfg, char* msg, size_t cap) {
    if (!cfg) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null config");
    const auto errs = ncrsim::validate_config(cfg->cfg);
    if (errs.empty()) {
        return NCRSIM_OK;
    }
    if (msg && cap > 0) {
        std::snprintf(msg, cap, "%s", errs.front().c_str());
    }
    return fail(NCRSIM_ERR_CONFIG, errs.front());
}

int ncrsim_config_scenarios(const ncrsim_config* cfg, char* buf, size_t cap) {
    if (!cfg || !buf) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    std::string joined;
    for (const std::string& s : cfg->cfg.scenario_list()) {
        if (!joined.empty()) joined += ' ';
        joined += s;
    }
    if (joined.size() + 1 > cap) {
        return fail(NCRSIM_ERR_INVALID_ARGUMENT, "scenario buffer too small");
    }
    std::memcpy(buf, joined.c_str(), joined.size() + 1);
    return NCRSIM_OK;
}

size_t ncrsim_config_seeds(const ncrsim_config* cfg, uint64_t* buf, size_t cap) {
    if (!cfg) return 0;
    const auto& seeds = cfg->cfg.seeds;
    if (buf) {
        const size_t n = std::min(cap, seeds.size());
        std::copy_n(seeds.begin(), n, buf);
    }
    return seeds.size();
}

int ncrsim_run(const ncrsim_config* cfg, const char* scenario, uint64_t seed,
               ncrsim_result** out) {
    if (!cfg || !scenario || !out) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto errs = ncrsim::validate_config(cfg->cfg);
        if (!errs.empty()) {
            return fail(NCRSIM_ERR_CONFIG, errs.front());
        }
        ncrsim::RunResult r = ncrsim::run_simulation(cfg->cfg, scenario, seed);
        auto* res = new ncrsim_result();
        res->scenario = r.scenario;
        res->samples = std::move(r.samples);
        *out = res;
        return NCRSIM_OK;
    });
}

void ncrsim_result_destroy(ncrsim_result* result) {
    delete result;
}

int ncrsim_result_merge(ncrsim_result* dst, const ncrsim_result* src) {
    if (!dst || !src) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    dst->samples.insert(dst->samples.end(), src->samples.begin(), src->samples.end());
    return NCRSIM_OK;
}

size_t ncrsim_result_sample_count(const ncrsim_result* result) {
    return result ? result->samples.size() : 0;
}

size_t ncrsim_result_samples(const ncrsim_result* result, ncrsim_sample* buf, size_t cap) {
    if (!result || !buf) return 0;
    const size_t n = std::min(cap, result->samples.size());
    for (size_t i = 0; i < n; ++i) {
        const ncrsim::SinrSample& s = result->samples[i];
        buf[i].seed = s.seed;
        buf[i].slot = s.slot;
        buf[i].ue = s.ue;
        buf[i].group = s.group == ncrsim::BlockGroup::Central ? NCRSIM_GROUP_CENTRAL
                                                              : NCRSIM_GROUP_SIDE;
        buf[i].direction =
            s.dir == ncrsim::Direction::Downlink ? NCRSIM_DIR_DL : NCRSIM_DIR_UL;
        buf[i].reserved[0] = buf[i].reserved[1] = 0;
        buf[i].sinr_db = s.sinr_db;
    }
    return n;
}

int ncrsim_result_quantile(const ncrsim_result* result, int direction, int group, double q,
                           double* out_db) {
    if (!result || !out_db) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    if (const int rc = check_filters(direction, group); rc != NCRSIM_OK) return rc;
    return guarded([&] {
        auto v = ncrsim::extract_sinr(result->samples,
                                      static_cast<ncrsim::Direction>(direction),
                                      static_cast<ncrsim::GroupFilter>(group));
        std::sort(v.begin(), v.end());
        *out_db = ncrsim::quantile(v, q);
        return NCRSIM_OK;
    });
}

int ncrsim_percentile_delta(const ncrsim_result* scenario, const ncrsim_result* baseline,
                            int direction, int group, double q, double* out_db) {
    if (!scenario || !baseline || !out_db) {
        return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (const int rc = check_filters(direction, group); rc != NCRSIM_OK) return rc;
    return guarded([&] {
        const auto a = ncrsim::extract_sinr(scenario->samples,
                                            static_cast<ncrsim::Direction>(direction),
                                            static_cast<ncrsim::GroupFilter>(group));
        const auto b = ncrsim::extract_sinr(baseline->samples,
                                            static_cast<ncrsim::Direction>(direction),
                                            static_cast<ncrsim::GroupFilter>(group));
        *out_db = ncrsim::percentile_delta(a, b, q);
        return NCRSIM_OK;
    });
}

int ncrsim_result_write_csv(const ncrsim_result* result, const char* path) {
    if (!result || !path) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ncrsim::write_samples_csv(path, result->scenario, result->samples);
        return NCRSIM_OK;
    });
}

int ncrsim_result_write_cdf_csv(const ncrsim_result* result, const char* path) {
    if (!result || !path) return fail(NCRSIM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ncrsim::write_cdf_csv(path, result->scenario, result->samples);
        return NCRSIM_OK;
    });
}

int ncrsim_write_summary_json(const ncrsim_result* const* results, size_t count,
                              size_t baseline_index, const char* path) {
    if (!results || count == 0 || baseline_index >= count || !path) {
        return fail(NCRSIM_ERR_INVALID_ARGUMENT, "bad summary arguments");
    }
    return guarded([&] {
        const auto per_scenario = collect(results, count);
        const auto report = ncrsim::build_percentile_report(
            per_scenario, results[baseline_index]->scenario);
        std::map<std::string, std::string> meta;
        for (size_t i = 0; i < count; ++i) {
            std::vector<uint64_t> seeds;
            for (const auto& s : results[i]->samples) {
                if (seeds.empty() || seeds.back() != s.seed) seeds.push_back(s.seed);
            }
            std::sort(seeds.begin(), seeds.end());
            seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
            std::string list;
            for (uint64_t s : seeds) {
                if (!list.empty()) list += ',';
                list += std::to_string(s);
            }
            meta["seeds_" + results[i]->scenario] = list;
        }
        ncrsim::write_summary_json(path, report, meta);
        return NCRSIM_OK;
    });
}

int ncrsim_format_gain_table(const ncrsim_result* const* results, size_t count,
                             size_t baseline_index, char* buf, size_t cap) {
    if (!results || count == 0 || baseline_index >= count) {
        return fail(NCRSIM_ERR_INVALID_ARGUMENT, "bad table arguments");
    }
    try {
        const auto per_scenario = collect(results, count);
        const auto report = ncrsim::build_percentile_report(
            per_scenario, results[baseline_index]->scenario);
        const std::string table = ncrsim::format_report_table(report);
        if (buf && cap > 0) {
            std::snprintf(buf, cap, "%s", table.c_str());
        }
        return static_cast<int>(table.size());
    } catch (const std::exception& e) {
        fail(NCRSIM_ERR_RUNTIME, e.what());
        return -1;
    }
}

} // extern "C"
