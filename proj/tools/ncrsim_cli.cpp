// Command-line front end for the ncrsim shared library. All simulation
// work goes through the public C API in ncrsim.h.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncrsim.h"

namespace {

struct ResultHolder {
    ncrsim_result* r = nullptr;
    ~ResultHolder() { ncrsim_result_destroy(r); }
};

int die(const char* what) {
    std::fprintf(stderr, "error: %s: %s\n", what, ncrsim_last_error());
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"System-level simulator for NCR-assisted mmWave networks"};

    std::string scenario;
    std::string seeds;
    std::string config_path;
    std::string out_dir = "results";
    int64_t slots = -1;
    int64_t ues = -1;
    double traffic_mbps = -1.0;
    bool validate_only = false;
    bool emit_cdf = false;
    bool dump_assoc = false;
    bool dump_channel = false;

    app.add_option("--scenario", scenario, "Scenario to run: s1..s5, all, or custom");
    app.add_option("--seeds", seeds, "Seed list: '1..10' or '1,5,9'");
    app.add_option("--slots", slots, "Slots per run (0.25 ms each)");
    app.add_option("--ues", ues, "Number of UEs on the top street");
    app.add_option("--traffic-mbps", traffic_mbps, "CBR load per UE per direction");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--config", config_path, "Key-value config file");
    app.add_flag("--validate-config", validate_only, "Parse and validate, then exit");
    app.add_flag("--emit-cdf", emit_cdf, "Also write per-scenario CDF CSV files");
    app.add_flag("--dump-assoc", dump_assoc, "Write association traces per run");
    app.add_flag("--dump-channel", dump_channel, "Write large-scale channel traces per run");

    CLI11_PARSE(app, argc, argv);

    ncrsim_config* cfg = ncrsim_config_create();
    if (!cfg) {
        std::fprintf(stderr, "error: out of memory\n");
        return 1;
    }

    if (!config_path.empty() && ncrsim_config_load_file(cfg, config_path.c_str()) != NCRSIM_OK) {
        ncrsim_config_destroy(cfg);
        return die("loading config");
    }
    auto set = [&](const char* key, const std::string& value) {
        if (ncrsim_config_set(cfg, key, value.c_str()) != NCRSIM_OK) {
            std::fprintf(stderr, "error: --%s: %s\n", key, ncrsim_last_error());
            std::exit(1);
        }
    };
    if (!scenario.empty()) set("scenario", scenario);
    if (!seeds.empty()) set("seeds", seeds);
    if (slots >= 0) set("slots", std::to_string(slots));
    if (ues >= 0) set("ues", std::to_string(ues));
    if (traffic_mbps >= 0.0) set("traffic_mbps", std::to_string(traffic_mbps));

    char msg[512];
    if (ncrsim_config_validate(cfg, msg, sizeof msg) != NCRSIM_OK) {
        std::fprintf(stderr, "config error: %s\n", msg);
        ncrsim_config_destroy(cfg);
        return 2;
    }
    if (validate_only) {
        std::printf("config ok\n");
        ncrsim_config_destroy(cfg);
        return 0;
    }

    char scen_buf[256];
    if (ncrsim_config_scenarios(cfg, scen_buf, sizeof scen_buf) != NCRSIM_OK) {
        ncrsim_config_destroy(cfg);
        return die("reading scenario list");
    }
    std::vector<std::string> scenarios;
    {
        std::string cur;
        for (const char* p = scen_buf;; ++p) {
            if (*p == ' ' || *p == '\0') {
                if (!cur.empty()) scenarios.push_back(cur);
                cur.clear();
                if (*p == '\0') break;
            } else {
                cur.push_back(*p);
            }
        }
    }
    std::vector<uint64_t> seed_list(ncrsim_config_seeds(cfg, nullptr, 0));
    ncrsim_config_seeds(cfg, seed_list.data(), seed_list.size());

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create output directory %s\n", out_dir.c_str());
        ncrsim_config_destroy(cfg);
        return 1;
    }

    std::vector<ResultHolder> merged(scenarios.size());
    for (size_t i = 0; i < scenarios.size(); ++i) {
        for (uint64_t seed : seed_list) {
            if (dump_assoc) {
                set("dump_assoc_csv",
                    out_dir + "/assoc_" + scenarios[i] + "_seed" + std::to_string(seed) + ".csv");
            }
            if (dump_channel) {
                set("dump_channel_csv", out_dir + "/channel_" + scenarios[i] + "_seed" +
                                            std::to_string(seed) + ".csv");
            }
            ResultHolder run;
            if (ncrsim_run(cfg, scenarios[i].c_str(), seed, &run.r) != NCRSIM_OK) {
                ncrsim_config_destroy(cfg);
                return die("simulation");
            }
            std::printf("ran %-6s seed %-4llu  %zu samples\n", scenarios[i].c_str(),
                        static_cast<unsigned long long>(seed),
                        ncrsim_result_sample_count(run.r));
            std::fflush(stdout);
            if (!merged[i].r) {
                merged[i].r = run.r;
                run.r = nullptr;
            } else if (ncrsim_result_merge(merged[i].r, run.r) != NCRSIM_OK) {
                ncrsim_config_destroy(cfg);
                return die("merging results");
            }
        }
        const std::string csv = out_dir + "/samples_" + scenarios[i] + ".csv";
        if (ncrsim_result_write_csv(merged[i].r, csv.c_str()) != NCRSIM_OK) {
            ncrsim_config_destroy(cfg);
            return die("writing samples CSV");
        }
        if (emit_cdf) {
            const std::string cdf = out_dir + "/cdf_" + scenarios[i] + ".csv";
            if (ncrsim_result_write_cdf_csv(merged[i].r, cdf.c_str()) != NCRSIM_OK) {
                ncrsim_config_destroy(cfg);
                return die("writing CDF CSV");
            }
        }
    }

    if (scenarios.size() > 1) {
        size_t baseline = 0;
        for (size_t i = 0; i < scenarios.size(); ++i) {
            if (scenarios[i] == "s1") baseline = i;
        }
        std::vector<const ncrsim_result*> ptrs;
        for (const ResultHolder& h : merged) ptrs.push_back(h.r);

        const std::string summary = out_dir + "/summary.json";
        if (ncrsim_write_summary_json(ptrs.data(), ptrs.size(), baseline, summary.c_str()) !=
            NCRSIM_OK) {
            ncrsim_config_destroy(cfg);
            return die("writing summary");
        }
        const int need = ncrsim_format_gain_table(ptrs.data(), ptrs.size(), baseline, nullptr, 0);
        if (need > 0) {
            std::vector<char> table(static_cast<size_t>(need) + 1);
            ncrsim_format_gain_table(ptrs.data(), ptrs.size(), baseline, table.data(),
                                     table.size());
            std::printf("\n%s", table.data());
        }
        std::printf("summary: %s\n", summary.c_str());
    }

    ncrsim_config_destroy(cfg);
    return 0;
}
