#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/geometry.hpp"
#include "core/phy.hpp"

namespace ncrsim {

struct SinrSample {
    uint64_t seed = 0;
    uint32_t ue = 0;
    BlockGroup group = BlockGroup::Side;
    Direction dir = Direction::Downlink;
    uint64_t slot = 0;
    double sinr_db = 0.0;
};

enum class GroupFilter : uint8_t { All = 0, Central = 1, Side = 2 };

const char* group_name(GroupFilter g);
const char* direction_name(Direction d);

std::vector<double> extract_sinr(std::span<const SinrSample> samples, Direction dir,
                                 GroupFilter group);

/// Empirical CDF: sorted sample points with cumulative probability (i+1)/n.
/// Throws std::invalid_argument on an empty set.
std::vector<std::pair<double, double>> empirical_cdf(std::span<const double> values);

/// Type-7 quantile (linear interpolation between order statistics) of a
/// sorted, non-empty range; q in (0, 1).
double quantile(std::span<const double> sorted_values, double q);

/// quantile(scenario, q) - quantile(baseline, q) on unsorted inputs.
double percentile_delta(std::span<const double> scenario_values,
                        std::span<const double> baseline_values, double q);

struct PercentileEntry {
    std::string scenario;
    Direction dir = Direction::Downlink;
    GroupFilter group = GroupFilter::All;
    size_t count = 0;
    double p10 = 0.0, p50 = 0.0, p90 = 0.0;
    double d10 = 0.0, d50 = 0.0, d90 = 0.0; // gain over the baseline, dB
};

struct PercentileReport {
    std::string baseline;
    std::vector<PercentileEntry> entries; // scenario-major, then dir, group
};

PercentileReport build_percentile_report(
    const std::vector<std::pair<std::string, std::vector<SinrSample>>>& per_scenario,
    const std::string& baseline);

// CSV schema: header row, one sample per line. Doubles are written in
// shortest round-trip form so a re-read reproduces the values bit-exactly.
void write_samples_csv(const std::string& path, const std::string& scenario,
                       std::span<const SinrSample> samples);
std::vector<SinrSample> read_samples_csv(const std::string& path, std::string* scenario = nullptr);

void write_cdf_csv(const std::string& path, const std::string& scenario,
                   std::span<const SinrSample> samples);

/// JSON summary mirroring the percentile report plus run metadata.
void write_summary_json(const std::string& path, const PercentileReport& report,
                        const std::map<std::string, std::string>& metadata);

std::string format_report_table(const PercentileReport& report);

} // namespace ncrsim
