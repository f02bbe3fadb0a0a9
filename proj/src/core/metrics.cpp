#include "core/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ncrsim {

const char* group_name(GroupFilter g) {
    switch (g) {
        case GroupFilter::All: return "all";
        case GroupFilter::Central: return "central";
        case GroupFilter::Side: return "side";
    }
    return "?";
}

const char* direction_name(Direction d) {
    return d == Direction::Downlink ? "dl" : "ul";
}

std::vector<double> extract_sinr(std::span<const SinrSample> samples, Direction dir,
                                 GroupFilter group) {
    std::vector<double> out;
    for (const SinrSample& s : samples) {
        if (s.dir != dir) continue;
        if (group == GroupFilter::Central && s.group != BlockGroup::Central) continue;
        if (group == GroupFilter::Side && s.group != BlockGroup::Side) continue;
        out.push_back(s.sinr_db);
    }
    return out;
}

std::vector<std::pair<double, double>> empirical_cdf(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("empirical_cdf: empty sample set");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> cdf;
    cdf.reserve(sorted.size());
    const double n = static_cast<double>(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) {
        cdf.emplace_back(sorted[i], static_cast<double>(i + 1) / n);
    }
    return cdf;
}

double quantile(std::span<const double> sorted_values, double q) {
    if (sorted_values.empty()) {
        throw std::invalid_argument("quantile: empty sample set");
    }
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("quantile: q must be in (0, 1)");
    }
    const double h = (static_cast<double>(sorted_values.size()) - 1.0) * q;
    const size_t lo = static_cast<size_t>(std::floor(h));
    const size_t hi = std::min(lo + 1, sorted_values.size() - 1);
    const double t = h - static_cast<double>(lo);
    return sorted_values[lo] + t * (sorted_values[hi] - sorted_values[lo]);
}

double percentile_delta(std::span<const double> scenario_values,
                        std::span<const double> baseline_values, double q) {
    std::vector<double> a(scenario_values.begin(), scenario_values.end());
    std::vector<double> b(baseline_values.begin(), baseline_values.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return quantile(a, q) - quantile(b, q);
}

PercentileReport build_percentile_report(
    const std::vector<std::pair<std::string, std::vector<SinrSample>>>& per_scenario,
    const std::string& baseline) {
    const auto base_it =
        std::find_if(per_scenario.begin(), per_scenario.end(),
                     [&](const auto& p) { return p.first == baseline; });
    if (base_it == per_scenario.end()) {
        throw std::invalid_argument("baseline scenario missing from report input: " + baseline);
    }
    PercentileReport report;
    report.baseline = baseline;
    for (const auto& [name, samples] : per_scenario) {
        for (Direction dir : {Direction::Downlink, Direction::Uplink}) {
            for (GroupFilter group : {GroupFilter::All, GroupFilter::Central, GroupFilter::Side}) {
                std::vector<double> v = extract_sinr(samples, dir, group);
                std::vector<double> b = extract_sinr(base_it->second, dir, group);
                if (v.empty() || b.empty()) {
                    continue;
                }
                std::sort(v.begin(), v.end());
                std::sort(b.begin(), b.end());
                PercentileEntry e;
                e.scenario = name;
                e.dir = dir;
                e.group = group;
                e.count = v.size();
                e.p10 = quantile(v, 0.1);
                e.p50 = quantile(v, 0.5);
                e.p90 = quantile(v, 0.9);
                e.d10 = e.p10 - quantile(b, 0.1);
                e.d50 = e.p50 - quantile(b, 0.5);
                e.d90 = e.p90 - quantile(b, 0.9);
                report.entries.push_back(std::move(e));
            }
        }
    }
    return report;
}

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

void write_samples_csv(const std::string& path, const std::string& scenario,
                       std::span<const SinrSample> samples) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write CSV: " + path);
    }
    out << "scenario,seed,ue,group,direction,slot,sinr_db\n";
    for (const SinrSample& s : samples) {
        out << scenario << ',' << s.seed << ',' << s.ue << ','
            << (s.group == BlockGroup::Central ? "central" : "side") << ','
            << direction_name(s.dir) << ',' << s.slot << ',' << format_double(s.sinr_db)
            << '\n';
    }
}

std::vector<SinrSample> read_samples_csv(const std::string& path, std::string* scenario) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read CSV: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty CSV: " + path);
    }
    std::vector<SinrSample> samples;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string field;
        SinrSample s;
        std::getline(ss, field, ',');
        if (scenario) *scenario = field;
        std::getline(ss, field, ',');
        s.seed = std::stoull(field);
        std::getline(ss, field, ',');
        s.ue = static_cast<uint32_t>(std::stoul(field));
        std::getline(ss, field, ',');
        s.group = field == "central" ? BlockGroup::Central : BlockGroup::Side;
        std::getline(ss, field, ',');
        s.dir = field == "dl" ? Direction::Downlink : Direction::Uplink;
        std::getline(ss, field, ',');
        s.slot = std::stoull(field);
        std::getline(ss, field, ',');
        double v = 0.0;
        std::from_chars(field.data(), field.data() + field.size(), v);
        s.sinr_db = v;
        samples.push_back(s);
    }
    return samples;
}

void write_cdf_csv(const std::string& path, const std::string& scenario,
                   std::span<const SinrSample> samples) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write CSV: " + path);
    }
    out << "scenario,direction,group,sinr_db,cum_prob\n";
    for (Direction dir : {Direction::Downlink, Direction::Uplink}) {
        for (GroupFilter group : {GroupFilter::All, GroupFilter::Central, GroupFilter::Side}) {
            const std::vector<double> v = extract_sinr(samples, dir, group);
            if (v.empty()) {
                continue;
            }
            for (const auto& [x, p] : empirical_cdf(v)) {
                out << scenario << ',' << direction_name(dir) << ',' << group_name(group) << ','
                    << format_double(x) << ',' << format_double(p) << '\n';
            }
        }
    }
}

void write_summary_json(const std::string& path, const PercentileReport& report,
                        const std::map<std::string, std::string>& metadata) {
    nlohmann::ordered_json j;
    j["baseline"] = report.baseline;
    for (const auto& [k, v] : metadata) {
        j["metadata"][k] = v;
    }
    j["entries"] = nlohmann::ordered_json::array();
    for (const PercentileEntry& e : report.entries) {
        nlohmann::ordered_json je;
        je["scenario"] = e.scenario;
        je["direction"] = direction_name(e.dir);
        je["group"] = group_name(e.group);
        je["samples"] = e.count;
        je["sinr_db"] = {{"p10", e.p10}, {"p50", e.p50}, {"p90", e.p90}};
        je["gain_db"] = {{"p10", e.d10}, {"p50", e.d50}, {"p90", e.d90}};
        j["entries"].push_back(std::move(je));
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write JSON: " + path);
    }
    out << j.dump(2) << '\n';
}

std::string format_report_table(const PercentileReport& report) {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %-4s %-8s %10s %10s %10s  (gain vs %s, dB)\n",
                  "scenario", "dir", "group", "d10", "d50", "d90", report.baseline.c_str());
    os << buf;
    for (const PercentileEntry& e : report.entries) {
        if (e.scenario == report.baseline) {
            continue;
        }
        std::snprintf(buf, sizeof buf, "%-10s %-4s %-8s %10.2f %10.2f %10.2f\n",
                      e.scenario.c_str(), direction_name(e.dir), group_name(e.group), e.d10,
                      e.d50, e.d90);
        os << buf;
    }
    return os.str();
}

} // namespace ncrsim
