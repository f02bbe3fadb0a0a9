#include "core/phy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ncrsim {

double useful_power(double p_lin, double direct_gain2, std::span<const NcrPathGain> paths) {
    double s = direct_gain2 * p_lin;
    for (const NcrPathGain& path : paths) {
        s += path.access_gain2 * path.gain_lin * path.backhaul_gain2 * p_lin;
    }
    return s;
}

double interference_power(std::span<const InterferingSignal> interferers) {
    double i = 0.0;
    for (const InterferingSignal& tx : interferers) {
        i += useful_power(tx.p_lin, tx.direct_gain2, tx.paths);
    }
    return i;
}

double noise_power(double sigma2_lin, std::span<const NcrPathGain> paths) {
    double bracket = 1.0;
    for (const NcrPathGain& path : paths) {
        bracket += path.access_gain2 * path.gain_lin;
    }
    return sigma2_lin * bracket;
}

SinrBreakdown compute_sinr(double useful, double interference, double noise, int rb,
                           Direction direction) {
    SinrBreakdown out;
    out.useful = useful;
    out.interference = interference;
    out.noise = noise;
    out.sinr = useful / (interference + noise);
    out.rb = rb;
    out.direction = direction;
    return out;
}

namespace {

// CQI spectral efficiencies (4-bit table, QPSK..64QAM) used as the MCS
// ladder; index = MCS.
constexpr std::array<double, 15> kMcsEfficiency = {
    0.1523, 0.2344, 0.3770, 0.6016, 0.8770, 1.1758, 1.4766, 1.9141,
    2.4063, 2.7305, 3.3223, 3.9023, 4.5234, 5.1152, 5.5547,
};
constexpr double kCurveSlopeDb = 1.0;   // erfc transition width
constexpr double kImplMarginDb = 1.0;   // SNR loss vs. Shannon at BLER 50%
constexpr double kCurveSpanDb = 5.0;
constexpr double kCurveStepDb = 0.5;

double curve_midpoint_db(int mcs) {
    const double eff = kMcsEfficiency[static_cast<size_t>(mcs)];
    return 10.0 * std::log10(std::pow(2.0, eff) - 1.0) + kImplMarginDb;
}

double awgn_bler(int mcs, double sinr_db) {
    return 0.5 * std::erfc((sinr_db - curve_midpoint_db(mcs)) / (kCurveSlopeDb * std::sqrt(2.0)));
}

} // namespace

BlerTable BlerTable::builtin() {
    BlerTable t;
    t.curves_.resize(kMcsEfficiency.size());
    for (size_t m = 0; m < kMcsEfficiency.size(); ++m) {
        const double mid = curve_midpoint_db(static_cast<int>(m));
        for (double off = -kCurveSpanDb; off <= kCurveSpanDb + 1e-9; off += kCurveStepDb) {
            t.curves_[m].sinr_db.push_back(mid + off);
            t.curves_[m].bler.push_back(awgn_bler(static_cast<int>(m), mid + off));
        }
    }
    return t;
}

BlerTable BlerTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open BLER table: " + path);
    }
    std::map<int, Curve> curves;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        int mcs = 0;
        double sinr = 0.0;
        double bler = 0.0;
        if (!(ss >> mcs >> sinr >> bler)) {
            continue;
        }
        if (mcs < 0 || bler < 0.0 || bler > 1.0) {
            throw std::runtime_error("malformed BLER table entry in " + path);
        }
        curves[mcs].sinr_db.push_back(sinr);
        curves[mcs].bler.push_back(bler);
    }
    if (curves.empty()) {
        throw std::runtime_error("BLER table has no entries: " + path);
    }
    BlerTable t;
    t.curves_.resize(curves.rbegin()->first + 1);
    for (auto& [mcs, curve] : curves) {
        t.curves_[static_cast<size_t>(mcs)] = std::move(curve);
    }
    for (const Curve& c : t.curves_) {
        if (c.sinr_db.empty() || !std::is_sorted(c.sinr_db.begin(), c.sinr_db.end())) {
            throw std::runtime_error("BLER table needs sorted entries for every MCS: " + path);
        }
    }
    return t;
}

void BlerTable::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write BLER table: " + path);
    }
    out << "# AWGN link-level BLER curves, format v1\n";
    out << "# columns: mcs sinr_db bler\n";
    char buf[96];
    for (size_t m = 0; m < curves_.size(); ++m) {
        for (size_t i = 0; i < curves_[m].sinr_db.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%zu %.4f %.9f\n", m, curves_[m].sinr_db[i],
                          curves_[m].bler[i]);
            out << buf;
        }
    }
}

double BlerTable::bler(int mcs, double sinr_db) const {
    const Curve& c = curves_.at(static_cast<size_t>(mcs));
    if (sinr_db <= c.sinr_db.front()) {
        return 1.0;
    }
    if (sinr_db >= c.sinr_db.back()) {
        return 0.0;
    }
    const auto it = std::upper_bound(c.sinr_db.begin(), c.sinr_db.end(), sinr_db);
    const size_t hi = static_cast<size_t>(it - c.sinr_db.begin());
    const size_t lo = hi - 1;
    const double t = (sinr_db - c.sinr_db[lo]) / (c.sinr_db[hi] - c.sinr_db[lo]);
    return c.bler[lo] + t * (c.bler[hi] - c.bler[lo]);
}

double BlerTable::spectral_efficiency(int mcs) const {
    return kMcsEfficiency.at(static_cast<size_t>(mcs));
}

int sinr_to_mcs(const BlerTable& table, LinkAdaptationState& state, double sinr_db) {
    const double effective = sinr_db + state.offset_db;
    int best = -1;
    for (int m = 0; m < table.num_mcs(); ++m) {
        if (table.bler(m, effective) <= kTargetBler) {
            best = m; // thresholds are monotone in m, keep scanning upward
        }
    }
    state.out_of_range = best < 0;
    state.mcs = best < 0 ? 0 : best;
    return state.mcs;
}

void outer_loop_update(LinkAdaptationState& state, bool crc_ok) {
    state.offset_db += crc_ok ? kOuterLoopUpDb : -kOuterLoopDownDb;
}

double transport_bits_per_rb(double spectral_efficiency) {
    return spectral_efficiency * 12.0 * 14.0 * 0.8;
}

double effective_sinr_db(std::span<const double> sinr_db_values) {
    double sum = 0.0;
    for (double v : sinr_db_values) {
        sum += v;
    }
    return sum / static_cast<double>(sinr_db_values.size());
}

} // namespace ncrsim
