#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncrsim {

enum class Direction : uint8_t { Downlink = 0, Uplink = 1 };

/// One forwarded path as seen by a receiver: the repeater-to-receiver power
/// gain, the repeater gain, and the transmitter-to-repeater power gain.
struct NcrPathGain {
    double access_gain2 = 0.0;   // |gamma_{r,rx}|^2
    double gain_lin = 0.0;       // g_r
    double backhaul_gain2 = 0.0; // |gamma_{tx,r}|^2
};

/// S = |gamma_direct|^2 p + sum_r |gamma_{r,rx}|^2 g_r |gamma_{tx,r}|^2 p.
/// Direct and forwarded copies add in power (no cross-terms).
double useful_power(double p_lin, double direct_gain2, std::span<const NcrPathGain> paths);

/// One co-scheduled transmission as perceived by the victim: the victim's
/// receive gains combined with the interferer's transmit power and beams.
struct InterferingSignal {
    double p_lin = 0.0;
    double direct_gain2 = 0.0;
    std::vector<NcrPathGain> paths;
};

double interference_power(std::span<const InterferingSignal> interferers);

/// N = sigma^2 (1 + sum_r |gamma_{r,rx}|^2 g_r): thermal noise plus the
/// noise amplified and forwarded by every repeater.
double noise_power(double sigma2_lin, std::span<const NcrPathGain> paths);

struct SinrBreakdown {
    double useful = 0.0;
    double interference = 0.0;
    double noise = 0.0;
    double sinr = 0.0; // linear
    int rb = 0;
    Direction direction = Direction::Downlink;
};

SinrBreakdown compute_sinr(double useful, double interference, double noise, int rb,
                           Direction direction);

// SINR-to-BLER mapping: per-MCS AWGN link curves, loadable from the
// packaged text table (one "mcs sinr_db bler" triple per line).
class BlerTable {
  public:
    static BlerTable builtin();
    static BlerTable load_file(const std::string& path);

    /// Block error rate of `mcs` at `sinr_db`, linearly interpolated;
    /// clamped to 1 below and 0 above the tabulated range.
    double bler(int mcs, double sinr_db) const;
    double spectral_efficiency(int mcs) const;
    int num_mcs() const { return static_cast<int>(curves_.size()); }

    void save_file(const std::string& path) const;

  private:
    struct Curve {
        std::vector<double> sinr_db;
        std::vector<double> bler;
    };
    std::vector<Curve> curves_;
};

inline constexpr double kTargetBler = 0.10;
inline constexpr double kOuterLoopDownDb = 1.0;
inline constexpr double kOuterLoopUpDb = 0.1;

struct LinkAdaptationState {
    double offset_db = 0.0;
    double last_sinr_db = 0.0;
    int mcs = 0;
    bool out_of_range = false;
};

/// Highest MCS whose BLER at (sinr_db + offset) stays at or below the 10%
/// target; falls back to MCS 0 (flagged out of range) when even the lowest
/// MCS misses the target.
int sinr_to_mcs(const BlerTable& table, LinkAdaptationState& state, double sinr_db);

/// Outer loop: offset moves -1 dB on a block error, +0.1 dB on success.
void outer_loop_update(LinkAdaptationState& state, bool crc_ok);

/// Data bits one RB carries in one slot at an MCS efficiency (12
/// subcarriers x 14 symbols, 20% control/reference overhead).
double transport_bits_per_rb(double spectral_efficiency);

/// Effective SINR across a user's allocated RBs: geometric mean in linear
/// terms, i.e. the arithmetic mean in dB.
double effective_sinr_db(std::span<const double> sinr_db_values);

} // namespace ncrsim
